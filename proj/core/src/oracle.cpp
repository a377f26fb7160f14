#include "krylov2d/oracle.hpp"

#include <stdexcept>

namespace krylov2d {

DenseBoxOperator::DenseBoxOperator(const PotentialField& field, int box_radius, double diagonal)
    : box_radius_(box_radius) {
    if (box_radius < 1) throw std::invalid_argument("DenseBoxOperator: box_radius must be >= 1");
    const int side = 2 * box_radius + 1;
    const Eigen::Index dim = static_cast<Eigen::Index>(side) * side;
    matrix_ = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = -box_radius; i <= box_radius; ++i) {
        for (int j = -box_radius; j <= box_radius; ++j) {
            const Eigen::Index row = index({i, j});
            matrix_(row, row) = diagonal + field.value({i, j});
            if (i + 1 <= box_radius) matrix_(row, index({i + 1, j})) = -1.0;
            if (i - 1 >= -box_radius) matrix_(row, index({i - 1, j})) = -1.0;
            if (j + 1 <= box_radius) matrix_(row, index({i, j + 1})) = -1.0;
            if (j - 1 >= -box_radius) matrix_(row, index({i, j - 1})) = -1.0;
        }
    }
}

Eigen::Index DenseBoxOperator::index(Site s) const {
    if (std::abs(s.i) > box_radius_ || std::abs(s.j) > box_radius_)
        throw std::out_of_range("DenseBoxOperator::index: site outside the box");
    const int side = 2 * box_radius_ + 1;
    return static_cast<Eigen::Index>(s.i + box_radius_) * side + (s.j + box_radius_);
}

Eigen::VectorXd DenseBoxOperator::unit_vector(Site s) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(matrix_.rows());
    v(index(s)) = 1.0;
    return v;
}

std::vector<double> oracle_distance_series(const PotentialField& field, int n, int box_radius,
                                           double diagonal) {
    if (n < 0) throw std::invalid_argument("oracle_distance_series: n must be >= 0");
    if (box_radius <= n)
        throw std::invalid_argument(
            "oracle_distance_series: box_radius must exceed n, or truncation corrupts iterates");

    const DenseBoxOperator op(field, box_radius, diagonal);
    const Eigen::VectorXd target = op.unit_vector({1, 1});
    const Eigen::Index dim = op.matrix().rows();

    // Orthonormal basis of the Krylov column spans, grown one column at a
    // time with twice-iterated classical Gram-Schmidt. (Raw power columns
    // H^k delta_00 are numerically rank-deficient past k ~ 20, so the span
    // is orthonormalized incrementally instead of factored in one shot.)
    Eigen::MatrixXd q(dim, n + 1);
    q.col(0) = op.unit_vector({0, 0});

    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(n) + 1);
    Eigen::Index cols = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            Eigen::VectorXd w = op.matrix() * q.col(cols - 1);
            for (int pass = 0; pass < 2; ++pass)
                w -= q.leftCols(cols) * (q.leftCols(cols).transpose() * w);
            const double norm = w.norm();
            if (norm > 1e-14) {
                q.col(cols) = w / norm;
                ++cols;
            }
            // else: the span stopped growing; the distance stays constant
        }
        const Eigen::VectorXd residual =
            target - q.leftCols(cols) * (q.leftCols(cols).transpose() * target);
        distances.push_back(residual.norm());
    }
    return distances;
}

}  // namespace krylov2d
