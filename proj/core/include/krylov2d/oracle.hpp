#ifndef KRYLOV2D_ORACLE_HPP
#define KRYLOV2D_ORACLE_HPP

#include <Eigen/Dense>
#include <vector>

#include "krylov2d/lattice.hpp"

namespace krylov2d {

/// Explicit dense matrix of H on the square box |i|, |j| <= box_radius.
/// Test-oracle scale only; the matrix has dimension (2B+1)^2.
class DenseBoxOperator {
public:
    DenseBoxOperator(const PotentialField& field, int box_radius, double diagonal = 4.0);

    int box_radius() const { return box_radius_; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }

    /// Flat index of a site with |i|, |j| <= box_radius.
    Eigen::Index index(Site s) const;

    Eigen::VectorXd unit_vector(Site s) const;

private:
    int box_radius_;
    Eigen::MatrixXd matrix_;
};

/// Reference distance series D_0..D_n computed densely and independently of
/// the matrix-free engine: explicit matrix, an incrementally orthonormalized
/// basis of the Krylov columns, and the projector-based residual
/// |delta_11 - Q Q^T delta_11| per prefix. Requires box_radius >= n + 1 so
/// no iterate ever feels the box boundary.
std::vector<double> oracle_distance_series(const PotentialField& field, int n, int box_radius,
                                           double diagonal = 4.0);

}  // namespace krylov2d

#endif
