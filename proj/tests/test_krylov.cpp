#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "krylov2d/krylov.hpp"

using namespace krylov2d;

TEST_CASE("first two distances are exactly one") {
    for (OrthMode mode : {OrthMode::full_gram_schmidt(), OrthMode::three_term(),
                          OrthMode::three_term(1)}) {
        const PotentialField field(1.0, 3, 0);
        const DistanceSeries series = run_krylov(field, 5, mode);
        REQUIRE(series.terms.size() == 6);
        CHECK(series.terms[0].distance == 1.0);
        CHECK(series.terms[1].distance == 1.0);
        CHECK(series.terms[0].bessel_term == 0.0);
        CHECK(series.terms[1].bessel_term == 0.0);
    }
}

TEST_CASE("zero disorder distance at n = 2") {
    // m_2 has (1,1)-entry 2 and squared norm 20, so the Bessel term is 0.2
    // and D_2 = sqrt(0.8).
    const PotentialField zero(0.0, 1, 0);
    for (OrthMode mode : {OrthMode::full_gram_schmidt(), OrthMode::three_term()}) {
        const DistanceSeries series = run_krylov(zero, 2, mode);
        CHECK(series.terms[2].bessel_term == doctest::Approx(0.2).epsilon(1e-14));
        CHECK(series.terms[2].distance ==
              doctest::Approx(std::sqrt(0.8)).epsilon(1e-13));
    }
}

TEST_CASE("orthogonal vectors at small k") {
    const PotentialField zero(0.0, 1, 0);

    const DiamondVector m0 = orthogonal_vector(zero, 0, OrthMode::full_gram_schmidt());
    CHECK(m0.radius() == 0);
    CHECK(m0.at({0, 0}) == 1.0);

    const DiamondVector m1 = orthogonal_vector(zero, 1, OrthMode::full_gram_schmidt());
    CHECK(m1.radius() == 1);
    CHECK(m1.at({0, 0}) == 0.0);  // H d00 - 4 d00 cancels the origin
    CHECK(m1.at({1, 0}) == -1.0);
    CHECK(m1.at({0, -1}) == -1.0);

    const DiamondVector m2 = orthogonal_vector(zero, 2, OrthMode::three_term());
    CHECK(m2.at({1, 1}) == 2.0);
    CHECK(m2.at({2, 0}) == 1.0);
    CHECK(m2.at({0, 0}) == 0.0);
    CHECK(m2.at({1, 0}) == 0.0);
    CHECK(m2.squared_norm() == 20.0);
}

TEST_CASE("full Gram-Schmidt basis is pairwise orthogonal") {
    const PotentialField field(0.5, 11, 0);
    const std::vector<DiamondVector> basis = gram_schmidt_basis(field, 40);
    REQUIRE(basis.size() == 41);
    std::vector<double> norms(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        norms[k] = std::sqrt(basis[k].squared_norm());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = j + 1; k < basis.size(); ++k)
            CHECK(std::abs(dot(basis[j], basis[k])) <= 1e-9 * norms[j] * norms[k]);
}

TEST_CASE("distance series is monotone with bounded Bessel sums") {
    for (std::uint64_t seed : {2ULL, 9ULL, 31ULL}) {
        const PotentialField field(1.7, seed, 0);
        const DistanceSeries series = run_krylov(field, 50, OrthMode::full_gram_schmidt());
        for (std::size_t t = 1; t < series.terms.size(); ++t) {
            CHECK(series.terms[t].distance <= series.terms[t - 1].distance);
            CHECK(series.terms[t].partial_sum >= series.terms[t - 1].partial_sum);
        }
        CHECK(series.terms.back().partial_sum <= 1.0 + 1e-9);
        CHECK(series.drift <= 1e-9);
    }
}

TEST_CASE("recurrence with per-step reorthogonalization matches Gram-Schmidt") {
    const PotentialField field(1.0, 7, 0);
    const DistanceSeries gs = run_krylov(field, 30, OrthMode::full_gram_schmidt());
    const DistanceSeries rec = run_krylov(field, 30, OrthMode::three_term(1));
    const DistanceSeries pure = run_krylov(field, 30, OrthMode::three_term());
    REQUIRE(gs.terms.size() == rec.terms.size());
    REQUIRE(gs.terms.size() == pure.terms.size());
    for (std::size_t t = 0; t < gs.terms.size(); ++t) {
        CHECK(std::abs(gs.terms[t].distance - rec.terms[t].distance) <= 1e-8);
        CHECK(std::abs(gs.terms[t].distance - pure.terms[t].distance) <= 1e-8);
    }
}

TEST_CASE("distance series does not depend on the Laplacian diagonal") {
    for (double c : {0.3, 1.0}) {
        const PotentialField field(c, 13, 0);
        KrylovOptions shifted;
        shifted.diagonal = 0.0;  // -laplacian minus 4I: pure off-diagonal stencil
        const DistanceSeries a = run_krylov(field, 50, OrthMode::full_gram_schmidt());
        const DistanceSeries b = run_krylov(field, 50, OrthMode::full_gram_schmidt(), shifted);
        for (std::size_t t = 0; t < a.terms.size(); ++t)
            CHECK(std::abs(a.terms[t].distance - b.terms[t].distance) <= 1e-8);
    }
}

TEST_CASE("runs are bit-reproducible") {
    const PotentialField field(2.2, 77, 5);
    const DistanceSeries a = run_krylov(field, 40, OrthMode::three_term());
    const DistanceSeries b = run_krylov(field, 40, OrthMode::three_term());
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t t = 0; t < a.terms.size(); ++t) {
        CHECK(std::memcmp(&a.terms[t].distance, &b.terms[t].distance, sizeof(double)) == 0);
        CHECK(std::memcmp(&a.terms[t].bessel_term, &b.terms[t].bessel_term,
                          sizeof(double)) == 0);
    }
    CHECK(a.drift == b.drift);
}

TEST_CASE("breakdown terminates the series and flags it") {
    // An absurdly large threshold forces the invariant-subspace exit path:
    // |m_1|^2 ~ 4 falls below it immediately.
    KrylovOptions options;
    options.breakdown_rel_threshold = 1e6;
    const PotentialField field(1.0, 5, 0);
    const DistanceSeries series = run_krylov(field, 10, OrthMode::three_term(), options);
    CHECK(series.breakdown);
    CHECK(series.breakdown_step == 1);
    CHECK(series.terms.size() == 1);

    CHECK_THROWS_AS(orthogonal_vector(field, 3, OrthMode::three_term(), options),
                    breakdown_error);
}

TEST_CASE("degenerate partial sums raise an error") {
    // Tightening the tolerance below a genuine Bessel term makes the guard fire.
    KrylovOptions options;
    options.degeneracy_tolerance = -0.9;  // threshold 0.1 < the 0.2 term at k = 2
    const PotentialField zero(0.0, 1, 0);
    CHECK_THROWS_AS(run_krylov(zero, 5, OrthMode::full_gram_schmidt(), options),
                    degeneracy_error);
}

TEST_CASE("deep recurrence runs rescale instead of overflowing") {
    const PotentialField field(3.0, 17, 0);
    const DistanceSeries series = run_krylov(field, 450, OrthMode::three_term());
    CHECK(series.scale_log2 < 0);
    for (const DistanceStep& step : series.terms) {
        CHECK(std::isfinite(step.distance));
        CHECK(std::isfinite(step.bessel_term));
    }
    CHECK(series.terms.back().partial_sum <= 1.0 + 1e-6);
}

TEST_CASE("argument validation") {
    const PotentialField field(1.0, 1, 0);
    CHECK_THROWS_AS(run_krylov(field, 0, OrthMode::full_gram_schmidt()),
                    std::invalid_argument);
    CHECK_THROWS_AS(orthogonal_vector(field, -1, OrthMode::full_gram_schmidt()),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_krylov(field, 5, OrthMode::three_term(0)), std::invalid_argument);
}
