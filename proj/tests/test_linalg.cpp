#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hawkfs/linalg.hpp"
#include "hawkfs/reference.hpp"
#include "hawkfs/rng.hpp"

using namespace hawkfs;

namespace {

Matrix random_matrix(Eigen::Index m, Eigen::Index n, Rng& rng) {
    Matrix a(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    return a;
}

// Largest relative violation of the four Penrose conditions.
double penrose_violation(const Matrix& a, const Matrix& p) {
    const double na = std::max(a.norm(), 1e-300);
    const double np = std::max(p.norm(), 1e-300);
    const Matrix ap = a * p;
    const Matrix pa = p * a;
    const double c1 = (ap * a - a).norm() / na;
    const double c2 = (pa * p - p).norm() / np;
    const double c3 = (ap.transpose() - ap).norm() / std::max(1.0, ap.norm());
    const double c4 = (pa.transpose() - pa).norm() / std::max(1.0, pa.norm());
    return std::max({c1, c2, c3, c4});
}

}  // namespace

TEST_CASE("pseudoinverse of the identity is the identity") {
    const Matrix id = Matrix::Identity(4, 4);
    CHECK((linalg::pseudoinverse(id) - id).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("pseudoinverse inverts nonzero singular values and zeroes the rest") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 2.0;
    const Matrix p = linalg::pseudoinverse(a);
    CHECK(p(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(0, 1) == 0.0);
    CHECK(p(1, 0) == 0.0);
    CHECK(p(1, 1) == 0.0);
}

TEST_CASE("pseudoinverse of a random 5x3 matrix satisfies the Penrose conditions") {
    Rng rng(42);
    const Matrix a = random_matrix(5, 3, rng);
    CHECK(penrose_violation(a, linalg::pseudoinverse(a)) < 1e-10);
}

TEST_CASE("pseudoinverse handles rank-deficient and degenerate shapes") {
    Rng rng(7);
    // rank-1 outer product
    const Matrix u = random_matrix(6, 1, rng);
    const Matrix v = random_matrix(4, 1, rng);
    const Matrix a = u * v.transpose();
    CHECK(penrose_violation(a, linalg::pseudoinverse(a)) < 1e-10);

    const Matrix zero = Matrix::Zero(3, 2);
    CHECK(linalg::pseudoinverse(zero).norm() == 0.0);

    const Matrix row = random_matrix(1, 5, rng);
    CHECK(penrose_violation(row, linalg::pseudoinverse(row)) < 1e-10);
}

TEST_CASE("lstsq_min_norm agrees with the explicit pseudoinverse product") {
    Rng rng(3);
    for (const auto [m, n] : {std::pair<int, int>{40, 7}, {7, 40}, {12, 9}, {9, 12}, {10, 10}}) {
        const Matrix a = random_matrix(m, n, rng);
        const Matrix b = random_matrix(m, 3, rng);
        const Matrix direct = linalg::pseudoinverse(a) * b;
        const Matrix solved = linalg::lstsq_min_norm(a, b);
        CHECK((direct - solved).norm() < 1e-9 * (1.0 + direct.norm()));
    }
}

TEST_CASE("lstsq_min_norm matches the normal equations on full-rank systems") {
    Rng rng(11);
    const Matrix a = random_matrix(50, 8, rng);
    const Matrix b = random_matrix(50, 2, rng);
    const Matrix x1 = linalg::lstsq_min_norm(a, b);
    const Matrix x2 = reference::normal_equation_solve(a, b);
    CHECK((x1 - x2).norm() < 1e-8 * (1.0 + x2.norm()));
}

TEST_CASE("lstsq_min_norm produces a least-squares minimiser on rank-deficient systems") {
    Rng rng(19);
    Matrix a = random_matrix(30, 6, rng);
    a.col(3) = a.col(0) + a.col(1);  // exact linear dependence
    a.row(20) = a.row(2);            // duplicated sample
    const Matrix b = random_matrix(30, 2, rng);
    const Matrix x = linalg::lstsq_min_norm(a, b);
    const double residual = (a.transpose() * (a * x - b)).norm() / (a.transpose() * b).norm();
    CHECK(residual < 1e-10);
}

TEST_CASE("lstsq_min_norm solution norm never exceeds other minimisers") {
    // On a rank-deficient system the pseudoinverse picks the minimum-norm
    // minimiser; adding any null-space component can only grow the norm.
    Rng rng(23);
    Matrix a = random_matrix(20, 5, rng);
    a.col(4) = 2.0 * a.col(1);
    const Matrix b = random_matrix(20, 1, rng);
    const Matrix x = linalg::lstsq_min_norm(a, b);

    Eigen::FullPivLU<Matrix> lu(a);
    const Matrix null_space = lu.kernel();
    REQUIRE(null_space.cols() >= 1);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix shifted = x + null_space.col(0) * rng.uniform(-2.0, 2.0);
        CHECK(x.norm() <= shifted.norm() + 1e-12);
        // both are minimisers
        CHECK((a * shifted - b).norm() == doctest::Approx((a * x - b).norm()).epsilon(1e-9));
    }
}
