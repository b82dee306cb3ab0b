#pragma once

#include <Eigen/Dense>

namespace hawkfs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace linalg {

// Singular values at or below max(m, n) * eps * sigma_max are treated as
// zero, both here and in lstsq_min_norm.
double singular_value_tolerance(Eigen::Index rows, Eigen::Index cols, double sigma_max);

// Moore-Penrose pseudoinverse via SVD with the tolerance above.
Matrix pseudoinverse(const Matrix& a);

// Minimum-norm least-squares solution X = pinv(A) * B without forming the
// pseudoinverse. Tall and wide systems are first reduced by a Householder
// QR so the SVD runs on the small square factor; the combined factorization
// is an SVD of A itself, with identical singular values and thresholding.
Matrix lstsq_min_norm(const Matrix& a, const Matrix& b);

}  // namespace linalg
}  // namespace hawkfs
