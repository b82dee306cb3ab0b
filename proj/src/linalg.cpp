#include "hawkfs/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace hawkfs::linalg {

namespace {

// Inverts singular values above the cutoff, zeroes the rest.
Vector invert_clipped(const Vector& sv, Eigen::Index m, Eigen::Index n) {
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double tol = singular_value_tolerance(m, n, sigma_max);
    Vector inv = Vector::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol) inv(i) = 1.0 / sv(i);
    }
    return inv;
}

}  // namespace

double singular_value_tolerance(Eigen::Index rows, Eigen::Index cols, double sigma_max) {
    return static_cast<double>(std::max(rows, cols)) *
           std::numeric_limits<double>::epsilon() * sigma_max;
}

Matrix pseudoinverse(const Matrix& a) {
    if (a.size() == 0) throw std::invalid_argument("pseudoinverse: empty matrix");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector inv = invert_clipped(svd.singularValues(), a.rows(), a.cols());
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Matrix lstsq_min_norm(const Matrix& a, const Matrix& b) {
    if (a.size() == 0) throw std::invalid_argument("lstsq_min_norm: empty matrix");
    if (a.rows() != b.rows()) throw std::invalid_argument("lstsq_min_norm: row count mismatch");

    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();

    if (m >= 2 * n) {
        // A = Q R with R square; SVD of R completes an SVD of A.
        Eigen::HouseholderQR<Matrix> qr(a);
        const Matrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
        const Matrix qtb = (qr.householderQ().transpose() * b).topRows(n);
        Eigen::BDCSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Vector inv = invert_clipped(svd.singularValues(), m, n);
        return svd.matrixV() * (inv.asDiagonal() * (svd.matrixU().transpose() * qtb));
    }
    if (n >= 2 * m) {
        // A' = Q R  =>  pinv(A) = Q pinv(R')
        Eigen::HouseholderQR<Matrix> qr(a.transpose());
        const Matrix rt = Matrix(qr.matrixQR().topRows(m).triangularView<Eigen::Upper>()).transpose();
        Eigen::BDCSVD<Matrix> svd(rt, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Vector inv = invert_clipped(svd.singularValues(), m, n);
        Matrix x = Matrix::Zero(n, b.cols());
        x.topRows(m) = svd.matrixV() * (inv.asDiagonal() * (svd.matrixU().transpose() * b));
        return qr.householderQ() * x;
    }
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector inv = invert_clipped(svd.singularValues(), m, n);
    return svd.matrixV() * (inv.asDiagonal() * (svd.matrixU().transpose() * b));
}

}  // namespace hawkfs::linalg
