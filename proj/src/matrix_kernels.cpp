#include "frontlab/matrix_kernels.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "frontlab/errors.hpp"

namespace frontlab {

bool all_finite(const Matrix& M) {
    return M.allFinite();
}

ThinSvd thin_svd(const Matrix& M) {
    if (!all_finite(M)) {
        throw InvalidInput("thin_svd: non-finite entries");
    }
    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return ThinSvd{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Matrix pinv(const Matrix& M, double rel_tol) {
    if (rel_tol <= 0.0) {
        throw InvalidInput("pinv: rel_tol must be positive");
    }
    const ThinSvd svd = thin_svd(M);
    const double cutoff = rel_tol * (svd.s.size() > 0 ? svd.s(0) : 0.0);
    Vector inv_s = Vector::Zero(svd.s.size());
    for (Eigen::Index i = 0; i < svd.s.size(); ++i) {
        if (svd.s(i) > cutoff && svd.s(i) > 0.0) {
            inv_s(i) = 1.0 / svd.s(i);
        }
    }
    return svd.V * inv_s.asDiagonal() * svd.U.transpose();
}

Matrix expm_skew(const Matrix& S) {
    if (S.rows() != S.cols()) {
        throw InvalidInput("expm_skew: matrix must be square");
    }
    if (!all_finite(S)) {
        throw InvalidInput("expm_skew: non-finite entries");
    }
    const double skew_defect = (S + S.transpose()).norm();
    if (skew_defect > 1e-12 * std::max(1.0, S.norm())) {
        throw InvalidInput("expm_skew: matrix is not skew-symmetric");
    }
    // Scaling-and-squaring Pade approximation (Eigen MatrixFunctions).
    return S.exp();
}

Matrix gaussian_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols,
                       double std) {
    if (std < 0.0) {
        throw InvalidInput("gaussian_matrix: std must be nonnegative");
    }
    Matrix M(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            M(i, j) = std * rng.gaussian();
        }
    }
    return M;
}

Matrix orthonormalize(const Matrix& M) {
    if (!all_finite(M)) {
        throw InvalidInput("orthonormalize: non-finite entries");
    }
    const Eigen::Index r = std::min(M.rows(), M.cols());
    Eigen::HouseholderQR<Matrix> qr(M);
    Matrix Q = qr.householderQ() * Matrix::Identity(M.rows(), r);
    const Matrix R = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < r; ++i) {
        if (R(i, i) < 0.0) {
            Q.col(i) = -Q.col(i);
        }
    }
    return Q;
}

} // namespace frontlab
