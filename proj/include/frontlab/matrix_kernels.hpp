#pragma once

#include <Eigen/Dense>

#include "frontlab/rng.hpp"

namespace frontlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thin SVD M = U * diag(s) * V^T with singular values sorted descending.
struct ThinSvd {
    Matrix U; ///< p x r, orthonormal columns
    Vector s; ///< r, descending, nonnegative
    Matrix V; ///< n x r, orthonormal columns
};

bool all_finite(const Matrix& M);

/// Thin SVD of a p x n matrix, r = min(p, n).
/// Throws InvalidInput on non-finite entries.
ThinSvd thin_svd(const Matrix& M);

/// Moore-Penrose pseudoinverse. Singular values below rel_tol * sigma_max
/// are truncated to zero.
Matrix pinv(const Matrix& M, double rel_tol = 1e-10);

/// Matrix exponential of a skew-symmetric matrix; the result is orthogonal
/// with determinant +1. Throws InvalidInput if S is not skew-symmetric
/// (||S + S^T||_F > 1e-12 * max(1, ||S||_F)).
Matrix expm_skew(const Matrix& S);

/// Matrix of i.i.d. N(0, std^2) entries, filled column by column so the
/// layout is reproducible per (seed, stream-id).
Matrix gaussian_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols,
                       double std = 1.0);

/// Thin QR orthonormalization with the positive-R-diagonal sign convention,
/// so the result is a deterministic function of the input.
Matrix orthonormalize(const Matrix& M);

} // namespace frontlab
