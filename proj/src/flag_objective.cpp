#include "frontlab/flag_objective.hpp"

#include "frontlab/errors.hpp"

namespace frontlab {

namespace {

void check_window(const Signature& sig, const Matrix& W) {
    if (W.rows() != sig.ambient()) {
        throw InvalidInput("data window: row count does not match ambient dimension");
    }
    if (W.cols() < 1) {
        throw InvalidInput("data window: need at least one sample");
    }
    if (!all_finite(W)) {
        throw InvalidInput("data window: non-finite entries");
    }
}

/// Residual W - (1/d) Y Lambda Y^T W without forming the p x p projector.
Matrix residual_at(const Signature& sig, const Matrix& Y, const Matrix& W) {
    const Vector lambda = level_weights(sig);
    const Matrix coeffs = Y.transpose() * W;
    return W - Y * (lambda.asDiagonal() * coeffs) / static_cast<double>(sig.levels());
}

} // namespace

Vector level_weights(const Signature& sig) {
    Vector lambda(sig.top_dim());
    for (int k = 1; k <= sig.levels(); ++k) {
        const double w = static_cast<double>(sig.levels() - k + 1);
        lambda.segment(sig.block_begin(k), sig.block_size(k)).setConstant(w);
    }
    return lambda;
}

Matrix flag_projector_average(const FlagPoint& X) {
    const int p = X.sig().ambient();
    Matrix P = Matrix::Zero(p, p);
    for (int k = 1; k <= X.sig().levels(); ++k) {
        const Matrix B = X.rep().leftCols(X.sig().dim(k));
        P += B * B.transpose();
    }
    return P / static_cast<double>(X.sig().levels());
}

double cost(const FlagPoint& X, const Matrix& W) {
    return cost_at(X.sig(), X.rep(), W);
}

double cost_at(const Signature& sig, const Matrix& Y, const Matrix& W) {
    check_window(sig, W);
    if (Y.rows() != sig.ambient() || Y.cols() != sig.top_dim()) {
        throw InvalidInput("cost_at: representative shape does not match signature");
    }
    return residual_at(sig, Y, W).squaredNorm();
}

Matrix euclidean_gradient(const FlagPoint& X, const Matrix& W) {
    return euclidean_gradient_at(X.sig(), X.rep(), W);
}

Matrix euclidean_gradient_at(const Signature& sig, const Matrix& Y,
                             const Matrix& W) {
    check_window(sig, W);
    if (Y.rows() != sig.ambient() || Y.cols() != sig.top_dim()) {
        throw InvalidInput("euclidean_gradient_at: representative shape mismatch");
    }
    const Matrix R = residual_at(sig, Y, W);
    const Matrix S = R * W.transpose() + W * R.transpose();
    const Vector lambda = level_weights(sig);
    return -(2.0 / static_cast<double>(sig.levels())) * (S * Y) * lambda.asDiagonal();
}

FlagTangent riemannian_gradient(const FlagPoint& X, const Matrix& W) {
    return project_tangent(X, euclidean_gradient(X, W));
}

} // namespace frontlab
