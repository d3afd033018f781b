#pragma once

#include "frontlab/flag_geometry.hpp"

namespace frontlab {

/// Per-column multiplicities of the averaged projector: column c of the
/// representative belongs to every prefix subspace from its block onward,
/// so the weight of a column in block j is d - j + 1.
Vector level_weights(const Signature& sig);

/// Averaged projector P = (1/d) * sum_k B_k B_k^T over the nested bases.
/// Reference path, formed explicitly as a p x p matrix.
Matrix flag_projector_average(const FlagPoint& X);

/// Windowed projection residual  ||W - P W||_F^2  of a data window whose
/// columns are the T most recent samples (oldest first).
double cost(const FlagPoint& X, const Matrix& W);

/// Cost evaluated at a raw (not necessarily orthonormal) representative.
/// This is the ambient extension differentiated by euclidean_gradient_at,
/// which finite-difference checks probe off the manifold.
double cost_at(const Signature& sig, const Matrix& Y, const Matrix& W);

/// Euclidean gradient of the cost with respect to the representative:
/// with R = W - P W and S = R W^T + W R^T,  grad = -(2/d) * S * Y * Lambda.
Matrix euclidean_gradient(const FlagPoint& X, const Matrix& W);

Matrix euclidean_gradient_at(const Signature& sig, const Matrix& Y,
                             const Matrix& W);

/// Riemannian gradient: tangent projection of the Euclidean gradient.
FlagTangent riemannian_gradient(const FlagPoint& X, const Matrix& W);

} // namespace frontlab
