#pragma once

#include "frontlab/flag_geometry.hpp"

namespace frontlab {

/// Projection Approximation Subspace Tracking: exponentially weighted
/// recursive least squares on a non-orthonormal weight matrix, with the
/// inverse input-correlation estimate carried alongside.
class PastTracker {
public:
    /// Starts from the given p x q weight matrix with Pinv = I.
    PastTracker(Matrix initial_weight, double beta);

    /// One RLS update on a new ambient sample.
    void update(const Vector& x);

    /// Thin-QR orthonormalization of the weight matrix.
    /// Throws DegenerateState when the weights have lost column rank.
    SubspaceBasis basis() const;

    const Matrix& weight() const { return W_; }
    const Matrix& inverse_correlation() const { return Pinv_; }
    double beta() const { return beta_; }

private:
    Matrix W_;    ///< p x q subspace weights
    Matrix Pinv_; ///< q x q, symmetric
    double beta_;
};

} // namespace frontlab
