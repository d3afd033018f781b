#include "frontlab/past_tracker.hpp"

#include <utility>

#include "frontlab/errors.hpp"

namespace frontlab {

PastTracker::PastTracker(Matrix initial_weight, double beta)
    : W_(std::move(initial_weight)), beta_(beta) {
    if (W_.rows() < 1 || W_.cols() < 1 || W_.cols() > W_.rows()) {
        throw InvalidInput("PastTracker: bad weight shape");
    }
    if (!all_finite(W_)) {
        throw InvalidInput("PastTracker: non-finite initial weights");
    }
    if (beta_ <= 0.0 || beta_ > 1.0) {
        throw InvalidInput("PastTracker: beta must lie in (0, 1]");
    }
    Pinv_ = Matrix::Identity(W_.cols(), W_.cols());
}

void PastTracker::update(const Vector& x) {
    if (x.size() != W_.rows()) {
        throw InvalidInput("PastTracker::update: sample has wrong length");
    }
    if (!x.allFinite()) {
        throw InvalidInput("PastTracker::update: non-finite sample");
    }
    const Vector y = W_.transpose() * x;
    const Vector h = Pinv_ * y;
    const Vector g = h / (beta_ + y.dot(h));
    Pinv_ = (Pinv_ - g * h.transpose()) / beta_;
    Pinv_ = 0.5 * (Pinv_ + Pinv_.transpose());
    const Vector e = x - W_ * y;
    W_ += e * g.transpose();
}

SubspaceBasis PastTracker::basis() const {
    const Eigen::Index q = W_.cols();
    Eigen::HouseholderQR<Matrix> qr(W_);
    const Matrix R = qr.matrixQR().topRows(q).triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < q; ++i) {
        if (std::abs(R(i, i)) < 1e-12) {
            throw DegenerateState("PastTracker::basis: weight matrix lost column rank");
        }
    }
    return SubspaceBasis(static_cast<int>(W_.rows()), orthonormalize(W_));
}

} // namespace frontlab
