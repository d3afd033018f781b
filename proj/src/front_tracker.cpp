#include "frontlab/front_tracker.hpp"

#include <cmath>
#include <utility>

#include "frontlab/errors.hpp"

namespace frontlab {

namespace {

void check_armijo(const ArmijoParams& ls) {
    if (ls.initial_step <= 0.0 || ls.contraction <= 0.0 || ls.contraction >= 1.0 ||
        ls.sufficient_decrease <= 0.0 || ls.sufficient_decrease >= 1.0 ||
        ls.max_backtracks < 0) {
        throw InvalidInput("ArmijoParams: parameters out of range");
    }
}

double gradient_stop_threshold(const Matrix& W) {
    return 1e-12 * (1.0 + W.squaredNorm());
}

} // namespace

FrontTracker::FrontTracker(TrackerConfig cfg, FlagPoint initial)
    : cfg_(std::move(cfg)),
      estimate_(std::move(initial)),
      last_accepted_(cfg_.line_search.initial_step) {
    if (cfg_.window_T < 1) {
        throw InvalidInput("TrackerConfig: window_T must be at least 1");
    }
    if (cfg_.steps_K < 1) {
        throw InvalidInput("TrackerConfig: steps_K must be at least 1");
    }
    check_armijo(cfg_.line_search);
    if (estimate_.sig() != cfg_.sig) {
        throw InvalidInput("FrontTracker: initial point signature does not match config");
    }
}

void FrontTracker::push(const Vector& w) {
    if (w.size() != cfg_.sig.ambient()) {
        throw InvalidInput("FrontTracker::push: sample has wrong length");
    }
    if (!w.allFinite()) {
        throw InvalidInput("FrontTracker::push: non-finite sample");
    }
    window_.push_back(w);
    if (static_cast<int>(window_.size()) > cfg_.window_T) {
        window_.pop_front();
    }
    ++samples_seen_;
}

Matrix FrontTracker::window_matrix() const {
    if (window_.empty()) {
        throw InvalidInput("FrontTracker: window is empty");
    }
    Matrix W(cfg_.sig.ambient(), static_cast<Eigen::Index>(window_.size()));
    for (std::size_t j = 0; j < window_.size(); ++j) {
        W.col(static_cast<Eigen::Index>(j)) = window_[j];
    }
    return W;
}

void FrontTracker::step() {
    const Matrix W = window_matrix();
    const double stop = gradient_stop_threshold(W);
    for (int k = 0; k < cfg_.steps_K; ++k) {
        FlagTangent grad = riemannian_gradient(estimate_, W);
        if (grad.norm() <= stop) {
            break;
        }
        const FlagTangent dir(estimate_, -grad.D);
        const double alpha = armijo(estimate_, dir);
        if (alpha <= 0.0) {
            break;
        }
        estimate_ = exp_map(estimate_, dir, alpha);
    }
}

double FrontTracker::armijo(const FlagPoint& X, const FlagTangent& dir) {
    const Matrix W = window_matrix();
    const double f0 = cost(X, W);
    const Matrix G = euclidean_gradient(X, W);
    const double slope = (G.transpose() * dir.D).trace();

    const ArmijoParams& ls = cfg_.line_search;
    double alpha = has_accepted_ ? 2.0 * last_accepted_ : ls.initial_step;
    for (int i = 0; i <= ls.max_backtracks; ++i) {
        const FlagPoint candidate = exp_map(X, dir, alpha);
        if (cost(candidate, W) <= f0 + ls.sufficient_decrease * alpha * slope) {
            last_accepted_ = alpha;
            has_accepted_ = true;
            return alpha;
        }
        alpha *= ls.contraction;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Grassmann oracle
// ---------------------------------------------------------------------------

namespace {

double grassmann_cost(const Matrix& U, const Matrix& W) {
    return (W - U * (U.transpose() * W)).squaredNorm();
}

Matrix grassmann_gradient(const Matrix& U, const Matrix& W) {
    const Matrix WWtU = W * (W.transpose() * U);
    return -2.0 * (WWtU - U * (U.transpose() * WWtU));
}

/// Geodesic U(t) = U V cos(S t) V^T + Q sin(S t) V^T from the thin SVD
/// H = Q S V^T of the (horizontal) direction.
Matrix grassmann_geodesic(const Matrix& U, const Matrix& H, double t) {
    const ThinSvd svd = thin_svd(H);
    const Vector cos_st = (t * svd.s).array().cos();
    const Vector sin_st = (t * svd.s).array().sin();
    Matrix Unew = U * (svd.V * cos_st.asDiagonal() * svd.V.transpose()) +
                  svd.U * sin_st.asDiagonal() * svd.V.transpose();
    const Matrix gram = Unew.transpose() * Unew;
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).norm() > 1e-8) {
        Unew = orthonormalize(Unew);
    }
    return Unew;
}

} // namespace

GreatOracle::GreatOracle(SubspaceBasis initial, ArmijoParams line_search)
    : basis_(std::move(initial)),
      ls_(line_search),
      last_accepted_(line_search.initial_step) {
    check_armijo(ls_);
}

double GreatOracle::armijo(const Matrix& U, const Matrix& dir, const Matrix& W) {
    const double f0 = grassmann_cost(U, W);
    const Matrix G = grassmann_gradient(U, W);
    const double slope = (G.transpose() * dir).trace();

    double alpha = has_accepted_ ? 2.0 * last_accepted_ : ls_.initial_step;
    for (int i = 0; i <= ls_.max_backtracks; ++i) {
        const Matrix candidate = grassmann_geodesic(U, dir, alpha);
        if (grassmann_cost(candidate, W) <= f0 + ls_.sufficient_decrease * alpha * slope) {
            last_accepted_ = alpha;
            has_accepted_ = true;
            return alpha;
        }
        alpha *= ls_.contraction;
    }
    return 0.0;
}

void GreatOracle::step(const Matrix& W, int K) {
    if (K < 1) {
        throw InvalidInput("GreatOracle::step: K must be at least 1");
    }
    const double stop = gradient_stop_threshold(W);
    Matrix U = basis_.B;
    for (int k = 0; k < K; ++k) {
        const Matrix G = grassmann_gradient(U, W);
        if (G.norm() <= stop) {
            break;
        }
        const Matrix dir = -G;
        const double alpha = armijo(U, dir, W);
        if (alpha <= 0.0) {
            break;
        }
        U = grassmann_geodesic(U, dir, alpha);
    }
    basis_ = SubspaceBasis(basis_.ambient, std::move(U));
}

SubspaceBasis grassmann_oracle_step(const SubspaceBasis& U, const Matrix& W,
                                    int K, const ArmijoParams& line_search) {
    GreatOracle oracle(U, line_search);
    oracle.step(W, K);
    return oracle.basis();
}

} // namespace frontlab
