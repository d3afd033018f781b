#pragma once

#include <cstddef>
#include <deque>

#include "frontlab/flag_objective.hpp"

namespace frontlab {

/// Backtracking line-search parameters. The first search starts at
/// initial_step; afterwards each search warm-starts at twice the last
/// accepted step.
struct ArmijoParams {
    double initial_step = 1.0;
    double contraction = 0.5;
    double sufficient_decrease = 1e-4;
    int max_backtracks = 25;
};

struct TrackerConfig {
    Signature sig;
    int window_T = 1;
    int steps_K = 5;
    ArmijoParams line_search;
};

/// Sliding-window streaming tracker: per sample, K Riemannian gradient
/// steps on the windowed projection-residual cost over the flag manifold.
class FrontTracker {
public:
    FrontTracker(TrackerConfig cfg, FlagPoint initial);

    /// Append a sample; the oldest one is evicted once the window is full.
    /// No gradient step is taken here.
    void push(const Vector& w);

    /// Run steps_K gradient iterations on the current window. Stops early
    /// when the gradient norm falls below 1e-12 * (1 + ||W||_F^2) or the
    /// line search cannot make progress.
    void step();

    /// Largest step alpha in the backtracking schedule satisfying the
    /// Armijo sufficient-decrease condition for the current window;
    /// 0 when every trial fails.
    double armijo(const FlagPoint& X, const FlagTangent& dir);

    const FlagPoint& estimate() const { return estimate_; }
    const TrackerConfig& config() const { return cfg_; }
    /// Window as a p x len matrix, columns ordered oldest to newest.
    Matrix window_matrix() const;
    int window_size() const { return static_cast<int>(window_.size()); }
    bool window_full() const { return window_size() == cfg_.window_T; }
    std::size_t samples_seen() const { return samples_seen_; }
    double last_accepted_step() const { return last_accepted_; }

private:
    TrackerConfig cfg_;
    FlagPoint estimate_;
    std::deque<Vector> window_;
    double last_accepted_;
    bool has_accepted_ = false;
    std::size_t samples_seen_ = 0;
};

/// Grassmann recursive tracker implemented directly from the Grassmann
/// gradient -2 (I - U U^T) W W^T U and the SVD-form geodesic, sharing no
/// code with the flag route. Serves as the independent reference the
/// single-level tracker is checked against.
class GreatOracle {
public:
    GreatOracle(SubspaceBasis initial, ArmijoParams line_search);

    /// K Grassmann gradient steps on the window, with the same Armijo
    /// policy (including warm start) as FrontTracker.
    void step(const Matrix& W, int K);

    const SubspaceBasis& basis() const { return basis_; }
    double last_accepted_step() const { return last_accepted_; }

private:
    double armijo(const Matrix& U, const Matrix& dir, const Matrix& W);

    SubspaceBasis basis_;
    ArmijoParams ls_;
    double last_accepted_;
    bool has_accepted_ = false;
};

/// One-shot oracle step for a basis with no warm-start history.
SubspaceBasis grassmann_oracle_step(const SubspaceBasis& U, const Matrix& W,
                                    int K, const ArmijoParams& line_search);

} // namespace frontlab
