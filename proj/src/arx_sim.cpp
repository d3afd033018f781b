#include "frontlab/arx_sim.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "frontlab/errors.hpp"
#include "frontlab/matrix_kernels.hpp"

namespace frontlab {

namespace {

void check_regime(const ArxRegime& regime, const char* what) {
    if (regime.a.empty() || regime.b.empty()) {
        throw InvalidInput(std::string(what) + ": regime needs at least one lag");
    }
    for (double c : regime.a) {
        if (!std::isfinite(c)) throw InvalidInput(std::string(what) + ": non-finite coefficient");
    }
    for (double c : regime.b) {
        if (!std::isfinite(c)) throw InvalidInput(std::string(what) + ": non-finite coefficient");
    }
}

double step_regime(const ArxRegime& regime, const std::vector<double>& y,
                   const std::vector<double>& u, int t) {
    double value = 0.0;
    for (std::size_t i = 0; i < regime.a.size(); ++i) {
        const int idx = t - static_cast<int>(i) - 1;
        if (idx >= 0) value += regime.a[i] * y[static_cast<std::size_t>(idx)];
    }
    for (std::size_t j = 0; j < regime.b.size(); ++j) {
        const int idx = t - static_cast<int>(j) - 1;
        if (idx >= 0) value += regime.b[j] * u[static_cast<std::size_t>(idx)];
    }
    return value;
}

} // namespace

int ArxRegime::max_lag() const {
    return static_cast<int>(std::max(a.size(), b.size()));
}

SwitchedArx benchmark_switched_arx(int t_switch) {
    SwitchedArx sys;
    sys.regime1 = ArxRegime{{0.3, -0.02}, {0.6, 0.2}};
    sys.regime2 = ArxRegime{{1.5, -0.74, 0.12}, {0.6, 0.2, 0.05}};
    sys.t_switch = t_switch;
    if (t_switch < sys.regime2.max_lag()) {
        throw InvalidInput("benchmark_switched_arx: switch earlier than regime-2 lags");
    }
    return sys;
}

std::vector<double> simulate(const SwitchedArx& sys, const std::vector<double>& u) {
    check_regime(sys.regime1, "simulate");
    check_regime(sys.regime2, "simulate");
    for (double v : u) {
        if (!std::isfinite(v)) throw InvalidInput("simulate: non-finite input");
    }
    std::vector<double> y(u.size(), 0.0);
    for (int t = 0; t < static_cast<int>(u.size()); ++t) {
        const ArxRegime& regime = (t < sys.t_switch) ? sys.regime1 : sys.regime2;
        y[static_cast<std::size_t>(t)] = step_regime(regime, y, u, t);
    }
    return y;
}

std::vector<double> add_nsr_noise(const std::vector<double>& y,
                                  const NsrModel& model, RngStream& rng) {
    if (model.sigma < 0.0) {
        throw InvalidInput("add_nsr_noise: sigma must be nonnegative");
    }
    std::vector<double> noisy(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
        const double draw = rng.gaussian();
        noisy[t] = y[t] + model.sigma * std::abs(y[t]) * draw;
    }
    return noisy;
}

std::vector<double> gen_input(RngStream& rng, int t_sim) {
    std::vector<double> u(static_cast<std::size_t>(std::max(0, t_sim)));
    for (double& v : u) {
        v = rng.gaussian();
    }
    return u;
}

std::vector<std::complex<double>> ar_roots(const ArxRegime& regime) {
    check_regime(regime, "ar_roots");
    const int n = static_cast<int>(regime.a.size());
    Matrix companion = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        companion(0, j) = regime.a[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i < n; ++i) {
        companion(i, i - 1) = 1.0;
    }
    const Eigen::EigenSolver<Matrix> solver(companion);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    }
    return roots;
}

} // namespace frontlab
