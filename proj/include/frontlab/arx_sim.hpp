#pragma once

#include <complex>
#include <vector>

#include "frontlab/rng.hpp"

namespace frontlab {

/// SISO ARX regime  y_t = sum_i a_i y_{t-i} + sum_j b_j u_{t-j},
/// coefficients indexed from lag 1.
struct ArxRegime {
    std::vector<double> a; ///< output-lag coefficients
    std::vector<double> b; ///< input-lag coefficients

    int max_lag() const;
};

/// Two-regime switched ARX: regime 1 before t_switch, regime 2 from
/// t_switch on. The regime-2 recurrence reads whatever output history
/// regime 1 produced.
struct SwitchedArx {
    ArxRegime regime1;
    ArxRegime regime2;
    int t_switch = 0;
};

/// Measurement noise scaled to a fixed noise-to-signal ratio:
/// per-step standard deviation sigma * |y_t|.
struct NsrModel {
    double sigma = 0.0;
};

/// The benchmark system: regime 1 (0.3, -0.02 | 0.6, 0.2), regime 2
/// (1.5, -0.74, 0.12 | 0.6, 0.2, 0.05).
SwitchedArx benchmark_switched_arx(int t_switch);

/// Simulate with zero pre-sample initial conditions (y_t = u_t = 0, t < 0).
std::vector<double> simulate(const SwitchedArx& sys, const std::vector<double>& u);

/// Add per-step noise eta_t with standard deviation sigma * |y_t|; y_t = 0
/// produces no noise. The underlying standard-normal draws depend only on
/// the stream, so different sigma values reuse the same realizations.
std::vector<double> add_nsr_noise(const std::vector<double>& y,
                                  const NsrModel& model, RngStream& rng);

/// I.i.d. standard normal scalar input sequence.
std::vector<double> gen_input(RngStream& rng, int t_sim);

/// Roots of the AR characteristic polynomial z^n - a_1 z^{n-1} - ... - a_n,
/// via companion-matrix eigenvalues.
std::vector<std::complex<double>> ar_roots(const ArxRegime& regime);

} // namespace frontlab
