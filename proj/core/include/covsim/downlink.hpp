#ifndef COVSIM_DOWNLINK_HPP
#define COVSIM_DOWNLINK_HPP

#include "covsim/estimators.hpp"
#include "covsim/rng.hpp"
#include "covsim/scenario.hpp"
#include "covsim/types.hpp"

#include <vector>

namespace covsim {

// Unit-norm leakage-minimizing precoder
//   w ~ (g_hat g_hat^H + sum_k (r_list[k] - phi_list[k]) + I)^{-1} g_hat
// solved as a linear system. Throws on a zero estimate direction.
CxVector precoder(const CxVector &g_hat, const std::vector<CxMatrix> &r_list,
                  const std::vector<CxMatrix> &phi_list);

// Cached form of the same precoder: factors P = sum_k (R_k - Phi_k) + I once
// per drop. The rank-one g_hat g_hat^H term only rescales P^{-1} g_hat
// (Sherman-Morrison with a real positive scalar), so the unit-norm direction
// is P^{-1} g_hat normalized.
class PrecoderSolver {
  public:
    PrecoderSolver(const std::vector<CxMatrix> &r_list,
                   const std::vector<CxMatrix> &phi_list);

    CxVector apply(const CxVector &g_hat) const;

  private:
    Eigen::LDLT<CxMatrix> ldlt_;
};

// Hardening-bound SINR of one UE, assembled from Monte-Carlo estimates of
// the desired-signal statistics and the interference second moments:
//   gamma = signal / (noise + variance + interference).
struct SinrReport {
    double signal_power = 0.0;
    double noise_term = 1.0;
    double variance_term = 0.0;
    double interference_term = 0.0;
    double gamma = 0.0;
    double se = 0.0; // bits/s/Hz
    long trials = 0;
    long failures = 0;
};

double spectral_efficiency(double gamma);
double spectral_efficiency(const SinrReport &report);

struct SinrRunOptions {
    int n_trials = 500;
    int n_pilots = 3000;
    int threads = 1;
    double kappa_r = 0.0; // fitted viaQ weights (per configuration)
    double kappa_q = 0.0;
};

// Monte-Carlo estimate of the downlink SINR of every UE in the scenario for
// each requested estimator kind. Per trial: fresh channels everywhere, fresh
// pilot-based covariance estimates, MMSE channel estimates, and precoders;
// all kinds share the same draws so comparisons are paired. A trial in which
// any cell's estimate fails is excluded for that kind and counted in
// `failures`. Result: one report per UE, per kind (kinds-major).
std::vector<std::vector<SinrReport>>
sinr_monte_carlo(const NetworkScenario &scenario,
                 const std::vector<EstimatorKind> &kinds,
                 const SinrRunOptions &options, const Rng &root);

std::vector<SinrReport> sinr_monte_carlo(const NetworkScenario &scenario,
                                         EstimatorKind kind,
                                         const SinrRunOptions &options,
                                         const Rng &root);

} // namespace covsim

#endif
