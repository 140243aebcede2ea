#ifndef COVSIM_SCENARIO_HPP
#define COVSIM_SCENARIO_HPP

#include "covsim/corrmodel.hpp"
#include "covsim/geometry.hpp"
#include "covsim/rng.hpp"
#include "covsim/types.hpp"

#include <vector>

namespace covsim {

double db_to_linear(double db);
double linear_to_db(double lin);

// Static settings of the one-ring multi-cell evaluation: SNRs in dB,
// correlation factors, and the worst-case neighbour geometry. Downlink
// cross SNRs follow from the distance multipliers with path-loss exponent 2
// (a neighbour BS at twice the serving distance loses 6 dB).
struct ScenarioParams {
    int cells = 7;
    double snr_ul_serving_db = -7.0;
    double snr_ul_cross_db = -8.6;
    double snr_dl_serving_db = 13.0;
    // One multiplier per interfering link; empty means all neighbours sit at
    // twice the serving distance.
    std::vector<double> neighbor_distance_multipliers;
    double r_h = 0.5;
    double r_v = 0.65;
};

// One drop of the network: SNR tables plus freshly drawn per-link AoAs.
// Immutable once built; trials share it read-only.
struct NetworkScenario {
    AntennaLayout layout = AntennaLayout::ula(1);
    RealMatrix snr_ul; // linear power ratios, (l, k) = BS l to UE k
    RealMatrix snr_dl;
    std::vector<std::vector<CorrelationParams>> links; // [l][k]

    int cells() const { return static_cast<int>(links.size()); }
};

// Uniform AoA draw for every (l, k) link: azimuth on (-pi, pi), elevation on
// (-pi/2, pi/2), with the configured correlation factors attached.
std::vector<std::vector<CorrelationParams>>
draw_aoas(int cells, double r_h, double r_v, Rng &rng);

NetworkScenario build_seven_cell(const AntennaLayout &layout,
                                 const ScenarioParams &params, Rng &rng);

// True covariance of link (l, k) under the scenario's layout.
CxMatrix scenario_link_covariance(const NetworkScenario &scenario, int l,
                                  int k);

} // namespace covsim

#endif
