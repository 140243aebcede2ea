#include "covsim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covsim {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

std::vector<std::vector<CorrelationParams>>
draw_aoas(int cells, double r_h, double r_v, Rng &rng) {
    constexpr double pi = std::numbers::pi;
    std::vector<std::vector<CorrelationParams>> links(
        static_cast<std::size_t>(cells));
    for (auto &row : links) {
        row.resize(static_cast<std::size_t>(cells));
        for (auto &link : row) {
            link.r_h = r_h;
            link.r_v = r_v;
            link.theta_h = rng.uniform(-pi, pi);
            link.theta_v = rng.uniform(-pi / 2.0, pi / 2.0);
        }
    }
    return links;
}

NetworkScenario build_seven_cell(const AntennaLayout &layout,
                                 const ScenarioParams &params, Rng &rng) {
    const int l_cells = params.cells;
    if (l_cells < 1)
        throw std::invalid_argument("scenario needs at least one cell");
    if (!params.neighbor_distance_multipliers.empty() &&
        static_cast<int>(params.neighbor_distance_multipliers.size()) !=
            l_cells - 1)
        throw std::invalid_argument(
            "need one distance multiplier per interfering link");

    NetworkScenario s;
    s.layout = layout;
    s.snr_ul = RealMatrix(l_cells, l_cells);
    s.snr_dl = RealMatrix(l_cells, l_cells);
    for (int l = 0; l < l_cells; ++l) {
        int neighbor = 0;
        for (int k = 0; k < l_cells; ++k) {
            if (l == k) {
                s.snr_ul(l, k) = db_to_linear(params.snr_ul_serving_db);
                s.snr_dl(l, k) = db_to_linear(params.snr_dl_serving_db);
                continue;
            }
            s.snr_ul(l, k) = db_to_linear(params.snr_ul_cross_db);
            const double mult =
                params.neighbor_distance_multipliers.empty()
                    ? 2.0
                    : params.neighbor_distance_multipliers[static_cast<std::size_t>(
                          neighbor)];
            // Path-loss exponent 2: SNR drops by 20 log10(distance ratio).
            s.snr_dl(l, k) = db_to_linear(params.snr_dl_serving_db -
                                          20.0 * std::log10(mult));
            ++neighbor;
        }
    }
    s.links = draw_aoas(l_cells, params.r_h, params.r_v, rng);
    return s;
}

CxMatrix scenario_link_covariance(const NetworkScenario &scenario, int l,
                                  int k) {
    return link_covariance(
        scenario.links[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)],
        scenario.layout);
}

} // namespace covsim
