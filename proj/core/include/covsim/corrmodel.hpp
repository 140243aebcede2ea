#ifndef COVSIM_CORRMODEL_HPP
#define COVSIM_CORRMODEL_HPP

#include "covsim/geometry.hpp"
#include "covsim/types.hpp"

#include <vector>

namespace covsim {

// Long-term statistics of one BS-UE link: correlation factors and angles of
// arrival for the azimuth (h) and elevation (v) dimensions.
struct CorrelationParams {
    double r_h = 0.0;
    double r_v = 0.0;
    double theta_h = 0.0; // radians
    double theta_v = 0.0; // radians
};

// Exponential spatial correlation: entry (m, n) = r^|n-m| * exp(j(n-m)theta).
// Toeplitz, Hermitian, unit diagonal.
CxMatrix exp_correlation_matrix(int n, double r, double theta);

// R = r_v (x) r_h composed so that entry ((x,y),(x',y')) under the
// column-major antenna indexing p = x*M + y equals r_h(x,x') * r_v(y,y').
// With that indexing this is kron(r_h, r_v); the elevation factor varies
// with the fast (row) index.
CxMatrix kronecker_covariance(const CxMatrix &r_v, const CxMatrix &r_h);

// Model covariance of one link for a given layout. ULA uses the azimuth
// dimension only; UPA composes both; generic lattice layouts evaluate the
// separable model entry-wise from the coordinate displacements.
CxMatrix link_covariance(const CorrelationParams &params,
                         const AntennaLayout &layout);

// Q = sum_k weights[k] * r_list[k] + noise_scale * I. With unit weights and
// noise_scale = 1/snr this is the covariance of the composite uplink
// observation; the weighted form keeps Q equal to the second moment of the
// observation normalized by the serving-link SNR.
CxMatrix build_q(const std::vector<CxMatrix> &r_list,
                 const std::vector<double> &weights, double noise_scale);

} // namespace covsim

#endif
