#include "covsim/corrmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace covsim {

CxMatrix exp_correlation_matrix(int n, double r, double theta) {
    if (n < 1)
        throw std::invalid_argument("correlation matrix dimension must be >= 1");
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("correlation factor must lie in [0, 1]");
    CxMatrix m(n, n);
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) {
            const int d = col - row;
            m(row, col) = std::polar(std::pow(r, std::abs(d)), d * theta);
        }
    }
    return m;
}

CxMatrix kronecker_covariance(const CxMatrix &r_v, const CxMatrix &r_h) {
    const Eigen::Index m = r_v.rows();
    const Eigen::Index n = r_h.rows();
    if (r_v.cols() != m || r_h.cols() != n)
        throw std::invalid_argument("covariance factors must be square");
    CxMatrix out(m * n, m * n);
    for (Eigen::Index xq = 0; xq < n; ++xq)
        for (Eigen::Index xp = 0; xp < n; ++xp)
            out.block(xp * m, xq * m, m, m) = r_h(xp, xq) * r_v;
    return out;
}

CxMatrix link_covariance(const CorrelationParams &params,
                         const AntennaLayout &layout) {
    switch (layout.kind()) {
    case LayoutKind::kUla:
        return exp_correlation_matrix(layout.size(), params.r_h, params.theta_h);
    case LayoutKind::kUpa:
        return kronecker_covariance(
            exp_correlation_matrix(layout.rows(), params.r_v, params.theta_v),
            exp_correlation_matrix(layout.cols(), params.r_h, params.theta_h));
    case LayoutKind::kGeneric: {
        if (params.r_h < 0.0 || params.r_h > 1.0 || params.r_v < 0.0 ||
            params.r_v > 1.0)
            throw std::invalid_argument("correlation factor must lie in [0, 1]");
        const auto &coords = layout.coords();
        const int n = layout.size();
        CxMatrix out(n, n);
        for (int q = 0; q < n; ++q) {
            for (int p = 0; p < n; ++p) {
                const int dx = coords[q].x - coords[p].x;
                const int dy = coords[q].y - coords[p].y;
                out(p, q) =
                    std::polar(std::pow(params.r_h, std::abs(dx)), dx * params.theta_h) *
                    std::polar(std::pow(params.r_v, std::abs(dy)), dy * params.theta_v);
            }
        }
        return out;
    }
    }
    throw std::logic_error("unknown layout kind");
}

CxMatrix build_q(const std::vector<CxMatrix> &r_list,
                 const std::vector<double> &weights, double noise_scale) {
    if (r_list.empty())
        throw std::invalid_argument("build_q needs at least one covariance");
    if (weights.size() != r_list.size())
        throw std::invalid_argument("one weight per covariance required");
    if (noise_scale < 0.0)
        throw std::invalid_argument("noise scale must be nonnegative");
    const Eigen::Index n = r_list.front().rows();
    CxMatrix q = CxMatrix::Identity(n, n) * noise_scale;
    for (std::size_t k = 0; k < r_list.size(); ++k) {
        if (r_list[k].rows() != n || r_list[k].cols() != n)
            throw std::invalid_argument("covariance dimension mismatch in build_q");
        if (weights[k] < 0.0)
            throw std::invalid_argument("negative SNR weight in build_q");
        q += weights[k] * r_list[k];
    }
    return q;
}

} // namespace covsim
