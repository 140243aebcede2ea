#include "covsim/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace covsim {

GaussianSampler::GaussianSampler(const CxMatrix &r, double tol) {
    if (r.rows() != r.cols())
        throw std::invalid_argument("covariance must be square");
    Eigen::SelfAdjointEigenSolver<CxMatrix> es(r);
    if (es.info() != Eigen::Success)
        throw std::invalid_argument("covariance eigendecomposition failed");
    const auto &evals = es.eigenvalues();
    const double scale = std::max(evals.cwiseAbs().maxCoeff(), 1.0);
    if (evals.minCoeff() < -tol * scale)
        throw std::invalid_argument("covariance is not positive semidefinite");
    factor_ = es.eigenvectors() *
              evals.cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

CxVector GaussianSampler::draw(Rng &rng) const {
    return factor_ * rng.complex_gaussian_vector(dim());
}

CxMatrix GaussianSampler::draw_matrix(Eigen::Index n_cols, Rng &rng) const {
    return factor_ * rng.complex_gaussian_matrix(dim(), n_cols);
}

CxVector draw_channel(const CxMatrix &r, Rng &rng) {
    return GaussianSampler(r).draw(rng);
}

PilotObservation observe_uplink(const std::vector<GaussianSampler> &links,
                                const std::vector<double> &snr_ul, int serving,
                                int n_pilots, Rng &rng) {
    if (links.empty() || links.size() != snr_ul.size())
        throw std::invalid_argument("one SNR per link required");
    if (serving < 0 || serving >= static_cast<int>(links.size()))
        throw std::invalid_argument("serving index outside link set");
    if (n_pilots < 1)
        throw std::invalid_argument("need at least one pilot snapshot");

    const Eigen::Index n = links.front().dim();
    const double serving_snr = snr_ul[static_cast<std::size_t>(serving)];
    if (serving_snr <= 0.0)
        throw std::invalid_argument("serving-link SNR must be positive");

    PilotObservation obs;
    obs.y_all = CxMatrix::Zero(n, n_pilots);
    obs.y_neighbors = CxMatrix::Zero(n, n_pilots);
    const double noise_gain = 1.0 / std::sqrt(serving_snr);

    for (int slot = 0; slot < 2; ++slot) {
        CxMatrix &y = slot == 0 ? obs.y_all : obs.y_neighbors;
        for (int col = 0; col < n_pilots; ++col) {
            CxVector snapshot = noise_gain * rng.complex_gaussian_vector(n);
            for (std::size_t k = 0; k < links.size(); ++k) {
                if (slot == 1 && static_cast<int>(k) == serving)
                    continue;
                const double gain = std::sqrt(snr_ul[k] / serving_snr);
                if (gain > 0.0)
                    snapshot += gain * links[k].draw(rng);
            }
            y.col(col) = snapshot;
        }
    }
    return obs;
}

namespace {

CxMatrix scaled_gram(const CxMatrix &y) {
    const Eigen::Index n = y.rows();
    CxMatrix g = CxMatrix::Zero(n, n);
    g.selfadjointView<Eigen::Lower>().rankUpdate(y, 1.0 / y.cols());
    return CxMatrix(g.selfadjointView<Eigen::Lower>());
}

} // namespace

CxMatrix sample_q(const PilotObservation &obs) {
    if (obs.y_all.cols() < 1)
        throw std::invalid_argument("empty observation");
    return scaled_gram(obs.y_all);
}

CxMatrix sample_r(const PilotObservation &obs) {
    if (obs.y_all.cols() < 1 || obs.y_neighbors.cols() != obs.y_all.cols())
        throw std::invalid_argument("both slots must hold the same pilot count");
    return sample_q(obs) - scaled_gram(obs.y_neighbors);
}

CxMatrix complex_wishart(const CxMatrix &factor, int dof, Rng &rng) {
    const Eigen::Index n = factor.rows();
    if (dof < n)
        throw std::invalid_argument(
            "Bartlett sampling requires dof >= dimension");
    // Lower-triangular T with T_ii^2 ~ Gamma(dof - i, 1) and CN(0,1) below
    // the diagonal; then T T^H is Wishart with identity scale.
    CxMatrix t = CxMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        t(j, j) = std::sqrt(rng.gamma(static_cast<double>(dof - j)));
        for (Eigen::Index i = j + 1; i < n; ++i)
            t(i, j) = rng.complex_gaussian();
    }
    CxMatrix g = factor * t.triangularView<Eigen::Lower>();
    CxMatrix w = CxMatrix::Zero(n, n);
    w.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0);
    return CxMatrix(w.selfadjointView<Eigen::Lower>());
}

TwoSlotSampler::TwoSlotSampler(const CxMatrix &q_slot1, const CxMatrix &q_slot2,
                               int n_pilots)
    : slot1_(q_slot1), slot2_(q_slot2), n_pilots_(n_pilots) {
    if (n_pilots < 1)
        throw std::invalid_argument("need at least one pilot snapshot");
    if (q_slot1.rows() != q_slot2.rows())
        throw std::invalid_argument("slot covariances must share a dimension");
}

std::pair<CxMatrix, CxMatrix> TwoSlotSampler::draw(Rng &rng) const {
    const Eigen::Index n = slot1_.dim();
    const double inv_np = 1.0 / n_pilots_;
    CxMatrix q_sample, neighbor_gram;
    if (n_pilots_ >= n) {
        q_sample = inv_np * complex_wishart(slot1_.factor(), n_pilots_, rng);
        neighbor_gram = inv_np * complex_wishart(slot2_.factor(), n_pilots_, rng);
    } else {
        q_sample = scaled_gram(slot1_.draw_matrix(n_pilots_, rng));
        neighbor_gram = scaled_gram(slot2_.draw_matrix(n_pilots_, rng));
    }
    return {q_sample, q_sample - neighbor_gram};
}

} // namespace covsim
