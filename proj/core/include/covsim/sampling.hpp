#ifndef COVSIM_SAMPLING_HPP
#define COVSIM_SAMPLING_HPP

#include "covsim/rng.hpp"
#include "covsim/types.hpp"

#include <utility>
#include <vector>

namespace covsim {

// Draws zero-mean circularly-symmetric Gaussian vectors with covariance R
// through a cached square-root factor A (A A^H = R, spectral square root).
class GaussianSampler {
  public:
    explicit GaussianSampler(const CxMatrix &r, double tol = kPsdTolerance);

    const CxMatrix &factor() const { return factor_; }
    Eigen::Index dim() const { return factor_.rows(); }

    CxVector draw(Rng &rng) const;
    // n_cols independent draws as columns.
    CxMatrix draw_matrix(Eigen::Index n_cols, Rng &rng) const;

  private:
    CxMatrix factor_;
};

// One draw g ~ CN(0, r).
CxVector draw_channel(const CxMatrix &r, Rng &rng);

// Received pilot snapshots of the two-slot estimation protocol. Slot 1: all
// UEs transmit; slot 2: neighbours only. Columns are independent snapshots
// with fresh fading and noise, normalized by the serving-link SNR.
struct PilotObservation {
    CxMatrix y_all;
    CxMatrix y_neighbors;
    int n_pilots() const { return static_cast<int>(y_all.cols()); }
};

// links[k] draws the channel of link k; snr_ul[k] is the linear uplink SNR
// of link k at the observing BS, with `serving` indexing the served UE.
PilotObservation observe_uplink(const std::vector<GaussianSampler> &links,
                                const std::vector<double> &snr_ul, int serving,
                                int n_pilots, Rng &rng);

// (1/N_p) Y Y^H over the slot-1 snapshots. Hermitian PSD by construction.
CxMatrix sample_q(const PilotObservation &obs);

// Slot-1 sample covariance minus the slot-2 one. Hermitian, not necessarily
// PSD at finite N_p.
CxMatrix sample_r(const PilotObservation &obs);

// W = sum of `dof` outer products of CN(0, F F^H) vectors, sampled in
// O(n^3) via the Bartlett decomposition instead of materializing the dof
// draws. Requires dof >= dimension.
CxMatrix complex_wishart(const CxMatrix &factor, int dof, Rng &rng);

// Samples the (sample_q, sample_r) pair of the two-slot protocol from its
// exact distribution. For n_pilots >= dimension the N_p snapshots are never
// materialized (Bartlett route); below that the snapshot matrices are formed
// explicitly. Both routes produce the same law as observe_uplink followed by
// sample_q/sample_r.
class TwoSlotSampler {
  public:
    // q_slot1/q_slot2: covariances of one slot-1 and one slot-2 snapshot.
    TwoSlotSampler(const CxMatrix &q_slot1, const CxMatrix &q_slot2,
                   int n_pilots);

    std::pair<CxMatrix, CxMatrix> draw(Rng &rng) const; // (q_sample, r_sample)

    int n_pilots() const { return n_pilots_; }

  private:
    GaussianSampler slot1_;
    GaussianSampler slot2_;
    int n_pilots_;
};

} // namespace covsim

#endif
