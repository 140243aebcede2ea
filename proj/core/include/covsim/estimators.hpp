#ifndef COVSIM_ESTIMATORS_HPP
#define COVSIM_ESTIMATORS_HPP

#include "covsim/geometry.hpp"
#include "covsim/sampling.hpp"
#include "covsim/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace covsim {

enum class EstimatorKind { kIdeal, kSampleOnly, kViaQ, kAla };

EstimatorKind parse_estimator(std::string_view name);
std::string_view estimator_name(EstimatorKind kind);

// (1 - kappa) * q_sample + kappa * diag(q_sample), kappa in [0, 1].
CxMatrix viaq(const CxMatrix &q_sample, double kappa);

// Accumulates the minimizer of the mean squared Frobenius distance
// || viaq(Q_t, kappa) - Q_true ||_F^2 across (sample, truth) pairs. The
// objective is quadratic in kappa, so the optimum is the ratio of two
// accumulated inner products, clamped to [0, 1].
class KappaFit {
  public:
    void add(const CxMatrix &sample, const CxMatrix &truth);
    double solve() const;
    long count() const { return count_; }

  private:
    double cross_ = 0.0;  // sum of Re<offdiag(Q_t), Q_t - Q_true>
    double energy_ = 0.0; // sum of ||offdiag(Q_t)||_F^2
    long count_ = 0;
};

double optimal_kappa(const std::vector<CxMatrix> &q_samples,
                     const CxMatrix &q_true);

// Replaces every off-diagonal line of a ULA sample covariance by its mean.
// Output is exactly Toeplitz and Hermitian for Hermitian input.
CxMatrix ala_ula(const CxMatrix &q_sample);

// Class-averaging estimator with a precomputed translation-equivalence
// partition; building the partition once amortizes it across trials.
class AlaEstimator {
  public:
    explicit AlaEstimator(const AntennaLayout &layout);
    explicit AlaEstimator(PairPartition partition);

    CxMatrix apply(const CxMatrix &q_sample) const;
    const PairPartition &partition() const { return partition_; }

  private:
    PairPartition partition_;
};

CxMatrix ala_upa(const CxMatrix &q_sample, const AntennaLayout &layout);
CxMatrix ala_generic(const CxMatrix &q_sample,
                     const std::vector<AntennaCoord> &coords);

struct TrueMatrices {
    CxMatrix r;
    CxMatrix q;
};

struct EstimatedPair {
    CxMatrix r_hat;
    CxMatrix q_hat;
};

// Inputs the estimator kinds need beyond the sample matrices. `truth` backs
// the ideal bypass, `ala` holds the cached partition, and the viaQ weights
// are fitted per configuration from a calibration batch.
struct EstimatorContext {
    const TrueMatrices *truth = nullptr;
    const AlaEstimator *ala = nullptr;
    double kappa_r = 0.0;
    double kappa_q = 0.0;
};

EstimatedPair estimate_pair(const CxMatrix &r_sample, const CxMatrix &q_sample,
                            EstimatorKind kind, const EstimatorContext &ctx);
EstimatedPair estimate_pair(const PilotObservation &obs, EstimatorKind kind,
                            const EstimatorContext &ctx);

} // namespace covsim

#endif
