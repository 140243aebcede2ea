#ifndef COVSIM_MMSE_HPP
#define COVSIM_MMSE_HPP

#include "covsim/types.hpp"

#include <utility>
#include <vector>

namespace covsim {

// MMSE filter r_hat * q_hat^{-1} with the LU factorization of q_hat cached,
// so one covariance estimate can serve many snapshots. Throws
// SingularMatrixError when q_hat is numerically singular (rcond below the
// 1e-12 guard); harness code reports that as a per-trial failure.
class MmseFilter {
  public:
    MmseFilter(CxMatrix r_hat, const CxMatrix &q_hat);

    // g_hat = r_hat * q_hat^{-1} * y
    CxVector estimate(const CxVector &y) const;

  private:
    CxMatrix r_hat_;
    Eigen::PartialPivLU<CxMatrix> lu_;
};

CxVector mmse_estimate(const CxMatrix &r_hat, const CxMatrix &q_hat,
                       const CxVector &y);

// Covariance of the MMSE estimate: phi = r * q^{-1} * r. For true matrices
// r - phi is the estimation-error covariance and is PSD.
CxMatrix error_covariance(const CxMatrix &r, const CxMatrix &q);

// Mean of ||g - g_hat||^2 over the pairs, divided by trace(r_true).
double normalized_mse(
    const std::vector<std::pair<CxVector, CxVector>> &truth_and_estimates,
    const CxMatrix &r_true);

} // namespace covsim

#endif
