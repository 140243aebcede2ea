#include "covsim/mmse.hpp"

#include <stdexcept>

namespace covsim {

MmseFilter::MmseFilter(CxMatrix r_hat, const CxMatrix &q_hat)
    : r_hat_(std::move(r_hat)), lu_(q_hat) {
    if (q_hat.rows() != q_hat.cols() || r_hat_.rows() != q_hat.rows())
        throw std::invalid_argument("filter matrices must be square and match");
    // Partial-pivot LU tolerates the indefinite sample/ALA matrices that a
    // Cholesky would reject; the rcond guard catches actual singularity.
    if (!(lu_.rcond() > kRcondGuard))
        throw SingularMatrixError("observation covariance is numerically singular");
}

CxVector MmseFilter::estimate(const CxVector &y) const {
    return r_hat_ * lu_.solve(y);
}

CxVector mmse_estimate(const CxMatrix &r_hat, const CxMatrix &q_hat,
                       const CxVector &y) {
    return MmseFilter(r_hat, q_hat).estimate(y);
}

CxMatrix error_covariance(const CxMatrix &r, const CxMatrix &q) {
    Eigen::PartialPivLU<CxMatrix> lu(q);
    if (!(lu.rcond() > kRcondGuard))
        throw SingularMatrixError("covariance is numerically singular");
    return hermitized(r * lu.solve(r));
}

double normalized_mse(
    const std::vector<std::pair<CxVector, CxVector>> &truth_and_estimates,
    const CxMatrix &r_true) {
    if (truth_and_estimates.empty())
        throw std::invalid_argument("need at least one (truth, estimate) pair");
    double sum = 0.0;
    for (const auto &[g, g_hat] : truth_and_estimates)
        sum += (g - g_hat).squaredNorm();
    return sum / static_cast<double>(truth_and_estimates.size()) /
           r_true.real().trace();
}

} // namespace covsim
