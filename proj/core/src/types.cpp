#include "covsim/types.hpp"

namespace covsim {

bool is_hermitian(const CxMatrix &m, double tol) {
    if (m.rows() != m.cols())
        return false;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double min_eigenvalue(const CxMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CxMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const CxMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CxMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

bool is_psd(const CxMatrix &m, double tol) {
    Eigen::SelfAdjointEigenSolver<CxMatrix> es(m, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().cwiseAbs().maxCoeff();
    return lo >= -tol * std::max(hi, 1.0);
}

CxMatrix hermitized(const CxMatrix &m) { return 0.5 * (m + m.adjoint()); }

} // namespace covsim
