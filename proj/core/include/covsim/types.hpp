#ifndef COVSIM_TYPES_HPP
#define COVSIM_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace covsim {

using Complex = std::complex<double>;
using CxMatrix = Eigen::MatrixXcd;
using CxVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Relative eigenvalue tolerance used when validating positive semidefiniteness.
inline constexpr double kPsdTolerance = 1e-10;

// Reciprocal-condition-number guard for linear solves. Systems below this are
// treated as numerically singular and reported as per-trial failures.
inline constexpr double kRcondGuard = 1e-12;

// Thrown when a covariance matrix is too ill-conditioned to invert reliably.
class SingularMatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

bool is_hermitian(const CxMatrix &m, double tol = 1e-12);

// Smallest/largest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CxMatrix &m);
double max_eigenvalue(const CxMatrix &m);

// Hermitian m is PSD up to `tol` relative to its largest eigenvalue magnitude.
bool is_psd(const CxMatrix &m, double tol = kPsdTolerance);

// (m + m^H) / 2
CxMatrix hermitized(const CxMatrix &m);

} // namespace covsim

#endif
