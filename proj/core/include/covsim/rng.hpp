#ifndef COVSIM_RNG_HPP
#define COVSIM_RNG_HPP

#include "covsim/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace covsim {

// Deterministic branchable random stream. A stream is identified by the
// master seed plus a structural path (experiment, drop, trial, ...), so every
// Monte-Carlo task can derive its own independent stream regardless of
// scheduling order. Branching depends only on the key, never on how much of
// the parent stream has been consumed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    Rng(const Rng &parent, std::initializer_list<std::uint64_t> path);

    Rng branch(std::initializer_list<std::uint64_t> path) const {
        return Rng(*this, path);
    }

    double gaussian();                    // N(0, 1)
    double uniform(double lo, double hi); // U(lo, hi)
    double gamma(double shape);           // Gamma(shape, 1)

    // CN(0, 1): real and imaginary parts are independent N(0, 1/2).
    Complex complex_gaussian();
    CxVector complex_gaussian_vector(Eigen::Index n);
    CxMatrix complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

  private:
    explicit Rng(std::vector<std::uint64_t> key);
    void reseed();

    std::vector<std::uint64_t> key_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace covsim

#endif
