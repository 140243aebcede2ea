#include "covsim/rng.hpp"

namespace covsim {

Rng::Rng(std::uint64_t seed) : key_{seed} { reseed(); }

Rng::Rng(const Rng &parent, std::initializer_list<std::uint64_t> path)
    : key_(parent.key_) {
    key_.insert(key_.end(), path.begin(), path.end());
    reseed();
}

Rng::Rng(std::vector<std::uint64_t> key) : key_(std::move(key)) { reseed(); }

void Rng::reseed() {
    std::vector<std::uint32_t> words;
    words.reserve(2 * key_.size());
    for (std::uint64_t w : key_) {
        words.push_back(static_cast<std::uint32_t>(w));
        words.push_back(static_cast<std::uint32_t>(w >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
    normal_.reset();
}

double Rng::gaussian() { return normal_(engine_); }

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::gamma(double shape) {
    return std::gamma_distribution<double>(shape, 1.0)(engine_);
}

Complex Rng::complex_gaussian() {
    const double scale = 1.0 / std::sqrt(2.0);
    double re = gaussian();
    double im = gaussian();
    return Complex(re * scale, im * scale);
}

CxVector Rng::complex_gaussian_vector(Eigen::Index n) {
    CxVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = complex_gaussian();
    return v;
}

CxMatrix Rng::complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CxMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = complex_gaussian();
    return m;
}

} // namespace covsim
