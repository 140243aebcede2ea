#include "covsim/estimators.hpp"

#include <algorithm>
#include <stdexcept>

namespace covsim {

EstimatorKind parse_estimator(std::string_view name) {
    if (name == "ideal")
        return EstimatorKind::kIdeal;
    if (name == "sample")
        return EstimatorKind::kSampleOnly;
    if (name == "viaq")
        return EstimatorKind::kViaQ;
    if (name == "ala")
        return EstimatorKind::kAla;
    throw std::invalid_argument("unknown estimator '" + std::string(name) +
                                "' (expected ideal|sample|viaq|ala)");
}

std::string_view estimator_name(EstimatorKind kind) {
    switch (kind) {
    case EstimatorKind::kIdeal:
        return "ideal";
    case EstimatorKind::kSampleOnly:
        return "sample";
    case EstimatorKind::kViaQ:
        return "viaq";
    case EstimatorKind::kAla:
        return "ala";
    }
    return "?";
}

CxMatrix viaq(const CxMatrix &q_sample, double kappa) {
    if (kappa < 0.0 || kappa > 1.0)
        throw std::invalid_argument("viaQ weight must lie in [0, 1]");
    CxMatrix out = (1.0 - kappa) * q_sample;
    out.diagonal() += kappa * q_sample.diagonal();
    return out;
}

void KappaFit::add(const CxMatrix &sample, const CxMatrix &truth) {
    if (sample.rows() != truth.rows() || sample.cols() != truth.cols())
        throw std::invalid_argument("sample/truth dimension mismatch");
    // viaq(Q, k) - Q_true = (Q - Q_true) - k * offdiag(Q); minimizing the
    // squared norm over k gives k* = <offdiag(Q), Q - Q_true> / ||offdiag(Q)||^2.
    const Eigen::Index n = sample.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == j)
                continue;
            const Complex b = sample(i, j);
            const Complex a = b - truth(i, j);
            cross_ += b.real() * a.real() + b.imag() * a.imag();
            energy_ += std::norm(b);
        }
    }
    ++count_;
}

double KappaFit::solve() const {
    if (count_ == 0)
        throw std::logic_error("no samples accumulated");
    if (energy_ <= 0.0)
        return 0.0; // all-diagonal samples: every weight is equivalent
    return std::clamp(cross_ / energy_, 0.0, 1.0);
}

double optimal_kappa(const std::vector<CxMatrix> &q_samples,
                     const CxMatrix &q_true) {
    if (q_samples.empty())
        throw std::invalid_argument("need at least one sample matrix");
    KappaFit fit;
    for (const auto &s : q_samples)
        fit.add(s, q_true);
    return fit.solve();
}

CxMatrix ala_ula(const CxMatrix &q_sample) {
    const Eigen::Index n = q_sample.rows();
    if (q_sample.cols() != n)
        throw std::invalid_argument("ALA input must be square");
    CxMatrix out(n, n);
    for (Eigen::Index d = -(n - 1); d <= n - 1; ++d) {
        const Eigen::Index first = std::max<Eigen::Index>(0, -d);
        const Eigen::Index count = n - std::abs(d);
        Complex sum = 0.0;
        for (Eigen::Index p = first; p < first + count; ++p)
            sum += q_sample(p, p + d);
        const Complex mean = sum / static_cast<double>(count);
        for (Eigen::Index p = first; p < first + count; ++p)
            out(p, p + d) = mean;
    }
    return out;
}

AlaEstimator::AlaEstimator(const AntennaLayout &layout)
    : partition_(layout) {}

AlaEstimator::AlaEstimator(PairPartition partition)
    : partition_(std::move(partition)) {}

CxMatrix AlaEstimator::apply(const CxMatrix &q_sample) const {
    const Eigen::Index n = partition_.size();
    if (q_sample.rows() != n || q_sample.cols() != n)
        throw std::invalid_argument("sample dimension does not match layout");
    const auto &classes = partition_.classes();
    CxMatrix out(n, n);
    for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
        // Each class is visited together with its mirror, so every entry is
        // written exactly once and the output stays exactly Hermitian.
        if (partition_.mirror_of(ci) < ci)
            continue;
        const auto &cls = classes[static_cast<std::size_t>(ci)];
        Complex sum = 0.0;
        for (const auto &[p, q] : cls.members)
            sum += q_sample(p, q);
        const Complex mean = sum / static_cast<double>(cls.members.size());
        if (partition_.mirror_of(ci) == ci) {
            for (const auto &[p, q] : cls.members)
                out(p, q) = mean;
        } else {
            const Complex conj_mean = std::conj(mean);
            for (const auto &[p, q] : cls.members) {
                out(p, q) = mean;
                out(q, p) = conj_mean;
            }
        }
    }
    return out;
}

CxMatrix ala_upa(const CxMatrix &q_sample, const AntennaLayout &layout) {
    if (layout.kind() == LayoutKind::kGeneric)
        throw std::invalid_argument("ala_upa expects a ULA or UPA layout");
    if (q_sample.rows() != layout.size())
        throw std::invalid_argument("sample dimension does not match layout");
    return AlaEstimator(layout).apply(q_sample);
}

CxMatrix ala_generic(const CxMatrix &q_sample,
                     const std::vector<AntennaCoord> &coords) {
    return AlaEstimator(AntennaLayout::generic(coords)).apply(q_sample);
}

EstimatedPair estimate_pair(const CxMatrix &r_sample, const CxMatrix &q_sample,
                            EstimatorKind kind, const EstimatorContext &ctx) {
    switch (kind) {
    case EstimatorKind::kIdeal:
        if (ctx.truth == nullptr)
            throw std::invalid_argument("ideal estimator needs true matrices");
        return {ctx.truth->r, ctx.truth->q};
    case EstimatorKind::kSampleOnly:
        return {r_sample, q_sample};
    case EstimatorKind::kViaQ:
        return {viaq(r_sample, ctx.kappa_r), viaq(q_sample, ctx.kappa_q)};
    case EstimatorKind::kAla:
        if (ctx.ala == nullptr)
            throw std::invalid_argument("ALA estimator needs a pair partition");
        return {ctx.ala->apply(r_sample), ctx.ala->apply(q_sample)};
    }
    throw std::logic_error("unknown estimator kind");
}

EstimatedPair estimate_pair(const PilotObservation &obs, EstimatorKind kind,
                            const EstimatorContext &ctx) {
    if (kind == EstimatorKind::kIdeal) {
        // No need to form the sample matrices just to discard them.
        return estimate_pair(CxMatrix(), CxMatrix(), kind, ctx);
    }
    return estimate_pair(sample_r(obs), sample_q(obs), kind, ctx);
}

} // namespace covsim
