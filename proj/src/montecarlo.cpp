#include "cuecorr/montecarlo.hpp"

#include <cmath>

namespace cuecorr {

namespace {

// Counter-based generator (SplitMix64): state advances by a fixed gamma and
// the output is a bijective mix of the counter, so per-seed streams are
// independent and reproducible.  Normals come from Box-Muller.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() {  // (0, 1]
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace

double unitarity_residual(const ComplexMatrix& u) {
    double worst = 0;
    for (int r = 0; r < u.N; ++r)
        for (int c = 0; c < u.N; ++c) {
            std::complex<double> acc = 0;
            for (int k = 0; k < u.N; ++k) acc += u.at(r, k) * std::conj(u.at(c, k));
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

namespace {

ComplexMatrix sample_haar_rng(int N, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
    ComplexMatrix g(N);
    for (auto& x : g.a) {
        double re = gauss(rng);
        double im = gauss(rng);
        x = {re, im};
    }
    // Modified Gram-Schmidt on columns, two passes for orthogonality at
    // working precision.  The R diagonal is the positive column norm, which
    // is the phase convention required for Haar.
    for (int c = 0; c < N; ++c) {
        for (int pass = 0; pass < 2; ++pass)
            for (int prev = 0; prev < c; ++prev) {
                std::complex<double> proj = 0;
                for (int r = 0; r < N; ++r) proj += std::conj(g.at(r, prev)) * g.at(r, c);
                for (int r = 0; r < N; ++r) g.at(r, c) -= proj * g.at(r, prev);
            }
        double norm = 0;
        for (int r = 0; r < N; ++r) norm += std::norm(g.at(r, c));
        norm = std::sqrt(norm);
        for (int r = 0; r < N; ++r) g.at(r, c) /= norm;
    }
    return g;
}

struct Accumulator {
    std::complex<double> sum = 0;
    double sumsq = 0;  // sum |x_i|^2
    long count = 0;

    void push(std::complex<double> x) {
        sum += x;
        sumsq += std::norm(x);
        ++count;
    }

    std::complex<double> mean() const { return sum / static_cast<double>(count); }

    // Leave-one-out jackknife standard error of the mean:
    // sqrt(sum |x_i - mean|^2 / (m(m-1))).
    double standard_error() const {
        double m = static_cast<double>(count);
        double dev = sumsq - std::norm(sum) / m;
        if (dev < 0) dev = 0;
        return std::sqrt(dev / (m * (m - 1)));
    }
};

}  // namespace

ComplexMatrix sample_haar(int N, std::uint64_t seed) {
    if (N < 1) throw DomainError("sample_haar: need N >= 1");
    std::mt19937_64 rng(seed);
    ComplexMatrix u = sample_haar_rng(N, rng);
    if (unitarity_residual(u) > 1e-10)
        throw std::runtime_error("sample_haar: unitarity residual above 1e-10");
    return u;
}

EstimateReport estimate_correlator(const CorrelatorQuery& q, long samples, std::uint64_t seed) {
    if (samples < 1000) throw DomainError("estimate_correlator: need samples >= 1000");
    int n = q.degree(), N = q.range();
    std::mt19937_64 rng(seed);
    Accumulator acc;
    for (long s = 0; s < samples; ++s) {
        ComplexMatrix u = sample_haar_rng(N, rng);
        if (unitarity_residual(u) > 1e-10)
            throw std::runtime_error("estimate_correlator: unitarity residual above 1e-10");
        std::complex<double> prod = 1.0;
        for (int k = 0; k < n; ++k) {
            prod *= u.at(q.i.values[k] - 1, q.j.values[k] - 1);
            prod *= std::conj(u.at(q.iprime.values[k] - 1, q.jprime.values[k] - 1));
        }
        acc.push(prod);
    }
    EstimateReport report;
    report.mean = acc.mean();
    report.standard_error = acc.standard_error();
    report.samples = samples;
    return report;
}

EstimateReport validate(const CorrelatorQuery& q, long samples, std::uint64_t seed) {
    EstimateReport report = estimate_correlator(q, samples, seed);
    report.target = general_correlator(q);
    report.has_target = true;
    report.z_score = std::abs(report.mean - std::complex<double>(report.target.get_d(), 0.0)) /
                     report.standard_error;
    return report;
}

EstimateReport estimate_entry_mean(int N, long samples, std::uint64_t seed) {
    if (samples < 1000) throw DomainError("estimate_entry_mean: need samples >= 1000");
    std::mt19937_64 rng(seed);
    Accumulator acc;
    for (long s = 0; s < samples; ++s) {
        ComplexMatrix u = sample_haar_rng(N, rng);
        acc.push(u.at(0, 0));
    }
    EstimateReport report;
    report.mean = acc.mean();
    report.standard_error = acc.standard_error();
    report.samples = samples;
    report.has_target = true;
    report.target = Rat(0);
    report.z_score = std::abs(report.mean) / report.standard_error;
    return report;
}

}  // namespace cuecorr
