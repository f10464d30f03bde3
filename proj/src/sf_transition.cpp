#include "cuecorr/sf_transition.hpp"

#include <algorithm>

#include "cuecorr/class_expansion.hpp"

namespace cuecorr {

GeneratorPolynomial GeneratorPolynomial::constant(GenBasis basis, const Rat& c) {
    GeneratorPolynomial out(basis);
    out.add_term(Partition{}, c);
    return out;
}

GeneratorPolynomial GeneratorPolynomial::generator(GenBasis basis, int r) {
    if (r < 1) throw DomainError("GeneratorPolynomial: generator index must be >= 1");
    GeneratorPolynomial out(basis);
    out.add_term(Partition{r}, Rat(1));
    return out;
}

Rat GeneratorPolynomial::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

int GeneratorPolynomial::degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.size());
    return d;
}

void GeneratorPolynomial::add_term(const Partition& key, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GeneratorPolynomial GeneratorPolynomial::operator+(const GeneratorPolynomial& o) const {
    if (basis_ != o.basis_) throw DomainError("GeneratorPolynomial: basis mismatch");
    GeneratorPolynomial out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key, c);
    return out;
}

namespace {

Partition merge_keys(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

GeneratorPolynomial GeneratorPolynomial::operator*(const GeneratorPolynomial& o) const {
    if (basis_ != o.basis_) throw DomainError("GeneratorPolynomial: basis mismatch");
    GeneratorPolynomial out(basis_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) out.add_term(merge_keys(ka, kb), ca * cb);
    return out;
}

GeneratorPolynomial GeneratorPolynomial::operator*(const Rat& s) const {
    GeneratorPolynomial out(basis_);
    if (s == 0) return out;
    for (const auto& [key, c] : terms_) out.add_term(key, c * s);
    return out;
}

GeneratorPolynomial hstar_in_e(int r) {
    if (r < 1) throw DomainError("hstar_in_e: need r >= 1");
    GeneratorPolynomial out(GenBasis::e);
    Rat sign = (r % 2 == 0) ? Rat(1) : Rat(-1);
    for (const Partition& lam : enumerate_partitions(r))
        out.add_term(lam, sign * Rat(rc_formula(lam)));
    return out;
}

std::vector<GeneratorPolynomial> hstar_by_reversion(int rmax) {
    if (rmax < 1) throw DomainError("hstar_by_reversion: need rmax >= 1");
    // t = sum_{m>=1} c_m u^m with c_1 = 1; substituting into
    // u = t + sum_r h_r t^{r+1} pins c_m = -[u^m] sum_r h_r T(u)^{r+1},
    // which only involves c_j with j < m.
    int M = rmax + 1;
    std::vector<GeneratorPolynomial> c(M + 1, GeneratorPolynomial(GenBasis::h));
    c[1] = GeneratorPolynomial::constant(GenBasis::h, Rat(1));

    auto series_mul = [&](const std::vector<GeneratorPolynomial>& a,
                          const std::vector<GeneratorPolynomial>& b) {
        std::vector<GeneratorPolynomial> out(M + 1, GeneratorPolynomial(GenBasis::h));
        for (int i = 0; i <= M; ++i)
            for (int j = 0; i + j <= M; ++j) out[i + j] = out[i + j] + a[i] * b[j];
        return out;
    };

    for (int m = 2; m <= M; ++m) {
        // T as known so far (coefficients above m-1 are not needed)
        std::vector<GeneratorPolynomial> T(M + 1, GeneratorPolynomial(GenBasis::h));
        for (int j = 1; j < m; ++j) T[j] = c[j];
        GeneratorPolynomial acc(GenBasis::h);
        std::vector<GeneratorPolynomial> power = T;  // T^1
        for (int r = 1; r + 1 <= m; ++r) {
            power = series_mul(power, T);  // T^{r+1}
            acc = acc + power[m] * GeneratorPolynomial::generator(GenBasis::h, r);
        }
        c[m] = acc * Rat(-1);
    }
    std::vector<GeneratorPolynomial> out;
    out.reserve(rmax);
    for (int r = 1; r <= rmax; ++r) out.push_back(c[r + 1]);
    return out;
}

namespace {

// Expansions of each source generator in the target basis via the Newton
// relation sum_{i=0}^k (-1)^i e_i h_{k-i} = 0, which is symmetric in e and
// h; gen[k] = -sum_{i=1}^k (-1)^i (target generator_i) * gen[k-i].
std::vector<GeneratorPolynomial> generator_table(GenBasis target, int kmax) {
    std::vector<GeneratorPolynomial> gen;
    gen.push_back(GeneratorPolynomial::constant(target, Rat(1)));
    for (int k = 1; k <= kmax; ++k) {
        GeneratorPolynomial acc(target);
        for (int i = 1; i <= k; ++i) {
            Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
            acc = acc + GeneratorPolynomial::generator(target, i) * gen[k - i] * sign;
        }
        gen.push_back(acc);
    }
    return gen;
}

GeneratorPolynomial convert(const GeneratorPolynomial& p, GenBasis from, GenBasis to) {
    if (p.basis() != from) throw DomainError("convert: unexpected source basis");
    int kmax = std::max(p.degree(), 0);
    auto gen = generator_table(to, kmax);
    GeneratorPolynomial out(to);
    for (const auto& [key, coeff] : p.terms()) {
        GeneratorPolynomial term = GeneratorPolynomial::constant(to, coeff);
        for (int part : key.parts()) term = term * gen[part];
        out = out + term;
    }
    return out;
}

}  // namespace

GeneratorPolynomial convert_e_to_h(const GeneratorPolynomial& p) {
    return convert(p, GenBasis::e, GenBasis::h);
}

GeneratorPolynomial convert_h_to_e(const GeneratorPolynomial& p) {
    return convert(p, GenBasis::h, GenBasis::e);
}

TransitionReport transition_check(int k) {
    if (k < 1) throw DomainError("transition_check: need k >= 1");
    if (k > 8) throw ResourceError("transition_check: k > 8");
    auto hstars = hstar_by_reversion(k);
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    TransitionReport report{k, true, {}};
    for (const Partition& mu : enumerate_partitions(k)) {
        GeneratorPolynomial hmu = GeneratorPolynomial::constant(GenBasis::h, Rat(1));
        for (int part : mu.parts()) hmu = hmu * hstars[part - 1];
        GeneratorPolynomial actual = convert_h_to_e(hmu) * sign;
        GeneratorPolynomial expected(GenBasis::e);
        for (const Partition& lam : enumerate_partitions(k))
            expected.add_term(lam, Rat(top_coeff_L(lam, mu)));
        bool pass = (actual == expected);
        if (!pass) report.pass = false;
        report.columns.push_back({mu, pass, std::move(expected), std::move(actual)});
    }
    return report;
}

}  // namespace cuecorr
