#include "cuecorr/group_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace cuecorr {

AlgebraElement AlgebraElement::delta(const Permutation& s) {
    AlgebraElement out(s.degree());
    out.add_term(s, Rat(1));
    return out;
}

void AlgebraElement::add_term(const Permutation& sigma, const Rat& c) {
    if (sigma.degree() != degree_)
        throw DomainError("AlgebraElement: degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sigma, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree()) throw DomainError("add: degree mismatch");
    AlgebraElement out = a;
    for (const auto& [s, c] : b.terms()) out.add_term(s, c);
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rat& c) {
    AlgebraElement out(a.degree());
    if (c == 0) return out;
    for (const auto& [s, v] : a.terms()) out.add_term(s, v * c);
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree()) throw DomainError("multiply: degree mismatch");
    AlgebraElement out(a.degree());
    for (const auto& [s, cs] : a.terms())
        for (const auto& [t, ct] : b.terms()) out.add_term(compose(s, t), cs * ct);
    return out;
}

Rat coefficient_of(const AlgebraElement& a, const Permutation& sigma) {
    if (sigma.degree() != a.degree())
        throw DomainError("coefficient_of: degree mismatch");
    auto it = a.terms().find(sigma);
    return it == a.terms().end() ? Rat(0) : it->second;
}

AlgebraElement jm_element(int k, int n) {
    if (k < 1 || k > n) throw DomainError("jm_element: need 1 <= k <= n");
    AlgebraElement out(n);
    for (int s = 1; s < k; ++s) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        std::swap(im[s - 1], im[k - 1]);
        out.add_term(Permutation(std::move(im)), Rat(1));
    }
    return out;
}

namespace {

// Expands sum over s_i < t_i of (s_1,t_1)(s_2,t_2)...(s_k,t_k) into `out`.
// The partial product is kept in one-line form; right-multiplying by (s,t)
// swaps the images at positions s and t, so the DFS works in place.
void expand_jm_product(const std::vector<int>& ts, std::size_t level, std::vector<int>& im,
                       AlgebraElement& out) {
    if (level == ts.size()) {
        out.add_term(Permutation(std::vector<int>(im)), Rat(1));
        return;
    }
    int t = ts[level];
    for (int s = 1; s < t; ++s) {
        std::swap(im[s - 1], im[t - 1]);
        expand_jm_product(ts, level + 1, im, out);
        std::swap(im[s - 1], im[t - 1]);
    }
}

void add_jm_sequences(AlgebraElement& out, int n, std::vector<int>& ts, int k, int minval,
                      bool strict, const Partition* type) {
    if (static_cast<int>(ts.size()) == k) {
        if (type && sequence_type(ts) != *type) return;
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        expand_jm_product(ts, 0, im, out);
        return;
    }
    for (int t = minval; t <= n; ++t) {
        ts.push_back(t);
        add_jm_sequences(out, n, ts, k, strict ? t + 1 : t, strict, type);
        ts.pop_back();
    }
}

AlgebraElement eval_generator_direct(Basis b, const Partition& index, int n) {
    AlgebraElement out(n);
    int k = index.size();
    std::vector<int> ts;
    switch (b) {
        case Basis::e:
            if (k == 0) return AlgebraElement::delta(Permutation::identity(n));
            add_jm_sequences(out, n, ts, k, 2, /*strict=*/true, nullptr);
            break;
        case Basis::h:
            if (k == 0) return AlgebraElement::delta(Permutation::identity(n));
            add_jm_sequences(out, n, ts, k, 2, /*strict=*/false, nullptr);
            break;
        case Basis::p: {
            if (k == 0) throw DomainError("eval_symfun_direct: p_0 is not defined");
            for (int t = 2; t <= n; ++t) {
                std::vector<int> seq(k, t);
                std::vector<int> im(n);
                std::iota(im.begin(), im.end(), 1);
                expand_jm_product(seq, 0, im, out);
            }
            break;
        }
        case Basis::m:
            if (index.empty()) return AlgebraElement::delta(Permutation::identity(n));
            add_jm_sequences(out, n, ts, k, 2, /*strict=*/false, &index);
            break;
    }
    return out;
}

}  // namespace

AlgebraElement eval_symfun_direct(const SymFunSpec& f, int n) {
    if (n < 1) throw DomainError("eval_symfun_direct: need n >= 1");
    if (n > 9)
        throw ResourceError("eval_symfun_direct: n > 9 exceeds the direct-expansion cap");
    AlgebraElement out = AlgebraElement::delta(Permutation::identity(n));
    for (const auto& factor : f.factors)
        out = multiply(out, eval_generator_direct(factor.basis, factor.index, n));
    return out;
}

Rat ClassVector::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void ClassVector::set(const Partition& mu, const Rat& c) {
    if (mu.weight() > degree_)
        throw DomainError("ClassVector: wt(mu) > n");
    if (c == 0)
        coeffs_.erase(mu);
    else
        coeffs_[mu] = c;
}

CentralityError::CentralityError(const Permutation& a, const Rat& ca, const Permutation& b,
                                 const Rat& cb)
    : DomainError("not central: coefficient of " + one_line_string(a) + " is " + rat_str(ca) +
                  " but coefficient of " + one_line_string(b) + " is " + rat_str(cb)) {}

ClassVector to_class_vector(const AlgebraElement& a) {
    int n = a.degree();
    ClassVector out(n);
    std::map<Partition, std::pair<Permutation, Int>> seen;  // type -> (first member, count)
    for (const auto& [sigma, c] : a.terms()) {
        Partition mu = reduced_cycle_type(sigma);
        auto it = seen.find(mu);
        if (it == seen.end()) {
            seen.emplace(mu, std::make_pair(sigma, Int(1)));
            out.set(mu, c);
        } else {
            if (out.coeff(mu) != c) throw CentralityError(it->second.first, out.coeff(mu), sigma, c);
            ++it->second.second;
        }
    }
    // A class only partially covered is also non-central: some member has
    // coefficient zero.
    for (const auto& [mu, info] : seen) {
        if (info.second == class_size(mu, n)) continue;
        for (const auto& member : enumerate_class(mu, n)) {
            if (a.terms().find(member) == a.terms().end())
                throw CentralityError(info.first, out.coeff(mu), member, Rat(0));
        }
    }
    return out;
}

AlgebraElement class_indicator(const Partition& mu, int n) {
    if (mu.weight() > n) throw DomainError("class_indicator: wt(mu) > n");
    AlgebraElement out(n);
    for (const auto& sigma : enumerate_class(mu, n)) out.add_term(sigma, Rat(1));
    return out;
}

ClassVector class_product(const Partition& alpha, const Partition& beta, int n) {
    return to_class_vector(multiply(class_indicator(alpha, n), class_indicator(beta, n)));
}

}  // namespace cuecorr
