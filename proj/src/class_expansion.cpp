#include "cuecorr/class_expansion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cuecorr/permutation.hpp"

namespace cuecorr {

Rat class_coeff(const SymFunSpec& f, const Partition& mu, int n) {
    if (mu.weight() > n)
        throw DomainError("class_coeff: wt(mu) > n");
    Partition nu = inflate(mu, n);
    auto lambdas = enumerate_partitions(n);
    Rat total = parallel_sum(lambdas.size(), Rat(0), [&](std::size_t i) {
        const Partition& lam = lambdas[i];
        Int chi = character(lam, nu);
        if (chi == 0) return Rat(0);
        HookData hd = hook_data(lam);
        return Rat(eval_on_alphabet(f, contents(lam)) * Rat(hd.dimension) * Rat(chi));
    });
    return total / Rat(factorial(n));
}

std::vector<Rat> F_coeffs(const Partition& mu, int n, int kmax) {
    if (mu.weight() > n)
        throw DomainError("F_coeffs: wt(mu) > n");
    if (kmax < 0) throw DomainError("F_coeffs: negative kmax");
    Partition nu = inflate(mu, n);
    std::vector<Rat> total(kmax + 1, Rat(0));
    for (const Partition& lam : enumerate_partitions(n)) {
        Int chi = character(lam, nu);
        if (chi == 0) continue;
        HookData hd = hook_data(lam);
        // chi/H_lambda * prod over cells of 1/(1 - c z), truncated
        std::vector<Rat> s(kmax + 1, Rat(0));
        s[0] = make_rat(chi, hd.hook_product);
        for (int c : contents(lam)) {
            if (c == 0) continue;
            for (int j = 1; j <= kmax; ++j) s[j] += Rat(c) * s[j - 1];
        }
        for (int j = 0; j <= kmax; ++j) total[j] += s[j];
    }
    return total;
}

namespace {

PolynomialQ interpolate_with_certificate(int degree_bound, int start,
                                         const std::function<Rat(int)>& value,
                                         const std::string& what) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (int n = start; n <= start + degree_bound; ++n) pts.push_back({Rat(n), value(n)});
    PolynomialQ p = PolynomialQ::interpolate(pts);
    int extra = start + degree_bound + 1;
    if (p.evaluate(Rat(extra)) != value(extra))
        throw DomainError(what + ": degree-bound violation at certification point n=" +
                          std::to_string(extra));
    return p;
}

}  // namespace

PolynomialQ interpolate_class_poly(const SymFunSpec& f, const Partition& mu) {
    int start = std::max(mu.weight(), 1);
    return interpolate_with_certificate(
        f.degree(), start, [&](int n) { return class_coeff(f, mu, n); },
        "interpolate_class_poly(" + f.name() + ", " + mu.to_string() + ")");
}

Int top_coeff_L(const Partition& lam, const Partition& mu) {
    Int total = 0;
    for (const auto& tuple : refinement_set(lam, mu)) {
        Int prod = 1;
        for (const auto& block : tuple) prod *= rc_formula(block);
        total += prod;
    }
    return total;
}

Int top_coeff_F(const Partition& mu) {
    Int prod = 1;
    for (int v : mu.parts()) prod *= catalan(v);
    return prod;
}

PolynomialQ fkmo_L(int r) {
    if (r < 1) throw DomainError("fkmo_L: need r >= 1");
    PolynomialQ total;
    for (int p = 1; p <= r; ++p) {
        Rat c = make_rat(factorial(2 * p), factorial(p + 1) * factorial(p + 1)) *
                Rat(central_factorial(r, p));
        PolynomialQ falling = PolynomialQ::constant(Rat(1));
        for (int j = 0; j <= p; ++j) falling = falling * PolynomialQ({Rat(-j), Rat(1)});
        total = total + falling * c;
    }
    return total;
}

Rat plancherel_average(const SymFunSpec& f, int n) {
    if (n < 1) throw DomainError("plancherel_average: need n >= 1");
    auto lambdas = enumerate_partitions(n);
    Rat total = parallel_sum(lambdas.size(), Rat(0), [&](std::size_t i) {
        const Partition& lam = lambdas[i];
        Int d = hook_data(lam).dimension;
        return Rat(eval_on_alphabet(f, contents(lam)) * Rat(d * d));
    });
    return total / Rat(factorial(n));
}

PolynomialQ plancherel_poly(const SymFunSpec& f) {
    return interpolate_with_certificate(
        f.degree(), 1, [&](int n) { return plancherel_average(f, n); },
        "plancherel_poly(" + f.name() + ")");
}

namespace {

// Minimal number of transpositions taking the partial product to the
// target: |reduced cycle-type of P^{-1} sigma| = n - #cycles(sigma^{-1} P).
int distance_to(const std::vector<int>& p_im, const Permutation& sigma_inv) {
    int n = static_cast<int>(p_im.size());
    int cycles = 0;
    std::vector<bool> seen(n, false);
    for (int k = 1; k <= n; ++k) {
        if (seen[k - 1]) continue;
        ++cycles;
        for (int j = k; !seen[j - 1]; j = sigma_inv(p_im[j - 1])) seen[j - 1] = true;
    }
    return n - cycles;
}

void count_s_choices(const std::vector<int>& ts, std::size_t level, std::vector<int>& im,
                     const Permutation& target_inv, Int& count) {
    int remaining = static_cast<int>(ts.size() - level);
    int dist = distance_to(im, target_inv);
    if (dist > remaining || (remaining - dist) % 2 != 0) return;
    if (level == ts.size()) {
        ++count;  // dist == 0 here, so the partial product equals the target
        return;
    }
    int t = ts[level];
    for (int s = 1; s < t; ++s) {
        std::swap(im[s - 1], im[t - 1]);
        count_s_choices(ts, level + 1, im, target_inv, count);
        std::swap(im[s - 1], im[t - 1]);
    }
}

Int count_factorizations(const Partition& mu, int n, int k, const Partition* type) {
    if (mu.weight() > n)
        throw DomainError("brute_factorization_count: wt(mu) > n");
    if (n > 8 || k > 8)
        throw ResourceError("brute_factorization_count: enumeration guard (n, k <= 8)");
    Permutation target = canonical_permutation(mu, n);
    Permutation target_inv = inverse(target);
    Int total = 0;
    // weakly increasing t-sequences in [2..n]
    std::vector<int> ts;
    std::function<void(int)> rec = [&](int minval) {
        if (static_cast<int>(ts.size()) == k) {
            if (type && sequence_type(ts) != *type) return;
            std::vector<int> im(n);
            std::iota(im.begin(), im.end(), 1);
            count_s_choices(ts, 0, im, target_inv, total);
            return;
        }
        for (int t = minval; t <= n; ++t) {
            ts.push_back(t);
            rec(t);
            ts.pop_back();
        }
    };
    if (k == 0) {
        if ((!type || type->empty()) && mu.empty()) total = 1;
        return total;
    }
    rec(2);
    return total;
}

}  // namespace

Int brute_factorization_count(const Partition& mu, int n, int k) {
    return count_factorizations(mu, n, k, nullptr);
}

Int brute_factorization_count_typed(const Partition& mu, int n, const Partition& lam) {
    return count_factorizations(mu, n, lam.size(), &lam);
}

}  // namespace cuecorr
