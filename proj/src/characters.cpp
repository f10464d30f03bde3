#include "cuecorr/characters.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cuecorr/permutation.hpp"

namespace cuecorr {

ContentAlphabet contents(const Partition& lam) {
    ContentAlphabet out;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j) out.push_back(j - i);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Partition conjugate(const Partition& lam) {
    std::vector<int> out;
    for (int j = 0; lam.part(0) > j; ++j) {
        int col = 0;
        for (int v : lam.parts())
            if (v > j) ++col;
        out.push_back(col);
    }
    return Partition(std::move(out));
}

}  // namespace

HookData hook_data(const Partition& lam) {
    Partition conj = conjugate(lam);
    Int hooks = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j)
            hooks *= lam.parts()[i] - j + conj.parts()[j] - i - 1;
    return {lam, hooks, factorial(lam.size()) / hooks};
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

// Border strips removed via beta-numbers: b_i = lam_i + (l-1-i).  Removing a
// strip of length r replaces some b_i by b_i - r (allowed when nonnegative
// and not already a beta number); the crossing count gives the sign.
Int mn_rec(const std::vector<int>& shape, const std::vector<int>& rem,
           std::map<MemoKey, Int>& memo) {
    if (shape.empty()) return 1;  // rem is empty too when sizes matched
    MemoKey key{shape, rem};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = rem.front();
    std::vector<int> tail(rem.begin() + 1, rem.end());
    int l = static_cast<int>(shape.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = shape[i] + (l - 1 - i);

    Int total = 0;
    for (int i = 0; i < l; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int crossings = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++crossings;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nshape;
        for (int j = 0; j < l; ++j) {
            int part = nb[j] - (l - 1 - j);
            if (part > 0) nshape.push_back(part);
        }
        Int sub = mn_rec(nshape, tail, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

// Memo confined per thread; results are scheduling-independent.
thread_local std::map<MemoKey, Int> mn_memo;

}  // namespace

Int character(const Partition& lam, const Partition& nu) {
    if (lam.size() != nu.size())
        throw DomainError("character: |lambda| != |nu|");
    return mn_rec(lam.parts(), nu.parts(), mn_memo);
}

Rat central_character(const Partition& mu, const Partition& lam) {
    int n = lam.size();
    if (n < mu.weight()) return Rat(0);
    Partition nu = inflate(mu, n);
    HookData hd = hook_data(lam);
    return make_rat(class_size(mu, n) * character(lam, nu), hd.dimension);
}

namespace {

Int elementary_on(const ContentAlphabet& A, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (k > static_cast<int>(A.size())) return 0;
    // coefficient of t^k in prod (1 + a t), backward update
    std::vector<Int> c(k + 1, 0);
    c[0] = 1;
    int seen = 0;
    for (int a : A) {
        ++seen;
        for (int j = std::min(k, seen); j >= 1; --j) c[j] += Int(a) * c[j - 1];
    }
    return c[k];
}

Int complete_on(const ContentAlphabet& A, int k) {
    if (k < 0) return 0;
    // prod 1/(1 - a t): s_new[j] = s_old[j] + a * s_new[j-1]
    std::vector<Int> s(k + 1, 0);
    s[0] = 1;
    for (int a : A)
        for (int j = 1; j <= k; ++j) s[j] += Int(a) * s[j - 1];
    return s[k];
}

Int power_on(const ContentAlphabet& A, int k) {
    Int total = 0;
    for (int a : A) total += int_pow(Int(a), k);
    return total;
}

void monomial_rec(const std::vector<int>& parts, std::size_t pos, const ContentAlphabet& A,
                  std::vector<bool>& used, const Int& acc, Int& total) {
    if (pos == parts.size()) {
        total += acc;
        return;
    }
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (used[i] || A[i] == 0) continue;  // zero variable kills the monomial
        used[i] = true;
        monomial_rec(parts, pos + 1, A, used, acc * int_pow(Int(A[i]), parts[pos]), total);
        used[i] = false;
    }
}

Int monomial_on(const ContentAlphabet& A, const Partition& lam) {
    if (lam.empty()) return 1;
    if (lam.length() > static_cast<int>(A.size())) return 0;
    Int total = 0;
    std::vector<bool> used(A.size(), false);
    monomial_rec(lam.parts(), 0, A, used, Int(1), total);
    Int m = 1;
    for (int v = 1; v <= lam.part(0); ++v) m *= factorial(lam.multiplicity(v));
    return total / m;  // exact: orbit stabilizer of equal parts
}

}  // namespace

Rat eval_generator_on_alphabet(Basis b, const Partition& index, const ContentAlphabet& A) {
    switch (b) {
        case Basis::e: return Rat(elementary_on(A, index.size()));
        case Basis::h: return Rat(complete_on(A, index.size()));
        case Basis::p:
            if (index.size() == 0) throw DomainError("eval: p_0 is not defined");
            return Rat(power_on(A, index.size()));
        case Basis::m: return Rat(monomial_on(A, index));
    }
    throw DomainError("eval: unknown basis");
}

Rat eval_on_alphabet(const SymFunSpec& f, const ContentAlphabet& A) {
    Rat out(1);
    for (const auto& factor : f.factors)
        out *= eval_generator_on_alphabet(factor.basis, factor.index, A);
    return out;
}

}  // namespace cuecorr
