#include "cuecorr/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cuecorr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "-" || s == "0") return Partition{};
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw DomainError("parse_partition: bad part '" + tok + "'");
        parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int weight(const Partition& p) { return p.weight(); }

Partition reduce(const Partition& p) {
    std::vector<int> out;
    for (int v : p.parts())
        if (v > 1) out.push_back(v - 1);
    return Partition(std::move(out));
}

Partition inflate(const Partition& m, int n) {
    if (n < m.weight())
        throw DomainError("inflate: n=" + std::to_string(n) + " < wt=" +
                          std::to_string(m.weight()));
    std::vector<int> out;
    out.reserve(m.length() + (n - m.weight()));
    for (int v : m.parts()) out.push_back(v + 1);
    out.insert(out.end(), n - m.weight(), 1);
    return Partition(std::move(out));
}

namespace {

void enum_rec(int k, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (k == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int a = std::min(k, maxpart); a >= 1; --a) {
        cur.push_back(a);
        enum_rec(k - a, a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k) {
    if (k < 0) throw DomainError("enumerate_partitions: negative k");
    std::vector<Partition> out;
    std::vector<int> cur;
    enum_rec(k, k, cur, out);
    return out;
}

bool dominated_by(const Partition& lam, const Partition& mu) {
    int len = std::max(lam.length(), mu.length());
    long sl = 0, sm = 0;
    for (int i = 0; i < len; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl > sm) return false;
    }
    return true;
}

namespace {

void enum_E_rec(int a, int r, int pos, int last, std::vector<int>& cur,
                std::vector<IncreasingSequence>& out) {
    if (pos == r - 1) {
        cur.push_back(a + r);
        out.push_back({cur, a});
        cur.pop_back();
        return;
    }
    // 1-based position p = pos+1 needs value >= a+p, and weak monotonicity
    // with i_r = a+r caps everything at a+r.
    for (int v = std::max(last, a + pos + 1); v <= a + r; ++v) {
        cur.push_back(v);
        enum_E_rec(a, r, pos + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IncreasingSequence> enumerate_E(int a, int r) {
    if (a < 0 || r < 1) throw DomainError("enumerate_E: need a >= 0, r >= 1");
    std::vector<IncreasingSequence> out;
    std::vector<int> cur;
    enum_E_rec(a, r, 0, 0, cur, out);
    return out;
}

Partition sequence_type(const std::vector<int>& seq) {
    if (seq.empty()) throw DomainError("sequence_type: empty sequence");
    std::map<int, int> mult;
    for (int v : seq) ++mult[v];
    std::vector<int> parts;
    for (auto& [v, m] : mult) parts.push_back(m);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

namespace {

// Distinct sub-multisets of `pool` (value -> count, descending values)
// summing to `target`; calls fn with the chosen multiset and the remainder.
void submultisets(const std::vector<std::pair<int, int>>& pool, std::size_t idx, int target,
                  std::vector<int>& chosen, std::vector<std::pair<int, int>>& rest,
                  const std::function<void(const std::vector<int>&,
                                           const std::vector<std::pair<int, int>>&)>& fn) {
    if (target == 0) {
        auto tail = rest;
        for (std::size_t i = idx; i < pool.size(); ++i)
            if (pool[i].second > 0) tail.push_back(pool[i]);
        fn(chosen, tail);
        return;
    }
    if (idx == pool.size()) return;
    auto [value, count] = pool[idx];
    int maxtake = std::min(count, target / value);
    for (int take = maxtake; take >= 0; --take) {
        for (int t = 0; t < take; ++t) chosen.push_back(value);
        if (count - take > 0) rest.push_back({value, count - take});
        submultisets(pool, idx + 1, target - take * value, chosen, rest, fn);
        if (count - take > 0) rest.pop_back();
        for (int t = 0; t < take; ++t) chosen.pop_back();
    }
}

void refinement_rec(const std::vector<std::pair<int, int>>& pool, const Partition& mu,
                    std::size_t block, std::vector<Partition>& tuple,
                    std::vector<RefinementTuple>& out) {
    if (block == static_cast<std::size_t>(mu.length())) {
        out.push_back(tuple);
        return;
    }
    std::vector<int> chosen;
    std::vector<std::pair<int, int>> rest;
    submultisets(pool, 0, mu.part(static_cast<int>(block)), chosen, rest,
                 [&](const std::vector<int>& sel, const std::vector<std::pair<int, int>>& tail) {
                     std::vector<int> parts = sel;
                     std::sort(parts.begin(), parts.end(), std::greater<int>());
                     tuple.push_back(Partition(std::move(parts)));
                     refinement_rec(tail, mu, block + 1, tuple, out);
                     tuple.pop_back();
                 });
}

}  // namespace

std::vector<RefinementTuple> refinement_set(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw DomainError("refinement_set: |lambda| != |mu|");
    std::vector<RefinementTuple> out;
    if (!dominated_by(lam, mu)) return out;
    std::vector<std::pair<int, int>> pool;  // descending values with counts
    for (int v : lam.parts()) {
        if (!pool.empty() && pool.back().first == v)
            ++pool.back().second;
        else
            pool.push_back({v, 1});
    }
    std::vector<Partition> tuple;
    refinement_rec(pool, mu, 0, tuple, out);
    return out;
}

Int rc_count(const Partition& lam) {
    if (lam.empty()) return 1;
    Int count = 0;
    for (const auto& seq : enumerate_E(0, lam.size()))
        if (sequence_type(seq.entries) == lam) ++count;
    return count;
}

Int rc_formula(const Partition& lam) {
    if (lam.empty()) return 1;
    Int num = factorial(lam.size());
    Int den = factorial(lam.size() - lam.length() + 1);
    for (int v = 1; v <= lam.part(0); ++v) den *= factorial(lam.multiplicity(v));
    Rat q = make_rat(num, den);
    if (q.get_den() != 1) throw DomainError("rc_formula: non-integer result");
    return q.get_num();
}

Int catalan(int r) {
    if (r < 0) throw DomainError("catalan: negative index");
    return binomial(2 * static_cast<unsigned long>(r), r) / (r + 1);
}

Int central_factorial(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("central_factorial: negative argument");
    // T(m,n) = n^2 T(m-1,n) + T(m-1,n-1); T(n,n) = 1 seeds from T(0,0) = 1,
    // T(m,0) = 0 for m >= 1, T(0,n) = 0 for n >= 1.
    std::vector<std::vector<Int>> t(m + 1, std::vector<Int>(n + 1, 0));
    t[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= std::min(i, n); ++j)
            t[i][j] = Int(j) * Int(j) * t[i - 1][j] + t[i - 1][j - 1];
    return t[m][n];
}

Int stirling2(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("stirling2: negative argument");
    std::vector<std::vector<Int>> s(m + 1, std::vector<Int>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= std::min(i, n); ++j)
            s[i][j] = Int(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s[m][n];
}

}  // namespace cuecorr
