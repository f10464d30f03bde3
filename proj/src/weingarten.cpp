#include "cuecorr/weingarten.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "cuecorr/characters.hpp"

namespace cuecorr {

GramMatrix gram_matrix(int n, int N) {
    if (n < 1 || N < 1) throw DomainError("gram_matrix: need n, N >= 1");
    std::vector<Permutation> basis = enumerate_SNn(n, N);
    if (basis.size() > 5040)
        throw ResourceError("gram_matrix: |S_N(n)| > 5040");
    std::size_t m = basis.size();
    std::vector<std::vector<Int>> entries(m, std::vector<Int>(m));
    std::vector<Permutation> inverses;
    inverses.reserve(m);
    for (const auto& p : basis) inverses.push_back(inverse(p));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            entries[a][b] = int_pow(Int(N), cycle_count(compose(basis[a], inverses[b])));
    return {n, N, std::move(basis), std::move(entries)};
}

namespace {

// Fraction-free forward elimination of [A | B]; returns the eliminated
// augmented matrix.  Pivots are the leading principal minors, nonzero here
// because A is a Gram matrix of independent vectors; row swaps cover any
// accidental zero all the same.
std::vector<std::vector<Int>> bareiss_forward(const GramMatrix& g,
                                              std::vector<std::vector<Int>> aug) {
    std::size_t m = g.basis.size();
    std::size_t cols = aug[0].size();
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (aug[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < m && aug[swap_row][k] == 0) ++swap_row;
            if (swap_row == m) throw DomainError("bareiss: singular Gram matrix");
            std::swap(aug[k], aug[swap_row]);
            for (auto& x : aug[k]) x = -x;  // keep the determinant sign
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                aug[i][j] = (aug[i][j] * aug[k][k] - aug[i][k] * aug[k][j]) / prev;
            aug[i][k] = 0;
        }
        prev = aug[k][k];
    }
    if (aug[m - 1][m - 1] == 0) throw DomainError("bareiss: singular Gram matrix");
    return aug;
}

std::vector<Rat> back_substitute(const std::vector<std::vector<Int>>& tri, std::size_t m,
                                 std::size_t rhs_col) {
    std::vector<Rat> x(m, Rat(0));
    for (std::size_t i = m; i-- > 0;) {
        Rat acc(tri[i][m + rhs_col]);
        for (std::size_t j = i + 1; j < m; ++j) acc -= Rat(tri[i][j]) * x[j];
        x[i] = acc / Rat(tri[i][i]);
    }
    return x;
}

}  // namespace

std::vector<std::vector<Rat>> invert_gram(const GramMatrix& g) {
    std::size_t m = g.basis.size();
    if (m > 200)
        throw ResourceError("invert_gram: basis too large for a full inverse; "
                            "use gram_solve_column");
    std::vector<std::vector<Int>> aug(m, std::vector<Int>(2 * m, Int(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = g.entries[i][j];
        aug[i][m + i] = 1;
    }
    auto tri = bareiss_forward(g, std::move(aug));
    std::vector<std::vector<Rat>> inv(m, std::vector<Rat>(m));
    for (std::size_t col = 0; col < m; ++col) {
        auto x = back_substitute(tri, m, col);
        for (std::size_t row = 0; row < m; ++row) inv[row][col] = x[row];
    }
    return inv;
}

std::vector<Rat> gram_solve_column(const GramMatrix& g, std::size_t col) {
    std::size_t m = g.basis.size();
    if (col >= m) throw DomainError("gram_solve_column: column out of range");
    std::vector<std::vector<Int>> aug(m, std::vector<Int>(m + 1, Int(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = g.entries[i][j];
        aug[i][m] = (i == col) ? 1 : 0;
    }
    auto tri = bareiss_forward(g, std::move(aug));
    return back_substitute(tri, m, 0);
}

CorrelatorQuery::CorrelatorQuery(IndexTuple i_, IndexTuple j_, IndexTuple ip_, IndexTuple jp_)
    : i(std::move(i_)), j(std::move(j_)), iprime(std::move(ip_)), jprime(std::move(jp_)) {
    if (i.degree() != j.degree() || i.degree() != iprime.degree() ||
        i.degree() != jprime.degree())
        throw DomainError("CorrelatorQuery: tuples must share the degree n");
    if (i.range != j.range || i.range != iprime.range || i.range != jprime.range)
        throw DomainError("CorrelatorQuery: tuples must share the range N");
    if (i.degree() < 1) throw DomainError("CorrelatorQuery: need n >= 1");
}

namespace {

struct GramInverseData {
    std::vector<Permutation> basis;
    std::vector<std::vector<Rat>> inverse;
};

const GramInverseData& cached_gram_inverse(int n, int N) {
    static std::map<std::pair<int, int>, std::unique_ptr<GramInverseData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, N);
    auto it = cache.find(key);
    if (it == cache.end()) {
        GramMatrix g = gram_matrix(n, N);
        auto data = std::make_unique<GramInverseData>();
        data->basis = g.basis;
        data->inverse = invert_gram(g);
        it = cache.emplace(key, std::move(data)).first;
    }
    return *it->second;
}

// alignment test i == i' o sigma
bool aligned(const IndexTuple& a, const IndexTuple& b, const Permutation& sigma) {
    for (int k = 1; k <= sigma.degree(); ++k)
        if (a.values[k - 1] != b.values[sigma(k) - 1]) return false;
    return true;
}

}  // namespace

Rat general_correlator(const CorrelatorQuery& q) {
    int n = q.degree(), N = q.range();
    const auto& data = cached_gram_inverse(n, N);
    std::size_t m = data.basis.size();
    std::vector<std::size_t> rows, cols;
    for (std::size_t a = 0; a < m; ++a) {
        if (aligned(q.i, q.iprime, data.basis[a])) rows.push_back(a);
        if (aligned(q.j, q.jprime, data.basis[a])) cols.push_back(a);
    }
    Rat total(0);
    for (std::size_t a : rows)
        for (std::size_t b : cols) total += data.inverse[a][b];
    return total;
}

Rat permutation_correlator(const Permutation& pi, int N) {
    int n = pi.degree();
    if (N < n)
        throw DomainError("permutation_correlator: N < n is the unstable range; "
                          "use general_correlator");
    Partition nu = cycle_type(pi);
    Rat total(0);
    for (const Partition& lam : enumerate_partitions(n)) {
        Int chi = character(lam, nu);
        if (chi == 0) continue;
        Int den = hook_data(lam).hook_product;
        for (int c : contents(lam)) den *= (N + c);
        total += make_rat(chi, den);
    }
    return total;
}

RationalFunctionQ permutation_correlator_symbolic(const Partition& mu, int n) {
    if (mu.weight() > n) throw DomainError("permutation_correlator_symbolic: wt(mu) > n");
    Partition nu = inflate(mu, n);
    RationalFunctionQ total;
    for (const Partition& lam : enumerate_partitions(n)) {
        Int chi = character(lam, nu);
        if (chi == 0) continue;
        PolynomialQ den = PolynomialQ::constant(Rat(hook_data(lam).hook_product));
        for (int c : contents(lam)) den = den * PolynomialQ({Rat(c), Rat(1)});
        total = total + RationalFunctionQ(PolynomialQ::constant(Rat(chi)), den);
    }
    return total;
}

Rat wick_decompose(const CorrelatorQuery& q) {
    int n = q.degree(), N = q.range();
    if (N < n) throw DomainError("wick_decompose: requires N >= n");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> sigmas, taus;
    do {
        Permutation p{std::vector<int>(word)};
        if (aligned(q.i, q.iprime, p)) sigmas.push_back(p);
        if (aligned(q.j, q.jprime, p)) taus.push_back(p);
    } while (std::next_permutation(word.begin(), word.end()));
    std::map<Partition, Rat> wg;  // permutation correlator per reduced type
    Rat total(0);
    for (const auto& sigma : sigmas)
        for (const auto& tau : taus) {
            Permutation pi = compose(sigma, inverse(tau));
            Partition mu = reduced_cycle_type(pi);
            auto it = wg.find(mu);
            if (it == wg.end()) it = wg.emplace(mu, permutation_correlator(pi, N)).first;
            total += it->second;
        }
    return total;
}

std::vector<Rat> expansion_series(const Partition& mu, int n, int gmax) {
    if (gmax < 0) throw DomainError("expansion_series: negative gmax");
    int k = mu.size();
    auto coeffs = F_coeffs(mu, n, k + 2 * gmax);
    std::vector<Rat> out;
    out.reserve(gmax + 1);
    for (int g = 0; g <= gmax; ++g) out.push_back(coeffs[k + 2 * g]);
    return out;
}

RationalFunctionQ cyclic_closed_form(int n) {
    if (n < 2) throw DomainError("cyclic_closed_form: need n >= 2");
    Rat num = Rat(catalan(n - 1)) * ((n % 2 == 0) ? Rat(-1) : Rat(1));
    PolynomialQ den({Rat(0), Rat(1)});  // N
    for (int k = 1; k <= n - 1; ++k)
        den = den * PolynomialQ({Rat(-k * k), Rat(0), Rat(1)});  // N^2 - k^2
    return RationalFunctionQ(PolynomialQ::constant(num), den);
}

OneFixedPointResult one_fixed_point_gf(int n) {
    if (n < 4) throw DomainError("one_fixed_point_gf: need n >= 4");
    int r = n % 2;
    // Triangular system: for k = r, r+2, ..., n-4,
    //   sum_{j+2g=k} a_j T(n-3+g, n-3) = -(2/n!) S(n-1+k, n-1).
    std::vector<Rat> a;  // a[r], a[r+2], ...
    for (int k = r; k <= n - 4; k += 2) {
        Rat rhs = make_rat(-2 * stirling2(n - 1 + k, n - 1), factorial(n));
        Rat acc(0);
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
            int j = r + 2 * static_cast<int>(idx);
            int g = (k - j) / 2;
            acc += a[idx] * Rat(central_factorial(n - 3 + g, n - 3));
        }
        a.push_back(rhs - acc);  // T(n-3, n-3) == 1 on the diagonal
    }

    PolynomialQ one = PolynomialQ::constant(Rat(1));
    PolynomialQ alt_den = PolynomialQ::constant(Rat(factorial(n)));
    PolynomialQ triv_den = PolynomialQ::constant(Rat(factorial(n)));
    for (int i = 1; i <= n - 1; ++i) {
        alt_den = alt_den * PolynomialQ({Rat(1), Rat(i)});    // 1 + i z
        triv_den = triv_den * PolynomialQ({Rat(1), Rat(-i)}); // 1 - i z
    }
    RationalFunctionQ gf =
        RationalFunctionQ(PolynomialQ::constant(r == 0 ? Rat(1) : Rat(-1)), alt_den) +
        RationalFunctionQ(one, triv_den);

    std::vector<Rat> numer_coeffs(n - 3 > 0 ? n - 3 : 1, Rat(0));
    for (std::size_t idx = 0; idx < a.size(); ++idx)
        numer_coeffs[r + 2 * idx] = a[idx];
    PolynomialQ hook_den = one;
    for (int i = 1; i <= n - 3; ++i)
        hook_den = hook_den * PolynomialQ({Rat(1), Rat(0), Rat(-i * i)});  // 1 - i^2 z^2
    gf = gf + RationalFunctionQ(PolynomialQ(numer_coeffs), hook_den);

    return {gf, std::move(a)};
}

namespace {

// det of a square integer-polynomial matrix by fraction-free elimination;
// ZZ[z] is an integral domain so the Bareiss divisions are exact.
IPoly ipoly_determinant(std::vector<std::vector<IPoly>> m) {
    std::size_t sz = m.size();
    IPoly prev{Int(1)};
    int sign = 1;
    for (std::size_t k = 0; k + 1 < sz; ++k) {
        if (m[k][k].empty()) {
            std::size_t sw = k + 1;
            while (sw < sz && m[sw][k].empty()) ++sw;
            if (sw == sz) return {};  // zero determinant
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < sz; ++i) {
            for (std::size_t j = k + 1; j < sz; ++j) {
                IPoly t = ipoly_sub(ipoly_mul(m[i][j], m[k][k]), ipoly_mul(m[i][k], m[k][j]));
                m[i][j] = t.empty() ? t : ipoly_exact_div(t, prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    IPoly det = m[sz - 1][sz - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

}  // namespace

GramDetReport gram_determinant(int n) {
    if (n < 1 || n > 5) throw DomainError("gram_determinant: supported for 1 <= n <= 5");
    GramDetReport report;
    report.n = n;
    // Eigenvalue route: G(z) represents (z+J_1)...(z+J_n) on the regular
    // representation, so each irreducible lambda contributes the content
    // product prod (z + c) once per Young-basis vector of each of its
    // dim(lambda) copies: exponent of (z + c) is sum (dim lambda)^2 over
    // diagrams containing content c with multiplicity.
    std::map<int, Int> exp_by_content;
    for (const Partition& lam : enumerate_partitions(n)) {
        Int d = hook_data(lam).dimension;
        for (int c : contents(lam)) exp_by_content[c] += d * d;
    }
    Int total_degree = 0;
    for (const auto& [c, e] : exp_by_content) total_degree += e;
    for (const auto& [c, e] : exp_by_content) {
        if (c < 0) continue;
        report.exponents[c] = e;
        Int mirrored = (c == 0) ? e : exp_by_content.count(-c) ? exp_by_content.at(-c) : Int(0);
        if (c > 0 && mirrored != e)
            throw DomainError("gram_determinant: asymmetric content exponents");
    }
    report.total_degree = total_degree;

    report.direct_checked = (n <= 4);
    report.routes_agree = true;
    if (report.direct_checked) {
        // expand the factored form
        IPoly factored{Int(1)};
        for (const auto& [c, e] : exp_by_content) {
            IPoly lin{Int(c), Int(1)};
            for (Int i = 0; i < e; ++i) factored = ipoly_mul(factored, lin);
        }
        auto basis = enumerate_SNn(n, n);
        std::size_t m = basis.size();
        std::vector<std::vector<IPoly>> mat(m, std::vector<IPoly>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                int cycles = cycle_count(compose(basis[a], inverse(basis[b])));
                IPoly mono(cycles + 1, Int(0));
                mono[cycles] = 1;
                mat[a][b] = std::move(mono);
            }
        IPoly direct = ipoly_determinant(std::move(mat));
        report.routes_agree = (direct == factored);
    }
    return report;
}

Int first_order(const Partition& mu) { return top_coeff_F(mu); }

}  // namespace cuecorr
