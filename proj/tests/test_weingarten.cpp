#include <doctest.h>

#include <algorithm>
#include <random>

#include "cuecorr/weingarten.hpp"

using namespace cuecorr;

namespace {

IndexTuple tuple(std::vector<int> v, int N) { return IndexTuple(std::move(v), N); }

std::size_t basis_index(const GramMatrix& g, const Permutation& p) {
    auto it = std::find(g.basis.begin(), g.basis.end(), p);
    REQUIRE(it != g.basis.end());
    return static_cast<std::size_t>(it - g.basis.begin());
}

CorrelatorQuery random_query(int n, int N, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(1, N);
    auto mk = [&] {
        std::vector<int> v(n);
        for (auto& x : v) x = pick(rng);
        return IndexTuple(v, N);
    };
    return CorrelatorQuery(mk(), mk(), mk(), mk());
}

}  // namespace

TEST_CASE("gram matrices") {
    for (int N = 1; N <= 5; ++N) {
        GramMatrix g = gram_matrix(1, N);
        REQUIRE(g.basis.size() == 1);
        CHECK(g.entries[0][0] == N);
    }
    GramMatrix g21 = gram_matrix(2, 1);
    REQUIRE(g21.basis.size() == 1);
    CHECK(g21.entries[0][0] == 1);

    for (int N = 2; N <= 5; ++N) {
        GramMatrix g = gram_matrix(2, N);
        REQUIRE(g.basis.size() == 2);
        CHECK(g.basis[0] == Permutation::identity(2));
        CHECK(g.entries[0][0] == N * N);
        CHECK(g.entries[0][1] == N);
        CHECK(g.entries[1][0] == N);
        CHECK(g.entries[1][1] == N * N);
    }
}

TEST_CASE("gram inversion") {
    for (int N = 2; N <= 5; ++N) {
        auto inv = invert_gram(gram_matrix(2, N));
        Rat diag = make_rat(1, Int(N) * N - 1);
        Rat off = make_rat(-1, Int(N) * (Int(N) * N - 1));
        CHECK(inv[0][0] == diag);
        CHECK(inv[1][1] == diag);
        CHECK(inv[0][1] == off);
        CHECK(inv[1][0] == off);
    }
    CHECK(invert_gram(gram_matrix(1, 4))[0][0] == Rat(1) / 4);

    // G * G^-1 == I exactly, stable and unstable range
    for (auto [n, N] : std::vector<std::pair<int, int>>{{3, 3}, {3, 2}, {4, 4}, {4, 2}}) {
        GramMatrix g = gram_matrix(n, N);
        auto inv = invert_gram(g);
        std::size_t m = g.basis.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Rat acc(0);
                for (std::size_t k = 0; k < m; ++k) acc += Rat(g.entries[i][k]) * inv[k][j];
                CHECK(acc == (i == j ? Rat(1) : Rat(0)));
            }
    }

    // single-column solve agrees with the full inverse
    GramMatrix g = gram_matrix(4, 4);
    auto inv = invert_gram(g);
    auto col = gram_solve_column(g, 3);
    for (std::size_t row = 0; row < g.basis.size(); ++row) CHECK(col[row] == inv[row][3]);
}

TEST_CASE("general correlator") {
    // n = 1: [i=i'][j=j']/N
    for (int N = 1; N <= 4; ++N) {
        CHECK(general_correlator({tuple({1}, N), tuple({1}, N), tuple({1}, N), tuple({1}, N)}) ==
              make_rat(1, N));
        if (N >= 2)
            CHECK(general_correlator(
                      {tuple({1}, N), tuple({1}, N), tuple({2}, N), tuple({1}, N)}) == 0);
    }

    // n = 2, N = 1: always 1
    CHECK(general_correlator({tuple({1, 1}, 1), tuple({1, 1}, 1), tuple({1, 1}, 1),
                              tuple({1, 1}, 1)}) == 1);

    for (int N = 2; N <= 6; ++N) {
        Rat diag = general_correlator(
            {tuple({1, 2}, N), tuple({1, 2}, N), tuple({1, 2}, N), tuple({1, 2}, N)});
        CHECK(diag == make_rat(1, Int(N) * N - 1));
        Rat swapped = general_correlator(
            {tuple({1, 2}, N), tuple({1, 2}, N), tuple({1, 2}, N), tuple({2, 1}, N)});
        CHECK(swapped == make_rat(-1, Int(N) * (Int(N) * N - 1)));
    }
}

TEST_CASE("permutation correlator against the Gram oracle") {
    CHECK_THROWS_AS(permutation_correlator(Permutation::identity(3), 2), DomainError);

    for (int N = 2; N <= 5; ++N) {
        CHECK(permutation_correlator(Permutation::identity(2), N) == make_rat(1, Int(N) * N - 1));
        CHECK(permutation_correlator(parse_permutation("(1 2)", 2), N) ==
              make_rat(-1, Int(N) * (Int(N) * N - 1)));
    }

    // Wg(id_3) = (N^2-2)/(N(N^2-1)(N^2-4)), derived from the Gram inverse
    for (int N = 3; N <= 6; ++N) {
        Int N2 = Int(N) * N;
        CHECK(permutation_correlator(Permutation::identity(3), N) ==
              make_rat(N2 - 2, Int(N) * (N2 - 1) * (N2 - 4)));
    }

    // every (sigma, tau) entry of G^-1 is the correlator of sigma tau^-1
    for (int n = 2; n <= 4; ++n)
        for (int N = n; N <= n + 2; ++N) {
            GramMatrix g = gram_matrix(n, N);
            auto inv = invert_gram(g);
            for (std::size_t a = 0; a < g.basis.size(); ++a)
                for (std::size_t b = 0; b < g.basis.size(); ++b)
                    CHECK(inv[a][b] ==
                          permutation_correlator(compose(g.basis[a], inverse(g.basis[b])), N));
        }

    // symbolic form evaluates to the same values
    for (int n = 2; n <= 5; ++n)
        for (int size = 0; size < n; ++size)
            for (const Partition& mu : enumerate_partitions(size)) {
                if (mu.weight() > n) continue;
                RationalFunctionQ f = permutation_correlator_symbolic(mu, n);
                Permutation pi = canonical_permutation(mu, n);
                for (int N = n; N <= n + 2; ++N)
                    CHECK(f.evaluate(Rat(N)) == permutation_correlator(pi, N));
            }
}

TEST_CASE("wick decomposition") {
    CHECK_THROWS_AS(
        wick_decompose({tuple({1, 1, 1}, 2), tuple({1, 1, 1}, 2), tuple({1, 1, 1}, 2),
                        tuple({1, 1, 1}, 2)}),
        DomainError);

    std::mt19937 rng(23);
    for (int n = 2; n <= 4; ++n)
        for (int N = n; N <= n + 2; ++N)
            for (int trial = 0; trial < 12; ++trial) {
                CorrelatorQuery q = random_query(n, N, rng);
                CHECK(wick_decompose(q) == general_correlator(q));
            }

    // mismatched index multisets: empty sum
    CHECK(wick_decompose({tuple({1, 1}, 3), tuple({1, 2}, 3), tuple({2, 3}, 3),
                          tuple({1, 2}, 3)}) == 0);

    // n = 2 diagonal
    for (int N = 2; N <= 5; ++N)
        CHECK(wick_decompose({tuple({1, 2}, N), tuple({1, 2}, N), tuple({1, 2}, N),
                              tuple({1, 2}, N)}) == make_rat(1, Int(N) * N - 1));
}

TEST_CASE("relabeling invariance") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3, N = 4;
        CorrelatorQuery q = random_query(n, N, rng);
        std::vector<int> row_map(N), col_map(N);
        std::iota(row_map.begin(), row_map.end(), 1);
        std::iota(col_map.begin(), col_map.end(), 1);
        std::shuffle(row_map.begin(), row_map.end(), rng);
        std::shuffle(col_map.begin(), col_map.end(), rng);
        auto remap = [&](const IndexTuple& t, const std::vector<int>& mp) {
            std::vector<int> v = t.values;
            for (auto& x : v) x = mp[x - 1];
            return IndexTuple(v, N);
        };
        CorrelatorQuery q2(remap(q.i, row_map), remap(q.j, col_map), remap(q.iprime, row_map),
                           remap(q.jprime, col_map));
        CHECK(general_correlator(q) == general_correlator(q2));
    }
}

TEST_CASE("expansion series") {
    for (int n = 1; n <= 6; ++n) {
        auto s = expansion_series(Partition{}, n, 2);
        CHECK(s[0] == 1);
        CHECK(s[1] == Rat(n * (n - 1)) / 2);
        CHECK(s[2] == Rat(n * (n - 1) * (3 * n * n + 17 * n - 34)) / 24);
    }
    CHECK(expansion_series(Partition{1}, 2, 0)[0] == 1);

    // full-cycle coefficients are Cat_{n-1} T(n-1+g, n-1)
    for (int n = 2; n <= 6; ++n) {
        auto s = expansion_series(Partition{n - 1}, n, 3);
        for (int g = 0; g <= 3; ++g)
            CHECK(s[g] == Rat(catalan(n - 1) * central_factorial(n - 1 + g, n - 1)));
    }

    // exact agreement with the 1/N expansion of the symbolic correlator
    for (int n = 2; n <= 5; ++n)
        for (int size = 0; size < n; ++size)
            for (const Partition& mu : enumerate_partitions(size)) {
                if (mu.weight() > n) continue;
                RationalFunctionQ w = permutation_correlator_symbolic(mu, n);
                auto series = series_in_inverse(w, n + size, 6);
                auto expected = expansion_series(mu, n, 3);
                Rat sign = (size % 2 == 0) ? Rat(1) : Rat(-1);
                for (int g = 0; g <= 3; ++g) CHECK(sign * series[2 * g] == expected[g]);
            }
}

TEST_CASE("cyclic closed form") {
    // n = 2: -1/(N(N^2-1))
    RationalFunctionQ c2 = cyclic_closed_form(2);
    for (int N = 2; N <= 6; ++N)
        CHECK(c2.evaluate(Rat(N)) == make_rat(-1, Int(N) * (Int(N) * N - 1)));

    // sign is (-1)^{n-1}: positive at n = 3, settled against the Gram oracle
    for (int n = 2; n <= 5; ++n) {
        RationalFunctionQ cn = cyclic_closed_form(n);
        Permutation full = canonical_permutation(Partition{n - 1}, n);
        for (int N = n; N <= n + 2; ++N) {
            GramMatrix g = gram_matrix(n, N);
            auto col = gram_solve_column(g, basis_index(g, full));
            CHECK(cn.evaluate(Rat(N)) == col[basis_index(g, Permutation::identity(n))]);
        }
    }
    CHECK(cyclic_closed_form(3).evaluate(Rat(3)) == make_rat(2, 3 * 8 * 5));
    CHECK(cyclic_closed_form(4).evaluate(Rat(4)) == make_rat(-5, 5040));
}

TEST_CASE("one fixed point generating function") {
    OneFixedPointResult res = one_fixed_point_gf(6);
    REQUIRE(res.a_coeffs.size() == 2);
    CHECK(res.a_coeffs[0] == Rat(-1) / 360);
    CHECK(res.a_coeffs[1] == Rat(-7) / 20);

    // 14 z^4 (1 - 10z^2) / prod_{k=1}^{5} (1 - k^2 z^2)
    PolynomialQ z({Rat(0), Rat(1)});
    PolynomialQ num = PolynomialQ::monomial(4, Rat(14)) *
                      PolynomialQ({Rat(1), Rat(0), Rat(-10)});
    PolynomialQ den = PolynomialQ::constant(Rat(1));
    for (int k = 1; k <= 5; ++k) den = den * PolynomialQ({Rat(1), Rat(0), Rat(-k * k)});
    CHECK(res.gf == RationalFunctionQ(num, den));

    auto series = res.gf.series_at_zero(10);
    CHECK(series[4] == 14);
    CHECK(series[6] == 630);
    CHECK(series[8] == 20328);
    CHECK(series[10] == 580580);

    for (int n = 4; n <= 7; ++n) {
        auto got = one_fixed_point_gf(n).gf.series_at_zero(n + 4);
        auto expected = F_coeffs(Partition{n - 2}, n, n + 4);
        CHECK(got == expected);
    }
    CHECK_THROWS_AS(one_fixed_point_gf(3), DomainError);
}

TEST_CASE("gram determinant") {
    GramDetReport r2 = gram_determinant(2);
    CHECK(r2.exponents.at(0) == 2);
    CHECK(r2.exponents.at(1) == 1);
    CHECK(r2.total_degree == 4);
    CHECK(r2.direct_checked);
    CHECK(r2.routes_agree);

    for (int n = 1; n <= 5; ++n) {
        GramDetReport r = gram_determinant(n);
        CHECK(r.total_degree == Int(n) * factorial(n));
        for (const auto& [k, e] : r.exponents) {
            CHECK(k <= n - 1);
            CHECK(e > 0);
        }
        if (n <= 4) CHECK(r.routes_agree);
    }
}

TEST_CASE("first order coefficients") {
    CHECK(first_order(Partition{1, 1}) == 1);
    CHECK(first_order(Partition{2}) == 2);
    CHECK(first_order(Partition{3, 1}) == 5);
}

TEST_CASE("resource guards and query validation") {
    CHECK_THROWS_AS(gram_matrix(8, 3), ResourceError);      // |S_3(8)| > 5040
    CHECK_THROWS_AS(invert_gram(gram_matrix(7, 2)), ResourceError);  // 429 > 200
    CHECK_NOTHROW(gram_solve_column(gram_matrix(6, 2), 0));

    CHECK_THROWS_AS(CorrelatorQuery(IndexTuple({1, 2}, 3), IndexTuple({1, 2}, 3),
                                    IndexTuple({1, 2}, 3), IndexTuple({1}, 3)),
                    DomainError);
    CHECK_THROWS_AS(CorrelatorQuery(IndexTuple({1, 2}, 3), IndexTuple({1, 2}, 3),
                                    IndexTuple({1, 2}, 3), IndexTuple({1, 2}, 4)),
                    DomainError);
    CHECK_THROWS_AS(IndexTuple({0, 1}, 2), DomainError);
}

TEST_CASE("unstable range at N = 1") {
    // all index tuples are forced to 1, every correlator equals 1
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(n, 1);
        CHECK(general_correlator({tuple(ones, 1), tuple(ones, 1), tuple(ones, 1),
                                  tuple(ones, 1)}) == 1);
    }
}
