#include <doctest.h>

#include <set>

#include "cuecorr/partition.hpp"

using namespace cuecorr;

TEST_CASE("weight, reduce, inflate") {
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{2, 1}.weight() == 5);
    CHECK(Partition{3, 1, 1}.weight() == 8);

    CHECK(reduce(Partition{3, 1, 1}) == Partition{2});
    CHECK(reduce(Partition{5}) == Partition{4});
    CHECK(reduce(Partition{}) == Partition{});

    CHECK(inflate(Partition{2}, 5) == Partition{3, 1, 1});
    CHECK(inflate(Partition{1}, 3) == Partition{2, 1});
    CHECK(inflate(Partition{}, 4) == Partition{1, 1, 1, 1});
    CHECK_THROWS_AS(inflate(Partition{2}, 2), DomainError);

    // reduce(inflate(mu, n)) == mu whenever wt(mu) <= n <= 10
    for (int size = 0; size <= 8; ++size)
        for (const Partition& mu : enumerate_partitions(size))
            for (int n = mu.weight(); n <= 10; ++n) CHECK(reduce(inflate(mu, n)) == mu);
}

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("0") == Partition{});
    CHECK(Partition{3, 1, 1}.to_string() == "3,1,1");
    CHECK(Partition{}.to_string() == "-");
}

TEST_CASE("enumerate_partitions reverse lexicographic") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(7).size() == 15);
    std::vector<Partition> expected{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                    Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
    CHECK(enumerate_partitions(4) == expected);
}

TEST_CASE("refinement sets") {
    auto tuples = refinement_set(Partition{3, 2, 2, 1}, Partition{5, 3});
    REQUIRE(tuples.size() == 2);
    std::set<RefinementTuple> got(tuples.begin(), tuples.end());
    CHECK(got.count({Partition{3, 2}, Partition{2, 1}}) == 1);
    CHECK(got.count({Partition{2, 2, 1}, Partition{3}}) == 1);

    for (const Partition& lam : enumerate_partitions(5)) {
        auto single = refinement_set(lam, Partition{5});
        REQUIRE(single.size() == 1);
        CHECK(single[0] == RefinementTuple{lam});
    }

    CHECK(refinement_set(Partition{2}, Partition{1, 1}).empty());
    CHECK_THROWS_AS(refinement_set(Partition{2}, Partition{3}), DomainError);

    // empty whenever lambda does not precede mu in dominance order
    for (int k = 3; k <= 6; ++k)
        for (const Partition& lam : enumerate_partitions(k))
            for (const Partition& mu : enumerate_partitions(k))
                if (!dominated_by(lam, mu)) CHECK(refinement_set(lam, mu).empty());
}

TEST_CASE("E(a;r) enumeration") {
    auto e03 = enumerate_E(0, 3);
    REQUIRE(e03.size() == 5);
    std::vector<std::vector<int>> expected{
        {1, 2, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    std::set<std::vector<int>> got;
    for (const auto& s : e03) got.insert(s.entries);
    CHECK(got == std::set<std::vector<int>>(expected.begin(), expected.end()));

    for (int a = 0; a <= 4; ++a) {
        auto e = enumerate_E(a, 1);
        REQUIRE(e.size() == 1);
        CHECK(e[0].entries == std::vector<int>{a + 1});
    }

    CHECK(enumerate_E(1, 4).size() == 14);
    for (int a = 0; a <= 5; ++a)
        for (int r = 1; r <= 8; ++r)
            CHECK(Int(enumerate_E(a, r).size()) == catalan(r));
}

TEST_CASE("sequence types") {
    CHECK(sequence_type({1, 2, 3, 3}) == Partition{2, 1, 1});
    CHECK(sequence_type({4, 4, 4, 4, 7, 7, 7, 9, 9}) == Partition{4, 3, 2});
    CHECK(sequence_type({5, 5, 5}) == Partition{3});
    CHECK_THROWS_AS(sequence_type({}), DomainError);
}

TEST_CASE("refined Catalan numbers") {
    CHECK(rc_count(Partition{3, 1}) == 4);
    CHECK(rc_formula(Partition{3, 1}) == 4);
    for (int k = 1; k <= 6; ++k) {
        CHECK(rc_formula(Partition{k}) == 1);
        CHECK(rc_formula(Partition(std::vector<int>(k, 1))) == 1);
    }
    CHECK(rc_formula(Partition{2, 2}) == 2);
    CHECK(rc_formula(Partition{}) == 1);
    CHECK(rc_count(Partition{}) == 1);

    for (int k = 0; k <= 8; ++k) {
        Int total = 0;
        for (const Partition& lam : enumerate_partitions(k)) {
            if (k <= 8) CHECK(rc_count(lam) == rc_formula(lam));
            total += rc_formula(lam);
        }
        CHECK(total == catalan(k));
    }
}

TEST_CASE("Catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(5) == 42);
    CHECK(catalan(8) == 1430);
    for (int r = 1; r <= 10; ++r) {
        Int rec = 0;
        for (int q = 0; q <= r - 1; ++q) rec += catalan(q) * catalan(r - 1 - q);
        CHECK(rec == catalan(r));
    }
}

namespace {

// h_g on an explicit alphabet, by the complete-series product.
Int h_on(const std::vector<Int>& xs, int g) {
    std::vector<Int> s(g + 1, 0);
    s[0] = 1;
    for (const Int& x : xs)
        for (int j = 1; j <= g; ++j) s[j] += x * s[j - 1];
    return s[g];
}

}  // namespace

TEST_CASE("central factorial numbers") {
    CHECK(central_factorial(3, 2) == 5);
    CHECK(central_factorial(4, 3) == 14);
    CHECK(central_factorial(1, 1) == 1);
    for (int m = 1; m <= 6; ++m) CHECK(central_factorial(m, 0) == 0);

    // explicit alternating sum T(m,n) = 2 sum_j j^{2m} (-1)^{n-j} / ((n-j)!(n+j)!)
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= n + 4; ++m) {
            Rat total(0);
            for (int j = 1; j <= n; ++j) {
                Rat term = make_rat(int_pow(Int(j), 2 * m), factorial(n - j) * factorial(n + j));
                total += ((n - j) % 2 == 0) ? term : -term;
            }
            total *= 2;
            CHECK(total == Rat(central_factorial(m, n)));
        }

    // T(n+g, n) = h_g(1^2, ..., n^2)
    for (int n = 0; n <= 8; ++n)
        for (int g = 0; g <= 4; ++g) {
            std::vector<Int> squares;
            for (int j = 1; j <= n; ++j) squares.push_back(Int(j) * Int(j));
            CHECK(central_factorial(n + g, n) == h_on(squares, g));
        }
}

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(7, 5) == 140);
    CHECK(stirling2(5, 5) == 1);
    CHECK(stirling2(6, 4) == 65);  // equals h_2(1,2,3,4) = 30 + 35

    // explicit formula S(m,n) = sum_j j^{m-1} (-1)^{n-j} / ((j-1)!(n-j)!)
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= n + 4; ++m) {
            Rat total(0);
            for (int j = 1; j <= n; ++j) {
                Rat term = make_rat(int_pow(Int(j), m - 1), factorial(j - 1) * factorial(n - j));
                total += ((n - j) % 2 == 0) ? term : -term;
            }
            CHECK(total == Rat(stirling2(m, n)));
        }

    // S(n+g, n) = h_g(1, ..., n)
    for (int n = 0; n <= 8; ++n)
        for (int g = 0; g <= 4; ++g) {
            std::vector<Int> xs;
            for (int j = 1; j <= n; ++j) xs.push_back(j);
            CHECK(stirling2(n + g, n) == h_on(xs, g));
        }
}
