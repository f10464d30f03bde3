#include <doctest.h>

#include "cuecorr/class_expansion.hpp"
#include "cuecorr/group_algebra.hpp"

using namespace cuecorr;

namespace {

std::vector<SymFunSpec> generators_up_to_degree(int dmax) {
    std::vector<SymFunSpec> out;
    for (int k = 1; k <= dmax; ++k) {
        out.emplace_back(Basis::e, k);
        out.emplace_back(Basis::h, k);
        out.emplace_back(Basis::p, k);
        for (const Partition& lam : enumerate_partitions(k)) out.emplace_back(Basis::m, lam);
    }
    return out;
}

}  // namespace

TEST_CASE("class_coeff examples") {
    CHECK(class_coeff(SymFunSpec(Basis::h, 3), Partition{1}, 4) == 10);
    CHECK(class_coeff(SymFunSpec(Basis::h, 2), Partition{}, 3) == 3);
    for (int n = 3; n <= 7; ++n)
        CHECK(class_coeff(SymFunSpec(Basis::e, 2), Partition{2}, n) == 1);
    CHECK_THROWS_AS(class_coeff(SymFunSpec(Basis::h, 2), Partition{2}, 2), DomainError);
}

TEST_CASE("class_coeff equals the direct group-algebra coefficient") {
    for (int n = 2; n <= 6; ++n)
        for (const SymFunSpec& f : generators_up_to_degree(4)) {
            ClassVector direct = to_class_vector(eval_symfun_direct(f, n));
            for (int size = f.degree(); size >= 0; size -= 2)
                for (const Partition& mu : enumerate_partitions(size))
                    if (mu.weight() <= n)
                        CHECK(class_coeff(f, mu, n) == direct.coeff(mu));
        }
}

TEST_CASE("F_coeffs") {
    auto f46 = F_coeffs(Partition{4}, 6, 10);
    CHECK(f46[4] == 14);
    CHECK(f46[6] == 630);
    CHECK(f46[8] == 20328);
    CHECK(f46[10] == 580580);
    CHECK(f46[0] == 0);
    CHECK(f46[5] == 0);

    for (int n = 1; n <= 6; ++n) {
        auto f = F_coeffs(Partition{}, n, 4);
        CHECK(f[0] == 1);
        CHECK(f[1] == 0);
        CHECK(f[2] == Rat(n * (n - 1)) / 2);
        CHECK(f[3] == 0);
        CHECK(f[4] == Rat(n * (n - 1) * (3 * n * n + 17 * n - 34)) / 24);
    }

    // last entry of the length-|mu| truncation is the Catalan product
    for (int size = 1; size <= 4; ++size)
        for (const Partition& mu : enumerate_partitions(size))
            for (int n = mu.weight(); n <= mu.weight() + 2; ++n)
                CHECK(F_coeffs(mu, n, size).back() == Rat(top_coeff_F(mu)));

    // vanishing and parity for everything computed
    for (int size = 0; size <= 5; ++size)
        for (const Partition& mu : enumerate_partitions(size)) {
            if (mu.weight() > 6) continue;
            auto f = F_coeffs(mu, 6, 6);
            for (int k = 0; k <= 6; ++k)
                if (k < size || (k - size) % 2 != 0) CHECK(f[k] == 0);
        }

    // the series entries are the h_k class coefficients
    for (int size = 0; size <= 3; ++size)
        for (const Partition& mu : enumerate_partitions(size))
            for (int n = std::max(mu.weight(), 1); n <= 5; ++n) {
                auto f = F_coeffs(mu, n, 4);
                for (int k = 1; k <= 4; ++k)
                    CHECK(f[k] == class_coeff(SymFunSpec(Basis::h, k), mu, n));
            }
}

TEST_CASE("interpolated class polynomials") {
    PolynomialQ h3_1 = interpolate_class_poly(SymFunSpec(Basis::h, 3), Partition{1});
    CHECK(h3_1 == PolynomialQ({Rat(-4), Rat(3) / 2, Rat(1) / 2}));

    PolynomialQ m4_0 = interpolate_class_poly(SymFunSpec(Basis::m, Partition{4}), Partition{});
    CHECK(m4_0 == PolynomialQ({Rat(0), Rat(5) / 6, Rat(-3) / 2, Rat(2) / 3}));

    PolynomialQ h4_0 = interpolate_class_poly(SymFunSpec(Basis::h, 4), Partition{});
    CHECK(h4_0 ==
          PolynomialQ({Rat(0), Rat(17) / 12, Rat(-17) / 8, Rat(7) / 12, Rat(1) / 8}));
}

TEST_CASE("top class coefficients") {
    CHECK(top_coeff_L(Partition{3, 2, 2, 1}, Partition{5, 3}) == 25);
    for (int k = 1; k <= 6; ++k)
        for (const Partition& mu : enumerate_partitions(k))
            CHECK(top_coeff_L(Partition(std::vector<int>(k, 1)), mu) == 1);
    CHECK(top_coeff_L(Partition{2, 1, 1}, Partition{4}) == 6);

    // unitriangularity in dominance order
    for (int k = 2; k <= 6; ++k)
        for (const Partition& lam : enumerate_partitions(k)) {
            CHECK(top_coeff_L(lam, lam) == 1);
            for (const Partition& mu : enumerate_partitions(k))
                if (!dominated_by(lam, mu)) CHECK(top_coeff_L(lam, mu) == 0);
        }

    // n-independence: class_coeff(m_lambda, mu, n) constant when |lambda| = |mu|
    for (int k = 1; k <= 4; ++k)
        for (const Partition& lam : enumerate_partitions(k))
            for (const Partition& mu : enumerate_partitions(k)) {
                Rat expected(top_coeff_L(lam, mu));
                for (int n = mu.weight(); n <= mu.weight() + 3; ++n)
                    CHECK(class_coeff(SymFunSpec(Basis::m, lam), mu, n) == expected);
            }

    CHECK(top_coeff_F(Partition{2, 2}) == 4);
    CHECK(top_coeff_F(Partition{4}) == 14);
    CHECK(top_coeff_F(Partition{}) == 1);

    // row sums of the L table are products of Catalan numbers
    for (int k = 1; k <= 7; ++k)
        for (const Partition& mu : enumerate_partitions(k)) {
            Int total = 0;
            for (const Partition& lam : enumerate_partitions(k)) total += top_coeff_L(lam, mu);
            CHECK(total == top_coeff_F(mu));
        }
}

TEST_CASE("FKMO closed form") {
    CHECK(fkmo_L(1) == PolynomialQ({Rat(0), Rat(-1) / 2, Rat(1) / 2}));
    CHECK(fkmo_L(2) == PolynomialQ({Rat(0), Rat(5) / 6, Rat(-3) / 2, Rat(2) / 3}));
    CHECK(fkmo_L(3) == interpolate_class_poly(SymFunSpec(Basis::p, 6), Partition{}));
}

TEST_CASE("Plancherel averages") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(plancherel_average(SymFunSpec(Basis::h, 2), n) == Rat(n * (n - 1)) / 2);
        CHECK(plancherel_average(SymFunSpec(Basis::p, 1), n) == 0);
        CHECK(plancherel_average(SymFunSpec(Basis::e, 1), n) == 0);
        CHECK(plancherel_average(SymFunSpec(Basis::h, 2), n) ==
              class_coeff(SymFunSpec(Basis::h, 2), Partition{}, n));
    }
    CHECK(plancherel_poly(SymFunSpec(Basis::h, 2)) ==
          PolynomialQ({Rat(0), Rat(-1) / 2, Rat(1) / 2}));
    CHECK(plancherel_poly(SymFunSpec(Basis::p, 1)).is_zero());
}

TEST_CASE("brute factorization counts") {
    CHECK(brute_factorization_count(Partition{2}, 3, 2) == 2);
    CHECK(brute_factorization_count(Partition{3}, 5, 3) == 5);  // Cat_3 minimal factorizations
    CHECK(brute_factorization_count(Partition{1}, 2, 3) == 1);
    CHECK_THROWS_AS(brute_factorization_count(Partition{1}, 9, 2), ResourceError);

    // monotone counts match the generating-function coefficients
    for (int size = 0; size <= 3; ++size)
        for (const Partition& mu : enumerate_partitions(size))
            for (int n = std::max(mu.weight(), 1); n <= 5; ++n) {
                auto f = F_coeffs(mu, n, 4);
                for (int k = 0; k <= 4; ++k)
                    CHECK(Rat(brute_factorization_count(mu, n, k)) == f[k]);
            }

    // typed counts match the monomial class coefficients
    for (int k = 1; k <= 3; ++k)
        for (const Partition& lam : enumerate_partitions(k))
            for (int size = k % 2; size <= k; size += 2)
                for (const Partition& mu : enumerate_partitions(size))
                    for (int n = std::max(mu.weight(), 2); n <= 5; ++n)
                        CHECK(Rat(brute_factorization_count_typed(mu, n, lam)) ==
                              class_coeff(SymFunSpec(Basis::m, lam), mu, n));
}

TEST_CASE("product specs agree across both routes") {
    std::vector<SymFunSpec> products{
        SymFunSpec(Basis::e, 2) * SymFunSpec(Basis::e, 1),
        SymFunSpec(Basis::h, 2) * SymFunSpec(Basis::p, 1),
        SymFunSpec(Basis::m, Partition{2, 1}) * SymFunSpec(Basis::e, 1),
        SymFunSpec(Basis::p, 2) * SymFunSpec(Basis::p, 2),
    };
    for (int n = 3; n <= 5; ++n)
        for (const auto& f : products) {
            ClassVector direct = to_class_vector(eval_symfun_direct(f, n));
            for (int size = f.degree(); size >= 0; size -= 2)
                for (const Partition& mu : enumerate_partitions(size))
                    if (mu.weight() <= n)
                        CHECK(class_coeff(f, mu, n) == direct.coeff(mu));
        }
}

TEST_CASE("parallel lambda sums are deterministic") {
    SymFunSpec f(Basis::m, Partition{2, 2});
    Rat expected = class_coeff(f, Partition{2}, 8);
    int saved = thread_count();
    thread_count() = 3;
    CHECK(class_coeff(f, Partition{2}, 8) == expected);
    CHECK(plancherel_average(f, 8) == plancherel_average(f, 8));
    thread_count() = saved;
}

TEST_CASE("shifted-symmetric consistency: f(A_lambda) = sum G_mu omega-hat_mu") {
    for (int n = 2; n <= 5; ++n)
        for (const SymFunSpec& f : generators_up_to_degree(3))
            for (const Partition& lam : enumerate_partitions(n)) {
                Rat rhs(0);
                for (int size = f.degree(); size >= 0; size -= 2)
                    for (const Partition& mu : enumerate_partitions(size))
                        if (mu.weight() <= n)
                            rhs += class_coeff(f, mu, n) * central_character(mu, lam);
                CHECK(eval_on_alphabet(f, contents(lam)) == rhs);
            }
}
