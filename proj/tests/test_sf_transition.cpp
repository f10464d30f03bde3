#include <doctest.h>

#include <random>

#include "cuecorr/sf_transition.hpp"

using namespace cuecorr;

TEST_CASE("h* in the elementary basis") {
    GeneratorPolynomial h1 = hstar_in_e(1);
    CHECK(h1.coeff(Partition{1}) == -1);
    CHECK(h1.terms().size() == 1);

    GeneratorPolynomial h2 = hstar_in_e(2);
    CHECK(h2.coeff(Partition{2}) == 1);
    CHECK(h2.coeff(Partition{1, 1}) == 1);

    GeneratorPolynomial h3 = hstar_in_e(3);
    CHECK(h3.coeff(Partition{3}) == -1);
    CHECK(h3.coeff(Partition{2, 1}) == -3);
    CHECK(h3.coeff(Partition{1, 1, 1}) == -1);
}

TEST_CASE("reversion route") {
    auto hstars = hstar_by_reversion(7);
    // h*_1 = -h_1
    CHECK(hstars[0].coeff(Partition{1}) == -1);
    CHECK(hstars[0].terms().size() == 1);
    // h*_2 = -h_2 + 2 h_1^2
    CHECK(hstars[1].coeff(Partition{2}) == -1);
    CHECK(hstars[1].coeff(Partition{1, 1}) == 2);
    CHECK(hstars[1].terms().size() == 2);

    for (int r = 1; r <= 7; ++r) {
        CHECK(hstars[r - 1] == convert_e_to_h(hstar_in_e(r)));
        CHECK(convert_h_to_e(hstars[r - 1]) == hstar_in_e(r));
    }
}

TEST_CASE("basis conversions") {
    CHECK(convert_e_to_h(GeneratorPolynomial::generator(GenBasis::e, 1)) ==
          GeneratorPolynomial::generator(GenBasis::h, 1));

    GeneratorPolynomial e2h = convert_e_to_h(GeneratorPolynomial::generator(GenBasis::e, 2));
    CHECK(e2h.coeff(Partition{1, 1}) == 1);
    CHECK(e2h.coeff(Partition{2}) == -1);

    // exact round trips on random inputs up to degree 6, and on pure
    // generator monomials up to degree 8
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorPolynomial p(GenBasis::e);
        for (int size = 0; size <= 6; ++size)
            for (const Partition& key : enumerate_partitions(size))
                p.add_term(key, Rat(coeff(rng)));
        CHECK(convert_h_to_e(convert_e_to_h(p)) == p);
    }
    for (int size = 1; size <= 8; ++size)
        for (const Partition& key : enumerate_partitions(size)) {
            GeneratorPolynomial mono(GenBasis::h);
            mono.add_term(key, Rat(1));
            CHECK(convert_e_to_h(convert_h_to_e(mono)) == mono);
        }
}

TEST_CASE("transition-matrix identity") {
    // k = 1: -h*_1 = e_1
    TransitionReport r1 = transition_check(1);
    CHECK(r1.pass);
    CHECK(r1.columns.size() == 1);
    CHECK(r1.columns[0].actual.coeff(Partition{1}) == 1);

    // k = 2, mu = (2): h*_2 = e_2 + e_1^2
    TransitionReport r2 = transition_check(2);
    CHECK(r2.pass);
    for (const auto& col : r2.columns)
        if (col.mu == Partition{2}) {
            CHECK(col.actual.coeff(Partition{2}) == 1);
            CHECK(col.actual.coeff(Partition{1, 1}) == 1);
        }

    // k = 4, mu = (2,2) column matches the L table
    TransitionReport r4 = transition_check(4);
    CHECK(r4.pass);
    for (const auto& col : r4.columns)
        if (col.mu == Partition{2, 2}) {
            CHECK(col.actual.coeff(Partition{4}) == 0);
            CHECK(col.actual.coeff(Partition{3, 1}) == 0);
            CHECK(col.actual.coeff(Partition{2, 2}) == 1);
            CHECK(col.actual.coeff(Partition{2, 1, 1}) == 2);
            CHECK(col.actual.coeff(Partition{1, 1, 1, 1}) == 1);
        }

    CHECK(transition_check(5).pass);
    CHECK(transition_check(6).pass);
    CHECK(transition_check(7).pass);
}
