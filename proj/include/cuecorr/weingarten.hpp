#pragma once

#include <map>
#include <vector>

#include "cuecorr/class_expansion.hpp"
#include "cuecorr/numeric.hpp"
#include "cuecorr/partition.hpp"
#include "cuecorr/permutation.hpp"
#include "cuecorr/polynomial.hpp"

namespace cuecorr {

// Gram matrix of the intertwiner basis indexed by S_N(n) in reverse
// lexicographic order; entries N^{#(sigma tau^-1)}.  Symmetric, diagonal
// N^n, invertible over the rationals for every n, N >= 1.
struct GramMatrix {
    int n = 0;
    int N = 0;
    std::vector<Permutation> basis;
    std::vector<std::vector<Int>> entries;
};

GramMatrix gram_matrix(int n, int N);  // guard: |S_N(n)| <= 5040

// Exact inverse via fraction-free (Bareiss) elimination with a final
// rational back substitution; G * G^-1 == I is the caller-visible contract.
std::vector<std::vector<Rat>> invert_gram(const GramMatrix& g);

// Single column of G^-1: x with G x = e_col (0-based position in g.basis).
std::vector<Rat> gram_solve_column(const GramMatrix& g, std::size_t col);

struct CorrelatorQuery {
    IndexTuple i, j, iprime, jprime;

    CorrelatorQuery(IndexTuple i_, IndexTuple j_, IndexTuple ip_, IndexTuple jp_);
    int degree() const { return i.degree(); }
    int range() const { return i.range; }
};

// <prod u_{i(k)j(k)} conj(u_{i'(k)j'(k)})> for any n, N >= 1 (including the
// unstable range N < n), by Gram inversion over S_N(n).
Rat general_correlator(const CorrelatorQuery& q);

// <u_11 conj(u_{1 pi(1)}) ... u_nn conj(u_{n pi(n)})> for N >= n via the
// character/content formula.  Throws DomainError for N < n (use
// general_correlator there).
Rat permutation_correlator(const Permutation& pi, int N);

// Same value as a rational function of N (valid for N >= n), from the
// reduced cycle-type mu of the permutation.
RationalFunctionQ permutation_correlator_symbolic(const Partition& mu, int n);

// Wick-type expansion over permutation correlators; requires N >= n and
// agrees with general_correlator there.
Rat wick_decompose(const CorrelatorQuery& q);

// F^{|mu|+2g}_mu(n) for g = 0..gmax: the coefficients of the 1/N expansion
// (-1)^{|mu|} N^{n+|mu|} <...> = sum_g F^{|mu|+2g}_mu(n) / N^{2g}.
std::vector<Rat> expansion_series(const Partition& mu, int n, int gmax);

// (-1)^{n-1} Cat_{n-1} / (N (N^2-1) ... (N^2-(n-1)^2)), n >= 2.
RationalFunctionQ cyclic_closed_form(int n);

struct OneFixedPointResult {
    RationalFunctionQ gf;        // Phi_{(n-2)}(z; n)
    std::vector<Rat> a_coeffs;   // a_r, a_{r+2}, ..., a_{n-4} with r = n mod 2
};

// Generating function for the class of (n-1)-cycles in S(n), n >= 4:
// alternating + trivial hook terms plus the almost-hook rational part whose
// numerator coefficients solve a triangular system in central factorial and
// Stirling numbers.
OneFixedPointResult one_fixed_point_gf(int n);

struct GramDetReport {
    int n = 0;
    // det G(z) = z^{a_0} prod_k (z^2 - k^2)^{a_k}; exponents[k] = a_k.
    std::map<int, Int> exponents;
    Int total_degree;       // must equal n * n!
    bool direct_checked;    // n <= 4: symbolic determinant recomputed directly
    bool routes_agree;      // content-product route == direct route
};

GramDetReport gram_determinant(int n);  // guard n <= 5

// Leading 1/N coefficient: product of Catalan numbers over the reduced parts.
Int first_order(const Partition& mu);

}  // namespace cuecorr
