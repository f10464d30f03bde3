#pragma once

#include "cuecorr/numeric.hpp"
#include "cuecorr/partition.hpp"
#include "cuecorr/symfun.hpp"

namespace cuecorr {

// Content multiset of a Young diagram, sorted ascending.  Uses the diagram
// definition c(cell) = column - row throughout; in particular the row shape
// (n) has contents {0,1,...,n-1} and the column shape (1^n) has contents
// {0,-1,...,-(n-1)}.  (Some sources shift the one-row alphabet to {1..n};
// the generating-function identities below fix the diagram convention.)
using ContentAlphabet = std::vector<int>;

ContentAlphabet contents(const Partition& lam);

struct HookData {
    Partition shape;
    Int hook_product;  // H_lambda
    Int dimension;     // n! / H_lambda
};

HookData hook_data(const Partition& lam);

// Irreducible character chi^lam_nu via the Murnaghan-Nakayama border-strip
// recursion on beta-numbers, memoized per thread on (shape, #remaining
// parts of nu).  Requires |lam| == |nu|.
Int character(const Partition& lam, const Partition& nu);

// omega-hat_mu(lam) = |C_mu(n)| chi^lam_nu / dim(lam) with n = |lam| and
// nu = inflate(mu, n); zero when n < wt(mu).
Rat central_character(const Partition& mu, const Partition& lam);

// f evaluated on the finite multiset A (zeros padded).  m_lambda enumerates
// injective placements of the parts onto distinct positions of A and divides
// by the multiplicity factorials; e/h go through truncated series products;
// p is a power sum.
Rat eval_on_alphabet(const SymFunSpec& f, const ContentAlphabet& A);
Rat eval_generator_on_alphabet(Basis b, const Partition& index, const ContentAlphabet& A);

}  // namespace cuecorr
