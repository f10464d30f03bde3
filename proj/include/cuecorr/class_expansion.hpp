#pragma once

#include "cuecorr/characters.hpp"
#include "cuecorr/numeric.hpp"
#include "cuecorr/partition.hpp"
#include "cuecorr/polynomial.hpp"
#include "cuecorr/symfun.hpp"

namespace cuecorr {

// Coefficient of the class c_mu(n) in f(Xi_n), computed by the character
// route (1/n!) sum over lambda of f(A_lambda) dim(lambda) chi^lambda_nu
// with nu = inflate(mu, n).  Requires wt(mu) <= n.
Rat class_coeff(const SymFunSpec& f, const Partition& mu, int n);

// F^0_mu(n) ... F^kmax_mu(n): truncated expansion of
// Phi_mu(z;n) = sum_lambda chi^lambda_nu / (H_lambda prod (1 - c z)).
std::vector<Rat> F_coeffs(const Partition& mu, int n, int kmax);

// The polynomial G_mu(f, t): interpolated from deg(f)+1 sample points
// starting at n = max(wt(mu), 1), then certified against one extra point
// (DomainError on mismatch: the degree bound would be violated).
PolynomialQ interpolate_class_poly(const SymFunSpec& f, const Partition& mu);

// Top class coefficient L^lambda_mu: sum over refinement tuples of products
// of refined Catalan numbers.  Requires |lambda| == |mu|.
Int top_coeff_L(const Partition& lam, const Partition& mu);

// Top coefficient of h_{|mu|}: product of Catalan numbers over the parts.
Int top_coeff_F(const Partition& mu);

// Closed form for G_(0)(p_2r, t): sum over p of (2p)!/((p+1)!)^2 T(r,p)
// t(t-1)...(t-p).
PolynomialQ fkmo_L(int r);

Rat plancherel_average(const SymFunSpec& f, int n);  // sum f(A_lambda)(dim)^2/n!
PolynomialQ plancherel_poly(const SymFunSpec& f);

// Number of factorizations sigma_mu = (s_1,t_1)...(s_k,t_k) in S(n) with
// s_i < t_i and t_1 <= ... <= t_k (the jm-monotone count, = F^k_mu(n)); the
// typed variant additionally requires (t_i) of type lambda (= the
// coefficient of c_mu(n) in m_lambda(Xi_n)).
Int brute_factorization_count(const Partition& mu, int n, int k);
Int brute_factorization_count_typed(const Partition& mu, int n, const Partition& lam);

}  // namespace cuecorr
