#pragma once

#include <map>
#include <vector>

#include "cuecorr/numeric.hpp"
#include "cuecorr/partition.hpp"

namespace cuecorr {

enum class GenBasis { e, h };

// Polynomial in formal generators g_1, g_2, ... (read as e_r or h_r
// according to the basis tag).  A monomial prod g_{lambda_i} is keyed by its
// exponent multiset, the partition lambda; its graded degree is |lambda|.
class GeneratorPolynomial {
public:
    explicit GeneratorPolynomial(GenBasis basis) : basis_(basis) {}
    static GeneratorPolynomial constant(GenBasis basis, const Rat& c);
    static GeneratorPolynomial generator(GenBasis basis, int r);  // g_r

    GenBasis basis() const { return basis_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& key) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max |key|, -1 when zero

    void add_term(const Partition& key, const Rat& c);

    GeneratorPolynomial operator+(const GeneratorPolynomial& o) const;
    GeneratorPolynomial operator*(const GeneratorPolynomial& o) const;
    GeneratorPolynomial operator*(const Rat& s) const;
    bool operator==(const GeneratorPolynomial&) const = default;

private:
    GenBasis basis_;
    std::map<Partition, Rat> terms_;
};

// h*_r = (-1)^r sum over lambda of r of RC(lambda) e_lambda.
GeneratorPolynomial hstar_in_e(int r);

// h*_1 ... h*_rmax as polynomials in the formal h_r, obtained by reverting
// u = t + sum h_r t^{r+1} degree by degree.  Independent of the RC formula.
std::vector<GeneratorPolynomial> hstar_by_reversion(int rmax);

GeneratorPolynomial convert_e_to_h(const GeneratorPolynomial& p);
GeneratorPolynomial convert_h_to_e(const GeneratorPolynomial& p);

struct TransitionColumn {
    Partition mu;
    bool pass;
    GeneratorPolynomial expected;  // sum_lambda L^lambda_mu e_lambda
    GeneratorPolynomial actual;    // (-1)^k h*_mu in the e basis
};

struct TransitionReport {
    int k;
    bool pass;
    std::vector<TransitionColumn> columns;
};

// Verifies (-1)^k h*_mu = sum_lambda L^lambda_mu e_lambda for every mu of k,
// with h*_mu built from the reversion route.
TransitionReport transition_check(int k);

}  // namespace cuecorr
