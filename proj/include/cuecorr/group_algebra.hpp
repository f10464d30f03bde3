#pragma once

#include <map>

#include "cuecorr/numeric.hpp"
#include "cuecorr/permutation.hpp"
#include "cuecorr/symfun.hpp"

namespace cuecorr {

// Sparse exact-rational element of C[S(n)].  Stored coefficients are
// nonzero; all permutations have the common degree.  Values are immutable
// in spirit: operations allocate fresh results.
class AlgebraElement {
public:
    explicit AlgebraElement(int degree) : degree_(degree) {}
    static AlgebraElement zero(int degree) { return AlgebraElement(degree); }
    static AlgebraElement delta(const Permutation& s);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, Rat>& terms() const { return terms_; }

    // Accumulates c onto sigma's coefficient, erasing exact zeros.
    void add_term(const Permutation& sigma, const Rat& c);

    bool operator==(const AlgebraElement&) const = default;

private:
    int degree_;
    std::map<Permutation, Rat> terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rat& c);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);  // convolution

Rat coefficient_of(const AlgebraElement& a, const Permutation& sigma);

// J_k = (1,k) + ... + (k-1,k); J_1 is the zero element.
AlgebraElement jm_element(int k, int n);

// f(Xi_n) by direct expansion of Jucys-Murphy products over the admissible
// index sequences (strictly increasing for e, weakly increasing for h, all
// equal for p, weakly increasing of type lambda for m).  Direct evaluation
// is capped at n <= 9 (ResourceError beyond).
AlgebraElement eval_symfun_direct(const SymFunSpec& f, int n);

// Class-basis coordinates of a central element, keyed by reduced cycle-type.
class ClassVector {
public:
    explicit ClassVector(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(const Partition& mu) const;

    void set(const Partition& mu, const Rat& c);  // requires wt(mu) <= degree

    bool operator==(const ClassVector&) const = default;

private:
    int degree_;
    std::map<Partition, Rat> coeffs_;
};

// Thrown by to_class_vector on non-central input; names two members of one
// conjugacy class carrying different coefficients.
class CentralityError : public DomainError {
public:
    CentralityError(const Permutation& a, const Rat& ca, const Permutation& b, const Rat& cb);
};

ClassVector to_class_vector(const AlgebraElement& a);

AlgebraElement class_indicator(const Partition& mu, int n);  // requires wt(mu) <= n
ClassVector class_product(const Partition& alpha, const Partition& beta, int n);

}  // namespace cuecorr
