#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuecorr/numeric.hpp"

namespace cuecorr {

// Univariate polynomial with exact rational coefficients, ascending degree,
// trailing zeros trimmed (zero polynomial has no coefficients).
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rat> coeffs);
    static PolynomialQ constant(const Rat& c);
    static PolynomialQ monomial(int deg, const Rat& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;

    Rat evaluate(const Rat& x) const;

    PolynomialQ operator+(const PolynomialQ& o) const;
    PolynomialQ operator-(const PolynomialQ& o) const;
    PolynomialQ operator*(const PolynomialQ& o) const;
    PolynomialQ operator*(const Rat& s) const;
    PolynomialQ operator-() const;
    bool operator==(const PolynomialQ&) const = default;

    // Unique polynomial of degree < points.size() through the given points
    // (Newton divided differences; x values must be distinct).
    static PolynomialQ interpolate(const std::vector<std::pair<Rat, Rat>>& points);

    std::string to_string(const std::string& var) const;           // ascending
    std::string factored_string(const std::string& var) const;     // rational roots, fallback expanded

private:
    std::vector<Rat> c_;
    void trim();
};

// Monic gcd; gcd(0,0) = 0.
PolynomialQ poly_gcd(PolynomialQ a, PolynomialQ b);

// Integer-coefficient polynomial helpers (ascending coefficients, trailing
// zeros trimmed).  Used by the fraction-free symbolic elimination.
using IPoly = std::vector<Int>;
void ipoly_trim(IPoly& p);
IPoly ipoly_mul(const IPoly& a, const IPoly& b);
IPoly ipoly_sub(const IPoly& a, const IPoly& b);
IPoly ipoly_exact_div(const IPoly& a, const IPoly& b);  // throws if not exact
int ipoly_degree(const IPoly& p);                       // -1 for zero

// Quotient of integer-coefficient polynomials: primitive, coprime,
// denominator leading coefficient positive.  Canonical, so equality is
// memberwise.
class RationalFunctionQ {
public:
    RationalFunctionQ();  // zero
    RationalFunctionQ(const PolynomialQ& num, const PolynomialQ& den);
    static RationalFunctionQ from_poly(const PolynomialQ& p);
    static RationalFunctionQ constant(const Rat& c);

    const IPoly& num() const { return num_; }
    const IPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    PolynomialQ num_poly() const;
    PolynomialQ den_poly() const;

    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-(const RationalFunctionQ& o) const;
    RationalFunctionQ operator*(const RationalFunctionQ& o) const;
    RationalFunctionQ operator/(const RationalFunctionQ& o) const;
    bool operator==(const RationalFunctionQ&) const = default;

    Rat evaluate(const Rat& x) const;  // throws DomainError at a pole

    // Taylor coefficients at 0 up to degree kmax (requires den(0) != 0).
    std::vector<Rat> series_at_zero(int kmax) const;

    std::string expanded_string(const std::string& var) const;
    std::string factored_string(const std::string& var) const;

private:
    IPoly num_, den_;
};

// Ascending series in t = 1/x of x^d * f(x); requires that f vanish at
// infinity to order at least d (deg den - deg num >= d).
std::vector<Rat> series_in_inverse(const RationalFunctionQ& f, int d, int kmax);

}  // namespace cuecorr
