#pragma once

#include <string>
#include <vector>

#include "cuecorr/partition.hpp"

namespace cuecorr {

enum class Basis { e, h, p, m };

// A generator e_k / h_k / p_k / m_lambda.  For e, h, p the index partition
// is the single part (k); e_0 and h_0 are the constant 1 (empty index).
struct SymFunFactor {
    Basis basis;
    Partition index;

    int degree() const { return index.size(); }
};

// A formal product of generators; the empty product is the constant 1.
struct SymFunSpec {
    std::vector<SymFunFactor> factors;

    SymFunSpec() = default;
    SymFunSpec(Basis b, int k);                    // e/h/p generator
    SymFunSpec(Basis b, const Partition& lambda);  // m_lambda (or e/h/p with single part)

    int degree() const;
    std::string name() const;  // "h3", "m(2,1)", "e2*e1", ...

    // Parses "h3", "p4", "m2,1", "m(2,1)", and '*'-joined products thereof.
    static SymFunSpec parse(const std::string& s);
};

SymFunSpec operator*(const SymFunSpec& a, const SymFunSpec& b);

}  // namespace cuecorr
