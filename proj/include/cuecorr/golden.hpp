#pragma once

#include <string>
#include <vector>

#include "cuecorr/class_expansion.hpp"
#include "cuecorr/polynomial.hpp"
#include "cuecorr/symfun.hpp"

namespace cuecorr {

// One displayed class expansion: the coefficient polynomial of c_mu(n) in
// f(Xi_n), as a polynomial in n.
struct A1Entry {
    SymFunSpec f;
    Partition mu;
    PolynomialQ poly;
};

// One table of top class coefficients L^lambda_mu for lambda, mu of k,
// rows/columns in reverse lexicographic order, plus the SUM row.
struct A2Table {
    int k = 0;
    std::vector<Partition> labels;
    std::vector<std::vector<Int>> entries;  // entries[row][col] = L^{labels[row]}_{labels[col]}
    std::vector<Int> sums;
};

std::vector<A1Entry> load_appendix_a1(const std::string& path);
std::vector<A2Table> load_appendix_a2(const std::string& path);

struct VerifyReport {
    bool pass = true;
    int checks = 0;
    std::vector<std::string> lines;     // one summary line per block/table
    std::vector<std::string> failures;  // one line per mismatching cell
};

// Recomputes every coefficient polynomial by interpolation of the character
// route and diffs against the table; entries absent from the data must
// interpolate to zero (candidate mu of every size of matching parity).
VerifyReport verify_appendix_a1(const std::vector<A1Entry>& entries);

// Recomputes L^lambda_mu (refined-Catalan route) and the SUM rows (product
// of Catalans route); for k <= class_coeff_kmax each entry is additionally
// recomputed as class_coeff(m_lambda, mu, wt(mu)).
VerifyReport verify_appendix_a2(const std::vector<A2Table>& tables, int only_k = -1,
                                int class_coeff_kmax = 5);

}  // namespace cuecorr
