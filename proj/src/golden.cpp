#include "cuecorr/golden.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cuecorr {

namespace {

std::string strip(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<A1Entry> load_appendix_a1(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<A1Entry> out;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        auto colon = line.find(':', bar);
        if (bar == std::string::npos || colon == std::string::npos)
            throw std::runtime_error("appendix_a1: bad line '" + line + "'");
        SymFunSpec f = SymFunSpec::parse(strip(line.substr(0, bar)));
        Partition mu = parse_partition(strip(line.substr(bar + 1, colon - bar - 1)));
        std::vector<Rat> coeffs;
        std::istringstream cs(line.substr(colon + 1));
        std::string tok;
        while (cs >> tok) coeffs.push_back(parse_rat(tok));
        out.push_back({std::move(f), std::move(mu), PolynomialQ(std::move(coeffs))});
    }
    return out;
}

std::vector<A2Table> load_appendix_a2(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<A2Table> out;
    std::string line;
    A2Table cur;
    auto flush = [&] {
        if (cur.k > 0) out.push_back(std::move(cur));
        cur = A2Table{};
    };
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string word;
        is >> word;
        if (word == "table") {
            flush();
            is >> cur.k;
        } else if (word == "row" || word == "sum") {
            std::string rest;
            std::getline(is, rest);
            auto colon = rest.find(':');
            std::vector<Int> values;
            std::istringstream vs(rest.substr(colon + 1));
            std::string tok;
            while (vs >> tok) values.emplace_back(tok);
            if (word == "sum") {
                cur.sums = std::move(values);
            } else {
                cur.labels.push_back(parse_partition(strip(rest.substr(0, colon))));
                cur.entries.push_back(std::move(values));
            }
        } else {
            throw std::runtime_error("appendix_a2: bad line '" + line + "'");
        }
    }
    flush();
    return out;
}

VerifyReport verify_appendix_a1(const std::vector<A1Entry>& entries) {
    VerifyReport report;
    // group by f name so absent mu rows are checked as zero
    std::map<std::string, std::vector<const A1Entry*>> by_f;
    std::vector<std::string> order;
    for (const auto& e : entries) {
        auto name = e.f.name();
        if (!by_f.count(name)) order.push_back(name);
        by_f[name].push_back(&e);
    }
    for (const auto& name : order) {
        const auto& group = by_f[name];
        const SymFunSpec& f = group.front()->f;
        int deg = f.degree();
        int block_checks = 0;
        bool block_pass = true;
        for (int size = deg; size >= 0; size -= 2) {
            for (const Partition& mu : enumerate_partitions(size)) {
                PolynomialQ expected;
                for (const auto* e : group)
                    if (e->mu == mu) expected = e->poly;
                PolynomialQ actual = interpolate_class_poly(f, mu);
                ++report.checks;
                ++block_checks;
                if (actual != expected) {
                    block_pass = false;
                    report.pass = false;
                    report.failures.push_back("A1 " + name + " at c(" + mu.to_string() +
                                              "): expected " + expected.to_string("t") +
                                              ", computed " + actual.to_string("t"));
                }
            }
        }
        report.lines.push_back("A1 " + name + ": " + std::to_string(block_checks) +
                               " coefficient polynomials " + (block_pass ? "OK" : "MISMATCH"));
    }
    return report;
}

VerifyReport verify_appendix_a2(const std::vector<A2Table>& tables, int only_k,
                                int class_coeff_kmax) {
    VerifyReport report;
    for (const auto& table : tables) {
        if (only_k > 0 && table.k != only_k) continue;
        bool table_pass = true;
        auto expected_labels = enumerate_partitions(table.k);
        if (table.labels != expected_labels) {
            report.pass = false;
            report.failures.push_back("A2 k=" + std::to_string(table.k) +
                                      ": labels not in reverse lexicographic order");
            continue;
        }
        std::size_t m = table.labels.size();
        for (std::size_t row = 0; row < m; ++row)
            for (std::size_t col = 0; col < m; ++col) {
                const Partition& lam = table.labels[row];
                const Partition& mu = table.labels[col];
                Int expected = col < table.entries[row].size() ? table.entries[row][col] : Int(0);
                ++report.checks;
                Int computed = top_coeff_L(lam, mu);
                bool cell_ok = (computed == expected);
                if (cell_ok && table.k <= class_coeff_kmax) {
                    Rat via_chars = class_coeff(SymFunSpec(Basis::m, lam), mu, mu.weight());
                    cell_ok = (via_chars == Rat(expected));
                }
                if (!cell_ok) {
                    table_pass = false;
                    report.pass = false;
                    report.failures.push_back("A2 k=" + std::to_string(table.k) +
                                              " cell (lambda=(" + lam.to_string() + "), mu=(" +
                                              mu.to_string() + ")): expected " +
                                              expected.get_str() + ", computed " +
                                              computed.get_str());
                }
            }
        for (std::size_t col = 0; col < m; ++col) {
            Int col_sum = 0;
            for (std::size_t row = 0; row < m; ++row)
                col_sum += col < table.entries[row].size() ? table.entries[row][col] : Int(0);
            ++report.checks;
            Int cat_prod = top_coeff_F(table.labels[col]);
            if (col_sum != table.sums[col] || cat_prod != table.sums[col]) {
                table_pass = false;
                report.pass = false;
                report.failures.push_back("A2 k=" + std::to_string(table.k) + " SUM at mu=" +
                                          table.labels[col].to_string() + ": table " +
                                          table.sums[col].get_str() + ", column sum " +
                                          col_sum.get_str() + ", Catalan product " +
                                          cat_prod.get_str());
            }
        }
        report.lines.push_back("A2 k=" + std::to_string(table.k) + ": " +
                               std::to_string(m * m + m) + " cells " +
                               (table_pass ? "OK" : "MISMATCH"));
    }
    return report;
}

}  // namespace cuecorr
