#include "cuecorr/symfun.hpp"

#include <sstream>

namespace cuecorr {

namespace {

char basis_char(Basis b) {
    switch (b) {
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
        case Basis::m: return 'm';
    }
    return '?';
}

}  // namespace

SymFunSpec::SymFunSpec(Basis b, int k) {
    if (k < 0) throw DomainError("SymFunSpec: negative degree");
    if (b == Basis::p && k == 0)
        throw DomainError("SymFunSpec: p_0 is not defined");
    if (k > 0 || b == Basis::m)
        factors.push_back({b, k > 0 ? Partition{k} : Partition{}});
    // e_0 = h_0 = 1: empty product
}

SymFunSpec::SymFunSpec(Basis b, const Partition& lambda) {
    if (b != Basis::m && lambda.length() > 1)
        throw DomainError("SymFunSpec: e/h/p take an integer index");
    if (b == Basis::m) {
        factors.push_back({b, lambda});
    } else {
        *this = SymFunSpec(b, lambda.size());
    }
}

int SymFunSpec::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree();
    return d;
}

std::string SymFunSpec::name() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << '*';
        const auto& f = factors[i];
        if (f.basis == Basis::m)
            os << "m(" << f.index.to_string() << ")";
        else
            os << basis_char(f.basis) << f.index.size();
    }
    return os.str();
}

SymFunSpec SymFunSpec::parse(const std::string& s) {
    SymFunSpec out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '*')) {
        if (tok.empty()) throw DomainError("SymFunSpec::parse: empty factor");
        Basis b;
        switch (tok[0]) {
            case 'e': b = Basis::e; break;
            case 'h': b = Basis::h; break;
            case 'p': b = Basis::p; break;
            case 'm': b = Basis::m; break;
            default: throw DomainError("SymFunSpec::parse: unknown basis '" + tok + "'");
        }
        std::string rest = tok.substr(1);
        if (!rest.empty() && rest.front() == '(') {
            if (rest.back() != ')') throw DomainError("SymFunSpec::parse: missing ')'");
            rest = rest.substr(1, rest.size() - 2);
        }
        if (b == Basis::m) {
            out = out * SymFunSpec(b, parse_partition(rest));
        } else {
            out = out * SymFunSpec(b, std::stoi(rest));
        }
    }
    return out;
}

SymFunSpec operator*(const SymFunSpec& a, const SymFunSpec& b) {
    SymFunSpec out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

}  // namespace cuecorr
