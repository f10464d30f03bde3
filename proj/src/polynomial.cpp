#include "cuecorr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cuecorr {

void PolynomialQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolynomialQ::PolynomialQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolynomialQ PolynomialQ::constant(const Rat& c) { return PolynomialQ({c}); }

PolynomialQ PolynomialQ::monomial(int deg, const Rat& c) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return PolynomialQ(std::move(v));
}

Rat PolynomialQ::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
}

Rat PolynomialQ::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolynomialQ PolynomialQ::operator+(const PolynomialQ& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::operator-(const PolynomialQ& o) const { return *this + (-o); }

PolynomialQ PolynomialQ::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::operator*(const PolynomialQ& o) const {
    if (is_zero() || o.is_zero()) return PolynomialQ();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::operator*(const Rat& s) const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= s;
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    std::size_t m = points.size();
    if (m == 0) return PolynomialQ();
    // Newton divided differences
    std::vector<Rat> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            Rat dx = points[i].first - points[i - level].first;
            if (dx == 0) throw DomainError("interpolate: repeated x value");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    PolynomialQ result = PolynomialQ::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        PolynomialQ lin({-points[i].first, Rat(1)});
        result = result * lin + PolynomialQ::constant(dd[i]);
    }
    return result;
}

namespace {

std::string rat_coeff_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string term_str(const Rat& c, int deg, const std::string& var, bool leading) {
    std::ostringstream os;
    Rat a = c;
    if (a < 0) {
        os << (leading ? "-" : " - ");
        a = -a;
    } else if (!leading) {
        os << " + ";
    }
    bool unit = (a == 1);
    if (deg == 0) {
        os << rat_coeff_str(a);
    } else {
        if (!unit) os << rat_coeff_str(a) << "*";
        os << var;
        if (deg > 1) os << "^" << deg;
    }
    return os.str();
}

}  // namespace

std::string PolynomialQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        os << term_str(c_[i], static_cast<int>(i), var, leading);
        leading = false;
    }
    return os.str();
}

PolynomialQ poly_gcd(PolynomialQ a, PolynomialQ b) {
    auto make_monic = [](PolynomialQ p) {
        if (p.is_zero()) return p;
        return p * (Rat(1) / p.coeffs().back());
    };
    while (!b.is_zero()) {
        // remainder of a by b
        PolynomialQ r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat q = r.coeffs().back() / b.coeffs().back();
            r = r - PolynomialQ::monomial(r.degree() - b.degree(), q) * b;
        }
        a = b;
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

void ipoly_trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int ipoly_degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly v(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    ipoly_trim(v);
    return v;
}

IPoly ipoly_sub(const IPoly& a, const IPoly& b) {
    IPoly v(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
    ipoly_trim(v);
    return v;
}

IPoly ipoly_exact_div(const IPoly& a, const IPoly& b) {
    if (b.empty()) throw DomainError("ipoly_exact_div: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw DomainError("ipoly_exact_div: not divisible");
    IPoly rem = a;
    IPoly quot(a.size() - b.size() + 1, Int(0));
    for (int qd = static_cast<int>(quot.size()) - 1; qd >= 0; --qd) {
        Int lead = rem.size() > b.size() - 1 + qd ? rem[b.size() - 1 + qd] : Int(0);
        if (lead == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) throw DomainError("ipoly_exact_div: not divisible");
        quot[qd] = q;
        for (std::size_t i = 0; i < b.size(); ++i) rem[qd + i] -= q * b[i];
    }
    ipoly_trim(rem);
    if (!rem.empty()) throw DomainError("ipoly_exact_div: nonzero remainder");
    return quot;
}

namespace {

// Smallest positive integer multiplier clearing all denominators.
Int common_denominator(const PolynomialQ& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) {
        Int d = c.get_den();
        l = l / gcd(l, d) * d;
    }
    return l;
}

Int ipoly_content(const IPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

IPoly to_primitive_ipoly(const PolynomialQ& p, Int& scale_num, Int& scale_den) {
    // p = (scale_num / scale_den) * primitive
    if (p.is_zero()) {
        scale_num = 0;
        scale_den = 1;
        return {};
    }
    Int mult = common_denominator(p);
    IPoly v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(Int(c.get_num() * (mult / c.get_den())));
    Int content = ipoly_content(v);
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    scale_num = content;
    scale_den = mult;
    return v;
}

PolynomialQ from_ipoly(const IPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return PolynomialQ(std::move(v));
}

}  // namespace

RationalFunctionQ::RationalFunctionQ() : num_{}, den_{Int(1)} {}

RationalFunctionQ::RationalFunctionQ(const PolynomialQ& num, const PolynomialQ& den) {
    if (den.is_zero()) throw DomainError("RationalFunctionQ: zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = {Int(1)};
        return;
    }
    PolynomialQ g = poly_gcd(num, den);
    // divide both by g exactly (g is monic)
    auto divide = [&](const PolynomialQ& p) {
        PolynomialQ r = p, q;
        std::vector<Rat> qc(p.degree() - g.degree() + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= g.degree()) {
            Rat c = r.coeffs().back() / g.coeffs().back();
            qc[r.degree() - g.degree()] = c;
            r = r - PolynomialQ::monomial(r.degree() - g.degree(), c) * g;
        }
        return PolynomialQ(std::move(qc));
    };
    PolynomialQ rn = divide(num), rd = divide(den);
    Int nn, nd, dn, dd;
    IPoly pn = to_primitive_ipoly(rn, nn, nd);
    IPoly pd = to_primitive_ipoly(rd, dn, dd);
    // overall scalar (nn/nd)/(dn/dd) = (nn*dd)/(nd*dn), folded into num
    Rat s = make_rat(nn * dd, nd * dn);
    IPoly scaled;
    scaled.reserve(pn.size());
    for (const auto& c : pn) scaled.push_back(Int(c * s.get_num()));
    // denominator scalar part goes on den
    IPoly dfinal;
    dfinal.reserve(pd.size());
    for (const auto& c : pd) dfinal.push_back(Int(c * s.get_den()));
    num_ = std::move(scaled);
    den_ = std::move(dfinal);
    // canonical: primitive pair with positive den leading coefficient
    Int g2 = gcd(ipoly_content(num_), ipoly_content(den_));
    if (den_.back() < 0) g2 = -g2;
    for (auto& x : num_) x /= g2;
    for (auto& x : den_) x /= g2;
}

RationalFunctionQ RationalFunctionQ::from_poly(const PolynomialQ& p) {
    return RationalFunctionQ(p, PolynomialQ::constant(Rat(1)));
}

RationalFunctionQ RationalFunctionQ::constant(const Rat& c) {
    return from_poly(PolynomialQ::constant(c));
}

PolynomialQ RationalFunctionQ::num_poly() const { return from_ipoly(num_); }
PolynomialQ RationalFunctionQ::den_poly() const { return from_ipoly(den_); }

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_poly() * o.den_poly() + o.num_poly() * den_poly(),
                             den_poly() * o.den_poly());
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_poly() * o.den_poly() - o.num_poly() * den_poly(),
                             den_poly() * o.den_poly());
}

RationalFunctionQ RationalFunctionQ::operator*(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_poly() * o.num_poly(), den_poly() * o.den_poly());
}

RationalFunctionQ RationalFunctionQ::operator/(const RationalFunctionQ& o) const {
    if (o.is_zero()) throw DomainError("RationalFunctionQ: division by zero");
    return RationalFunctionQ(num_poly() * o.den_poly(), den_poly() * o.num_poly());
}

Rat RationalFunctionQ::evaluate(const Rat& x) const {
    Rat d = den_poly().evaluate(x);
    if (d == 0) throw DomainError("RationalFunctionQ: pole at evaluation point");
    return num_poly().evaluate(x) / d;
}

std::vector<Rat> RationalFunctionQ::series_at_zero(int kmax) const {
    if (den_.empty() || den_[0] == 0)
        throw DomainError("series_at_zero: denominator vanishes at 0");
    std::vector<Rat> out(kmax + 1, Rat(0));
    Rat d0(den_[0]);
    for (int k = 0; k <= kmax; ++k) {
        Rat acc = k < static_cast<int>(num_.size()) ? Rat(num_[k]) : Rat(0);
        for (int j = 1; j <= k && j < static_cast<int>(den_.size()); ++j)
            acc -= Rat(den_[j]) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

std::string RationalFunctionQ::expanded_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string n = from_ipoly(num_).to_string(var);
    if (den_.size() == 1 && den_[0] == 1) return n;
    return "(" + n + ")/(" + from_ipoly(den_).to_string(var) + ")";
}

namespace {

// Factors p (primitive, integer) as content * prod of primitive linear
// factors (q*x - r) * remainder.  Root search is a small-candidate scan,
// which covers every root arising here (integers and reciprocals of small
// integers); anything else stays in the remainder.
struct LinearFactors {
    Int content = 1;
    std::vector<std::pair<Int, Int>> linear;  // (q, r) meaning q*x - r
    IPoly remainder;                          // may be empty meaning 1
};

LinearFactors extract_linear_factors(IPoly p) {
    LinearFactors out;
    if (p.empty()) {
        out.content = 0;
        return out;
    }
    out.content = ipoly_content(p);
    if (p.back() < 0 && out.content > 0) out.content = -out.content;
    for (auto& c : p) c /= out.content;
    // x^k factors
    while (p.size() > 1 && p[0] == 0) {
        out.linear.push_back({Int(1), Int(0)});
        p.erase(p.begin());
    }
    bool progress = true;
    while (progress && p.size() > 1) {
        progress = false;
        // candidates ordered by |root| so paired factors come out ascending
        for (int absr = 1; absr <= 60 && !progress; ++absr)
            for (int q = 1; q <= 60 && !progress; ++q)
                for (int sign = 1; sign >= -1 && !progress; sign -= 2) {
                    int r = sign * absr;
                    if (gcd(Int(q), Int(r)) != 1) continue;
                    // test root r/q: divide by (q*x - r)
                    IPoly lin{Int(-r), Int(q)};
                    try {
                        IPoly quot = ipoly_exact_div(p, lin);
                        out.linear.push_back({Int(q), Int(r)});
                        p = std::move(quot);
                        progress = true;
                    } catch (const DomainError&) {
                    }
                }
    }
    if (!(p.size() == 1 && p[0] == 1)) {
        // fold the leftover leading sign/content into content
        Int c = ipoly_content(p);
        if (p.back() < 0) c = -c;
        if (c != 1) {
            for (auto& x : p) x /= c;
            out.content *= c;
        }
        if (!(p.size() == 1 && p[0] == 1)) out.remainder = std::move(p);
    }
    return out;
}

std::string linear_str(const Int& q, const Int& r, const std::string& var) {
    // q*x - r with q > 0
    std::ostringstream os;
    if (r == 0) {
        if (q == 1) return var;
        os << q.get_str() << var;
        return os.str();
    }
    os << "(";
    if (q != 1) os << q.get_str();
    os << var;
    if (r > 0)
        os << "-" << r.get_str();
    else
        os << "+" << Int(-r).get_str();
    os << ")";
    return os.str();
}

std::string factor_string(const IPoly& p, const std::string& var, Int& content_out) {
    LinearFactors lf = extract_linear_factors(p);
    content_out = lf.content;
    // pair (x - k)(x + k) -> (x^2 - k^2), and similarly (qx-r)(qx+r)
    std::vector<std::pair<Int, Int>> lin = lf.linear;
    std::ostringstream os;
    int zero_roots = 0;
    std::vector<std::pair<std::pair<Int, Int>, int>> counted;  // ((q,|r|) or (q,0)) -> signed count
    for (auto& [q, r] : lin) {
        if (r == 0) {
            ++zero_roots;
            continue;
        }
        counted.push_back({{q, r}, 1});
    }
    if (zero_roots == 1)
        os << (var);
    else if (zero_roots > 1)
        os << var << "^" << zero_roots;
    // greedily merge +-r pairs
    std::vector<std::string> pieces;
    std::vector<bool> used(counted.size(), false);
    for (std::size_t i = 0; i < counted.size(); ++i) {
        if (used[i]) continue;
        auto [q, r] = counted[i].first;
        bool merged = false;
        for (std::size_t j = i + 1; j < counted.size(); ++j) {
            if (used[j]) continue;
            auto [q2, r2] = counted[j].first;
            if (q2 == q && r2 == -r) {
                // (qx - r)(qx + r) = q^2 x^2 - r^2
                std::ostringstream ps;
                ps << "(";
                if (q != 1) ps << Int(q * q).get_str();
                ps << var << "^2-" << Int(r * r).get_str() << ")";
                pieces.push_back(ps.str());
                used[i] = used[j] = true;
                merged = true;
                break;
            }
        }
        if (!merged) {
            pieces.push_back(linear_str(q, r, var));
            used[i] = true;
        }
    }
    for (const auto& s : pieces) os << s;
    if (!lf.remainder.empty()) {
        std::ostringstream ps;
        ps << "(" << from_ipoly(lf.remainder).to_string(var) << ")";
        os << ps.str();
    }
    std::string body = os.str();
    return body.empty() ? "1" : body;
}

}  // namespace

namespace {

// True when s is already a single group: one balanced (...) pair or a bare
// power of the variable.
bool single_group(const std::string& s) {
    if (s.empty()) return false;
    if (s.front() != '(') return s.find('(') == std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') {
            --depth;
            if (depth == 0) return i + 1 == s.size();
        }
    }
    return false;
}

}  // namespace

std::string RationalFunctionQ::factored_string(const std::string& var) const {
    if (is_zero()) return "0";
    Int cn, cd;
    std::string ns = factor_string(num_, var, cn);
    std::string ds = factor_string(den_, var, cd);
    Rat scalar = make_rat(cn, cd);
    std::ostringstream os;
    bool num_trivial = (ns == "1");
    if (scalar == -1 && !num_trivial)
        os << "-";
    else if (scalar != 1 || num_trivial)
        os << rat_str(scalar) << (num_trivial ? "" : "*");
    if (!num_trivial) os << ns;
    if (ds != "1") {
        if (single_group(ds))
            os << "/" << ds;
        else
            os << "/(" << ds << ")";
    }
    return os.str();
}

std::string PolynomialQ::factored_string(const std::string& var) const {
    return RationalFunctionQ::from_poly(*this).factored_string(var);
}

std::vector<Rat> series_in_inverse(const RationalFunctionQ& f, int d, int kmax) {
    if (f.is_zero()) return std::vector<Rat>(kmax + 1, Rat(0));
    int da = ipoly_degree(f.num());
    int db = ipoly_degree(f.den());
    if (db - da < d) throw DomainError("series_in_inverse: insufficient vanishing at infinity");
    // x^d f(x) = t^{(db-da)-d} revnum(t)/revden(t) with t = 1/x
    IPoly revn(f.num().rbegin(), f.num().rend());
    IPoly revd(f.den().rbegin(), f.den().rend());
    int shift = (db - da) - d;
    std::vector<Rat> rn, rd;
    for (const auto& c : revn) rn.emplace_back(c);
    for (const auto& c : revd) rd.emplace_back(c);
    RationalFunctionQ h(PolynomialQ::monomial(shift, Rat(1)) * PolynomialQ(std::move(rn)),
                        PolynomialQ(std::move(rd)));
    return h.series_at_zero(kmax);
}

}  // namespace cuecorr
