#include "cuecorr/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cuecorr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[v - 1])
            throw DomainError("Permutation: not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw DomainError("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int k = 1; k <= a.degree(); ++k) im[k - 1] = a(b(k));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> im(a.degree());
    for (int k = 1; k <= a.degree(); ++k) im[a(k) - 1] = k;
    return Permutation(std::move(im));
}

Partition cycle_type(const Permutation& a) {
    int n = a.degree();
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int k = 1; k <= n; ++k) {
        if (seen[k - 1]) continue;
        int len = 0;
        for (int j = k; !seen[j - 1]; j = a(j)) {
            seen[j - 1] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

Partition reduced_cycle_type(const Permutation& a) { return reduce(cycle_type(a)); }

int cycle_count(const Permutation& a) { return cycle_type(a).length(); }

std::vector<int> support(const Permutation& a) {
    std::vector<int> out;
    for (int k = 1; k <= a.degree(); ++k)
        if (a(k) != k) out.push_back(k);
    return out;
}

Permutation canonical_permutation(const Partition& mu, int n) {
    if (n < mu.weight())
        throw DomainError("canonical_permutation: n < wt(mu)");
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    int start = 1;
    for (int p : mu.parts()) {
        int len = p + 1;  // cycle (start, start+1, ..., start+len-1)
        for (int j = 0; j < len - 1; ++j) im[start - 1 + j] = start + j + 1;
        im[start + len - 2] = start;
        start += len;
    }
    return Permutation(std::move(im));
}

int lds_length(const Permutation& a) {
    if (a.degree() < 1) throw DomainError("lds_length: degree must be >= 1");
    // Patience piles on the negated word: longest strictly decreasing
    // subsequence = longest strictly increasing subsequence of -word.
    std::vector<int> tails;  // tails[i] = smallest tail of an increasing subseq of length i+1
    for (int v : a.images()) {
        int x = -v;
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

namespace {

// Right-to-left comparison, larger image first; makes the identity minimal.
bool revlex_less(const Permutation& a, const Permutation& b) {
    for (int k = a.degree(); k >= 1; --k)
        if (a(k) != b(k)) return a(k) > b(k);
    return false;
}

}  // namespace

std::vector<Permutation> enumerate_SNn(int n, int N) {
    if (n < 1 || N < 1) throw DomainError("enumerate_SNn: need n, N >= 1");
    if (n > 8) throw ResourceError("enumerate_SNn: n > 8 (generate-and-filter cap)");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<int>(word)};
        if (lds_length(p) <= N) out.push_back(std::move(p));
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end(), revlex_less);
    return out;
}

Int class_size(const Partition& mu, int n) {
    if (mu.weight() > n) return 0;
    Partition nu = inflate(mu, n);
    Int z = 1;  // centralizer order: prod i^{m_i} m_i!
    for (int v = 1; v <= nu.part(0); ++v) {
        int m = nu.multiplicity(v);
        z *= int_pow(v, m) * factorial(m);
    }
    return factorial(n) / z;
}

std::vector<Permutation> enumerate_class(const Partition& mu, int n) {
    if (n > 9) throw ResourceError("enumerate_class: n > 9");
    std::vector<Permutation> out;
    if (mu.weight() > n) return out;
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        Permutation p{std::vector<int>(word)};
        if (reduced_cycle_type(p) == mu) out.push_back(std::move(p));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

Permutation parse_permutation(const std::string& s, int n) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("parse_permutation: empty input");
    std::string trimmed = s.substr(first, last - first + 1);
    if (trimmed == "id" || trimmed == "()") return Permutation::identity(n);
    if (trimmed.front() == '[') {
        if (trimmed.back() != ']') throw DomainError("parse_permutation: missing ']'");
        std::vector<int> im;
        std::istringstream is(trimmed.substr(1, trimmed.size() - 2));
        std::string tok;
        while (std::getline(is, tok, ',')) im.push_back(std::stoi(tok));
        if (static_cast<int>(im.size()) != n)
            throw DomainError("parse_permutation: one-line length != n");
        return Permutation(std::move(im));
    }
    if (trimmed.front() == '(') {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        std::size_t pos = 0;
        while (pos < trimmed.size()) {
            if (trimmed[pos] == ' ') {
                ++pos;
                continue;
            }
            if (trimmed[pos] != '(') throw DomainError("parse_permutation: expected '('");
            std::size_t close = trimmed.find(')', pos);
            if (close == std::string::npos) throw DomainError("parse_permutation: missing ')'");
            std::string body = trimmed.substr(pos + 1, close - pos - 1);
            for (char& c : body)
                if (c == ',') c = ' ';
            std::istringstream is(body);
            std::vector<int> cyc;
            int v;
            while (is >> v) cyc.push_back(v);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (from < 1 || from > n)
                    throw DomainError("parse_permutation: entry out of range");
                im[from - 1] = to;
            }
            pos = close + 1;
        }
        return Permutation(std::move(im));
    }
    throw DomainError("parse_permutation: unrecognized format '" + s + "'");
}

std::string one_line_string(const Permutation& a) {
    std::ostringstream os;
    os << '[';
    for (int k = 1; k <= a.degree(); ++k) {
        if (k > 1) os << ',';
        os << a(k);
    }
    os << ']';
    return os.str();
}

std::string cycle_string(const Permutation& a) {
    std::ostringstream os;
    int n = a.degree();
    std::vector<bool> seen(n, false);
    bool any = false;
    for (int k = 1; k <= n; ++k) {
        if (seen[k - 1] || a(k) == k) {
            seen[k - 1] = true;
            continue;
        }
        os << '(';
        bool first = true;
        for (int j = k; !seen[j - 1]; j = a(j)) {
            seen[j - 1] = true;
            if (!first) os << ' ';
            os << j;
            first = false;
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

IndexTuple::IndexTuple(std::vector<int> v, int N) : values(std::move(v)), range(N) {
    if (N < 1) throw DomainError("IndexTuple: range must be >= 1");
    for (int x : values)
        if (x < 1 || x > N) throw DomainError("IndexTuple: entry out of range");
}

}  // namespace cuecorr
