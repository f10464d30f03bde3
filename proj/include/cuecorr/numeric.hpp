#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cuecorr {

// Arbitrary-precision integers and rationals.  Rationals are kept canonical
// (reduced, positive denominator) by GMP for all arithmetic; only direct
// num/den construction needs an explicit canonicalize, which make_rat does.
using Int = mpz_class;
using Rat = mpq_class;

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw DomainError("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// "p/q" with q > 0, or just "p" when q == 1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw DomainError("parse_rat: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

// Global worker count used by the parallel lambda-sums (CLI --threads,
// CUECORR_THREADS).  Default 1: tests run single-threaded.
inline int& thread_count() {
    static int n = 1;
    return n;
}

// Deterministic parallel sum of fn(0) + ... + fn(count-1): each worker
// accumulates an index-contiguous chunk, chunks are merged in order, so the
// result is identical for any thread count (rational addition is exact).
template <class T, class F>
T parallel_sum(std::size_t count, T zero, F&& fn) {
    int nthreads = thread_count();
    if (nthreads <= 1 || count < 16) {
        T acc = zero;
        for (std::size_t i = 0; i < count; ++i) acc += fn(i);
        return acc;
    }
    std::size_t workers = std::min<std::size_t>(nthreads, count);
    std::vector<T> partial(workers, zero);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = count * w / workers;
            std::size_t hi = count * (w + 1) / workers;
            T acc = zero;
            for (std::size_t i = lo; i < hi; ++i) acc += fn(i);
            partial[w] = std::move(acc);
        });
    }
    for (auto& t : pool) t.join();
    T acc = zero;
    for (auto& p : partial) acc += p;
    return acc;
}

}  // namespace cuecorr
