#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cuecorr/partition.hpp"

namespace cuecorr {

// Permutation of {1..n} stored in one-line notation: images()[k-1] is the
// image of k.  Disjoint-cycle form is a parsing/printing concern only.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates bijection
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[k - 1]; }  // 1-based
    const std::vector<int>& images() const { return images_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);  // (a∘b)(k) = a(b(k))
Permutation inverse(const Permutation& a);

Partition cycle_type(const Permutation& a);          // partition of n
Partition reduced_cycle_type(const Permutation& a);  // reduce(cycle_type)
int cycle_count(const Permutation& a);
std::vector<int> support(const Permutation& a);      // sorted non-fixed points

// sigma_mu in S(n): consecutive cycles of lengths mu_1+1, mu_2+1, ...,
// trailing points fixed.  Throws if n < wt(mu).
Permutation canonical_permutation(const Partition& mu, int n);

// Length of the longest strictly decreasing subsequence of the one-line word.
int lds_length(const Permutation& a);

// The permutations of S(n) with no decreasing subsequence of length N+1, in
// reverse lexicographic order: one-line words compared right to left with
// the larger image first, so the identity is minimal.  Frozen because Gram
// matrix row order must be reproducible.
std::vector<Permutation> enumerate_SNn(int n, int N);

// |C_mu(n)| = n!/z_nu with nu = inflate(mu, n); zero when wt(mu) > n.
Int class_size(const Partition& mu, int n);
std::vector<Permutation> enumerate_class(const Partition& mu, int n);

// Accepts cycle notation "(1 2 3)(4 5)" (also comma-separated) and one-line
// "[2,3,1,5,4]"; one-line is emitted.
Permutation parse_permutation(const std::string& s, int n);
std::string one_line_string(const Permutation& a);
std::string cycle_string(const Permutation& a);

// Function i : {1..n} -> {1..N} as used in correlator queries.
struct IndexTuple {
    std::vector<int> values;
    int range = 1;  // N

    IndexTuple() = default;
    IndexTuple(std::vector<int> v, int N);  // validates 1 <= v[k] <= N
    int degree() const { return static_cast<int>(values.size()); }

    bool operator==(const IndexTuple&) const = default;
};

}  // namespace cuecorr
