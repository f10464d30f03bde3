#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cuecorr/numeric.hpp"

namespace cuecorr {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is a first-class value.  Comparison is lexicographic on the part vector,
// which is only used for map keys; enumeration order is reverse
// lexicographic (see enumerate_partitions).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return size() + length(); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0-padded

    // Multiplicity of value v among the parts.
    int multiplicity(int v) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "3,1,1"; empty partition prints "-"

private:
    std::vector<int> parts_;
};

Partition parse_partition(const std::string& s);  // "3,1,1"; "-" or "0" = empty

int weight(const Partition& p);
Partition reduce(const Partition& p);
Partition inflate(const Partition& m, int n);  // throws DomainError if n < wt(m)

// All partitions of k, reverse lexicographic ((k) first, (1^k) last).
std::vector<Partition> enumerate_partitions(int k);

// Dominance partial order: lam <= mu iff all prefix sums of lam are <= those
// of mu.  Requires |lam| == |mu| to be meaningful.
bool dominated_by(const Partition& lam, const Partition& mu);

// A weakly increasing integer sequence together with the offset a that
// places it in the set E(a;r): entries[p] >= a+p+1 for p < r-1 (0-based) and
// entries[r-1] == a+r.
struct IncreasingSequence {
    std::vector<int> entries;
    int offset = 0;

    bool operator==(const IncreasingSequence&) const = default;
};

// Members of E(a;r), lexicographic; |E(a;r)| == catalan(r).
std::vector<IncreasingSequence> enumerate_E(int a, int r);

// Multiplicity type of a weakly increasing sequence, sorted decreasing.
Partition sequence_type(const std::vector<int>& seq);

// One block per part of the target partition in refinement_set.
using RefinementTuple = std::vector<Partition>;

// All tuples (lam^(1),...,lam^(l(mu))) with lam^(i) a partition of mu_i and
// multiset union equal to lam.  Empty unless lam is a refinement of mu.
std::vector<RefinementTuple> refinement_set(const Partition& lam, const Partition& mu);

Int rc_count(const Partition& lam);    // by enumeration of E(|lam|)
Int rc_formula(const Partition& lam);  // |lam|! / ((|lam|-l+1)! prod m_i!)

Int catalan(int r);
Int central_factorial(int m, int n);  // T(m,n) = h_{m-n}(1^2,...,n^2)
Int stirling2(int m, int n);          // S(m,n) = h_{m-n}(1,...,n)

}  // namespace cuecorr
