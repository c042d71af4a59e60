#pragma once

// Enumeration of fixed-size subsets in ascending mask order, with
// rank/unrank in the combinatorial number system (colex order coincides
// with ascending mask order) so sweeps can be partitioned into contiguous
// rank ranges and merged deterministically.

#include "accdom/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace accdom {

// C(n,k) in 64 bits; callers stay well under the n<=63 cap.
std::uint64_t binomial_u64(int n, int k);

// Smallest mask with k bits: 0..k-1.
inline std::uint64_t first_k_subset(int k) {
    return k == 0 ? 0 : ~std::uint64_t{0} >> (64 - k);
}

// Gosper's hack: next mask with the same popcount.  Caller stops after
// C(n,k) steps; the value past the last valid mask is meaningless.
inline std::uint64_t next_k_subset(std::uint64_t m) {
    std::uint64_t c = m & -m;
    std::uint64_t r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

// Rank of a k-subset in ascending mask order: sum of C(c_j, j+1) over the
// j-th smallest member c_j.
std::uint64_t subset_rank(std::uint64_t mask);

// Inverse of subset_rank for k-subsets of [0,n).
std::uint64_t subset_unrank(std::uint64_t rank, int k, int n);

struct RankRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;  // half-open
};

// Splits [0, C(n,k)) into `workers` near-equal contiguous ranges (some may
// be empty).  Partition boundaries depend only on (n, k, workers).
std::vector<RankRange> partition_ranks(int n, int k, int workers);

// Visits the k-subsets of [0,n) with ranks in [range.begin, range.end) in
// ascending mask order.
template <typename F>
inline void sweep_k_subsets(int n, int k, RankRange range, F&& f) {
    if (range.begin >= range.end) return;
    std::uint64_t mask = subset_unrank(range.begin, k, n);
    for (std::uint64_t r = range.begin; r != range.end; ++r) {
        f(mask);
        if (r + 1 != range.end) mask = next_k_subset(mask);  // k=0 has no successor
    }
}

}  // namespace accdom
