#pragma once

// Ground-truth domination machinery: membership, exhaustive counts, the
// domination polynomial, gamma, and minimum domination restricted to an
// allowed pool.  Everything here is a pure function of immutable inputs;
// sweeps can be partitioned by canonical-encoding range and merged by
// addition with bit-identical results for any worker count.

#include "accdom/count.hpp"
#include "accdom/graph.hpp"

#include <optional>

namespace accdom {

// Exhaustive sweeps refuse graphs above this order; closed forms and the
// recurrence tables are the intended route beyond it.
inline constexpr int kSweepGuard = 22;

struct SweepOptions {
    int workers = 1;
    int guard = kSweepGuard;  // capacity override is explicit, never implied
};

// True iff the closed neighborhoods of d cover every vertex.
bool is_dominating(const Graph& g, VertexSet d);

// Number of dominating sets of size i, by ascending canonical sweep.
Count count_dominating(const Graph& g, int i, const SweepOptions& opt = {});

// coeffs[i] = count_dominating(g, i) for i = 0..n.
CountPolynomial domination_polynomial(const Graph& g, const SweepOptions& opt = {});

// Minimum size of a dominating set, by branch and bound on the
// smallest-index uncovered vertex (never a full sweep).
int gamma(const Graph& g);

// Minimum size of a dominating set contained in `allowed`, or nullopt if no
// subset of `allowed` dominates.  Branches over closed_nbhd(v) & allowed
// for the smallest-index uncovered vertex v.
std::optional<int> min_dominating_within(const Graph& g, VertexSet allowed);

// Early-exit variant used by the accuracy test: is there a dominating
// subset of `allowed` of size <= cap?
bool has_dominating_subset_within(const Graph& g, VertexSet allowed, int cap);

}  // namespace accdom
