#pragma once

// Ground truth for accurate dominating sets: a dominating set D is accurate
// iff no |D|-element subset of V \ D dominates.
//
// Two membership tests are exposed.  The naive one sweeps all |D|-subsets
// of the complement, literally following the definition; it exists as a
// differential-testing oracle.  The fast one exploits that dominating sets
// are upward closed: D is accurate iff |V\D| < |D|, or no dominating subset
// of V\D has size <= |D| (a smaller dominating subset pads to size exactly
// |D| inside V\D).  The two are equivalent on every graph.

#include "accdom/count.hpp"
#include "accdom/domination.hpp"
#include "accdom/graph.hpp"

#include <vector>

namespace accdom {

bool is_accurate_naive(const Graph& g, VertexSet d);

bool is_accurate(const Graph& g, VertexSet d);

// Number of accurate dominating sets of size i (ascending canonical sweep).
Count count_accurate(const Graph& g, int i, const SweepOptions& opt = {});

// All accurate dominating sets of size i in ascending canonical order.
std::vector<VertexSet> enumerate_accurate(const Graph& g, int i,
                                          const SweepOptions& opt = {});

// coeffs[i] = count_accurate(g, i).
CountPolynomial accurate_polynomial(const Graph& g, const SweepOptions& opt = {});

// Smallest i with an accurate dominating set of size i; the search ascends
// from gamma(g) since every accurate dominating set is dominating, and V
// itself is always accurate, so the search terminates.
int gamma_a(const Graph& g);

}  // namespace accdom
