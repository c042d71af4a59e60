#include "accdom/domination.hpp"

#include "accdom/subset_sweep.hpp"

#include <thread>

namespace accdom {

bool is_dominating(const Graph& g, VertexSet d) {
    if (!d.subset_of(g.vertices()))
        throw input_error("set member out of range for graph of order " +
                          std::to_string(g.n()));
    VertexSet covered;
    for_each_vertex(d, [&](int v) { covered = covered | g.closed_nbhd(v); });
    return covered == g.vertices();
}

namespace {

void check_guard(const Graph& g, const SweepOptions& opt) {
    if (g.n() > opt.guard)
        throw capacity_error(
            "exhaustive sweep refused for n=" + std::to_string(g.n()) + " (guard " +
            std::to_string(opt.guard) +
            "); for paths/cycles use the closed-form tables, or raise the guard explicitly");
}

// Runs fn over each worker's rank range and collects per-worker results in
// worker order, so merges are deterministic for any worker count.
template <typename Result, typename Fn>
std::vector<Result> run_partitioned(int n, int k, int workers, Fn fn) {
    auto ranges = partition_ranks(n, k, workers);
    std::vector<Result> results(ranges.size());
    if (ranges.size() == 1) {
        results[0] = fn(ranges[0]);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t w = 0; w < ranges.size(); ++w)
        pool.emplace_back([&, w] { results[w] = fn(ranges[w]); });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace

Count count_dominating(const Graph& g, int i, const SweepOptions& opt) {
    if (i < 0 || i > g.n())
        throw input_error("cardinality " + std::to_string(i) + " out of range");
    check_guard(g, opt);
    const VertexSet full = g.vertices();
    auto counts = run_partitioned<std::uint64_t>(
        g.n(), i, opt.workers, [&](RankRange r) {
            std::uint64_t c = 0;
            sweep_k_subsets(g.n(), i, r, [&](std::uint64_t mask) {
                VertexSet covered;
                for_each_vertex(VertexSet(mask),
                                [&](int v) { covered = covered | g.closed_nbhd(v); });
                if (covered == full) ++c;
            });
            return c;
        });
    Count total = 0;
    for (auto c : counts) total += c;
    return total;
}

CountPolynomial domination_polynomial(const Graph& g, const SweepOptions& opt) {
    check_guard(g, opt);
    CountPolynomial p;
    p.coeffs.reserve(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) p.coeffs.push_back(count_dominating(g, i, opt));
    return p;
}

namespace {

struct MinDomSearch {
    const Graph& g;
    VertexSet allowed;
    int best;  // exclusive upper bound on sizes still worth exploring
    bool found = false;

    void rec(VertexSet covered, int size) {
        if (covered == g.vertices()) {
            best = size;
            found = true;
            return;
        }
        if (size + 1 >= best) return;
        int v = g.vertices().minus(covered).lowest();  // smallest-index uncovered
        VertexSet branch = g.closed_nbhd(v) & allowed;
        for_each_vertex(branch, [&](int u) { rec(covered | g.closed_nbhd(u), size + 1); });
    }
};

}  // namespace

std::optional<int> min_dominating_within(const Graph& g, VertexSet allowed) {
    if (!allowed.subset_of(g.vertices())) throw input_error("allowed set out of range");
    if (g.n() == 0) return 0;
    for (int v = 0; v < g.n(); ++v)
        if ((g.closed_nbhd(v) & allowed).empty()) return std::nullopt;
    MinDomSearch s{g, allowed, g.n() + 1};
    s.rec(VertexSet{}, 0);
    if (!s.found) return std::nullopt;
    return s.best;
}

bool has_dominating_subset_within(const Graph& g, VertexSet allowed, int cap) {
    if (cap < 0) return false;
    if (g.n() == 0) return true;  // the empty set dominates the empty graph
    for (int v = 0; v < g.n(); ++v)
        if ((g.closed_nbhd(v) & allowed).empty()) return false;
    MinDomSearch s{g, allowed, cap + 1};
    s.rec(VertexSet{}, 0);
    return s.found;
}

int gamma(const Graph& g) {
    if (g.n() < 1) throw input_error("gamma requires a non-empty graph");
    return *min_dominating_within(g, g.vertices());
}

}  // namespace accdom
