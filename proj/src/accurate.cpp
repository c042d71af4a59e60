#include "accdom/accurate.hpp"

#include "accdom/subset_sweep.hpp"

#include <thread>

namespace accdom {

bool is_accurate_naive(const Graph& g, VertexSet d) {
    if (!is_dominating(g, d)) return false;
    const int i = d.size();
    const auto rest = g.vertices().minus(d).members();
    const int m = static_cast<int>(rest.size());
    if (m < i) return true;  // no |d|-element subset of V\d exists
    std::uint64_t idx = first_k_subset(i);
    const std::uint64_t total = binomial_u64(m, i);
    for (std::uint64_t r = 0; r < total; ++r) {
        VertexSet s;
        for_each_vertex(VertexSet(idx), [&](int j) { s.add(rest[j]); });
        if (is_dominating(g, s)) return false;
        if (r + 1 < total) idx = next_k_subset(idx);
    }
    return true;
}

bool is_accurate(const Graph& g, VertexSet d) {
    if (!is_dominating(g, d)) return false;
    const int i = d.size();
    VertexSet rest = g.vertices().minus(d);
    if (rest.size() < i) return true;
    return !has_dominating_subset_within(g, rest, i);
}

namespace {

void check_guard(const Graph& g, const SweepOptions& opt) {
    if (g.n() > opt.guard)
        throw capacity_error(
            "exhaustive sweep refused for n=" + std::to_string(g.n()) + " (guard " +
            std::to_string(opt.guard) + "); raise the guard explicitly if you mean it");
}

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

Count count_accurate(const Graph& g, int i, const SweepOptions& opt) {
    if (i < 0 || i > g.n())
        throw input_error("cardinality " + std::to_string(i) + " out of range");
    check_guard(g, opt);
    auto counts = run_partitioned<std::uint64_t>(
        g.n(), i, opt.workers, [&](RankRange r) {
            std::uint64_t c = 0;
            sweep_k_subsets(g.n(), i, r, [&](std::uint64_t mask) {
                if (is_accurate(g, VertexSet(mask))) ++c;
            });
            return c;
        });
    Count total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::vector<VertexSet> enumerate_accurate(const Graph& g, int i, const SweepOptions& opt) {
    if (i < 0 || i > g.n())
        throw input_error("cardinality " + std::to_string(i) + " out of range");
    check_guard(g, opt);
    auto parts = run_partitioned<std::vector<VertexSet>>(
        g.n(), i, opt.workers, [&](RankRange r) {
            std::vector<VertexSet> found;
            sweep_k_subsets(g.n(), i, r, [&](std::uint64_t mask) {
                if (is_accurate(g, VertexSet(mask))) found.emplace_back(mask);
            });
            return found;
        });
    std::vector<VertexSet> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;  // ascending: ranges are contiguous and each part is ascending
}

CountPolynomial accurate_polynomial(const Graph& g, const SweepOptions& opt) {
    check_guard(g, opt);
    CountPolynomial p;
    p.coeffs.reserve(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) p.coeffs.push_back(count_accurate(g, i, opt));
    return p;
}

int gamma_a(const Graph& g) {
    if (g.n() < 1) throw input_error("gamma_a requires a non-empty graph");
    for (int i = gamma(g); i <= g.n(); ++i) {
        bool found = false;
        std::uint64_t mask = first_k_subset(i);
        const std::uint64_t total = binomial_u64(g.n(), i);
        for (std::uint64_t r = 0; r < total && !found; ++r) {
            if (is_accurate(g, VertexSet(mask))) found = true;
            mask = next_k_subset(mask);
        }
        if (found) return i;
    }
    return g.n();  // unreachable: V itself is always accurate
}

}  // namespace accdom
