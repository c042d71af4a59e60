#include "accdom/domination.hpp"

#include "accdom/audit.hpp"
#include "accdom/subset_sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace accdom;

namespace {
Graph path_n(int n) { return make_family({Family::path, n}); }
}  // namespace

TEST_CASE("is_dominating") {
    Graph p5 = path_n(5);
    CHECK(is_dominating(p5, VertexSet::of({1, 3})));   // {v2,v4}
    CHECK(is_dominating(p5, VertexSet::of({0, 3})));   // {v1,v4}
    CHECK_FALSE(is_dominating(p5, VertexSet{}));
    CHECK_FALSE(is_dominating(p5, VertexSet::of({0, 2})));
    CHECK_THROWS_AS(is_dominating(p5, VertexSet::of({5})), input_error);
}

TEST_CASE("count_dominating paper values") {
    CHECK(count_dominating(path_n(4), 2) == 4);
    CHECK(count_dominating(path_n(5), 2) == 3);
    CHECK(count_dominating(path_n(4), 1) == 0);
}

TEST_CASE("domination polynomials of tiny graphs") {
    CHECK(domination_polynomial(path_n(3)).coeffs ==
          std::vector<Count>{0, 1, 3, 1});
    CHECK(domination_polynomial(make_family({Family::complete, 2})).coeffs ==
          std::vector<Count>{0, 2, 1});
    CHECK(domination_polynomial(make_family({Family::complete, 1})).coeffs ==
          std::vector<Count>{0, 1});
}

TEST_CASE("gamma") {
    CHECK(gamma(path_n(5)) == 2);
    for (int n = 1; n <= 8; ++n) CHECK(gamma(make_family({Family::complete, n})) == 1);
    for (const auto& [label, g] : corona_base_list()) {
        INFO(label);
        CHECK(gamma(corona_k1(g)) == g.n());
    }
}

TEST_CASE("min_dominating_within") {
    Graph p5 = path_n(5);
    CHECK(min_dominating_within(p5, p5.vertices()) == 2);
    CHECK(min_dominating_within(p5, VertexSet::of({0, 2, 4})) == 3);
    CHECK(min_dominating_within(p5, VertexSet::of({0})) == std::nullopt);
    CHECK(has_dominating_subset_within(p5, p5.vertices(), 2));
    CHECK_FALSE(has_dominating_subset_within(p5, p5.vertices(), 1));
}

TEST_CASE("min_dominating_within(V) equals gamma everywhere tested") {
    for (const auto& [label, g] : family_corpus(10)) {
        INFO(label);
        CHECK(min_dominating_within(g, g.vertices()) == gamma(g));
    }
    for (const auto& [label, g] : random_corpus(7, 25, 1, 10)) {
        INFO(label);
        CHECK(min_dominating_within(g, g.vertices()) == gamma(g));
    }
}

TEST_CASE("domination is upward closed on random graphs") {
    for (const auto& [label, g] : random_corpus(11, 20, 2, 10)) {
        const int n = g.n();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!is_dominating(g, VertexSet{mask})) continue;
            for (int v = 0; v < n; ++v) {
                VertexSet bigger{mask};
                bigger.add(v);
                CHECK(is_dominating(g, bigger));
            }
        }
    }
}

TEST_CASE("count extremes: d(G,0)=0 and d(G,n)=1 for n>=1") {
    for (const auto& [label, g] : family_corpus(9)) {
        INFO(label);
        CHECK(count_dominating(g, 0) == 0);
        CHECK(count_dominating(g, g.n()) == 1);
    }
}

TEST_CASE("path recurrence holds for exhaustive counts") {
    // d(P_n,i) = d(P_{n-1},i-1) + d(P_{n-2},i-1) + d(P_{n-3},i-1)
    std::vector<CountPolynomial> rows;
    for (int n = 1; n <= 12; ++n) rows.push_back(domination_polynomial(path_n(n)));
    auto d = [&](int n, int i) -> Count {
        if (i < 0 || i > n) return 0;
        return rows[n - 1].coeffs[i];
    };
    for (int n = 4; n <= 12; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(d(n, i) == d(n - 1, i - 1) + d(n - 2, i - 1) + d(n - 3, i - 1));
}

TEST_CASE("partition-merge invariance") {
    Graph p12 = path_n(12);
    Count base = count_dominating(p12, 5);
    for (int workers : {2, 3, 4, 7}) CHECK(count_dominating(p12, 5, {workers}) == base);

    // manual split: partial counts over contiguous ranges sum to the total
    Count split_total = 0;
    for (auto range : partition_ranks(12, 5, 5)) {
        std::uint64_t c = 0;
        sweep_k_subsets(12, 5, range, [&](std::uint64_t mask) {
            if (is_dominating(p12, VertexSet{mask})) ++c;
        });
        split_total += c;
    }
    CHECK(split_total == base);
}

TEST_CASE("any contiguous range split merges to the single-sweep count") {
    Graph c11 = make_family({Family::cycle, 11});
    const int i = 5;
    const std::uint64_t total = binomial_u64(11, i);
    Count base = count_dominating(c11, i);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        // random cut points, including empty pieces
        std::vector<std::uint64_t> cuts{0, total};
        for (int j = 0; j < 4; ++j) cuts.push_back(rng() % (total + 1));
        std::sort(cuts.begin(), cuts.end());
        Count merged = 0;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            std::uint64_t c = 0;
            sweep_k_subsets(11, i, {cuts[j], cuts[j + 1]}, [&](std::uint64_t mask) {
                if (is_dominating(c11, VertexSet{mask})) ++c;
            });
            merged += c;
        }
        CHECK(merged == base);
    }
}

TEST_CASE("capacity guard") {
    Graph p23 = path_n(23);
    CHECK_THROWS_AS(count_dominating(p23, 8), capacity_error);
    CHECK_THROWS_AS(domination_polynomial(p23), capacity_error);
    // explicit override admits it
    CHECK(count_dominating(p23, 1, {1, 23}) == 0);
}
