#include "accdom/subset_sweep.hpp"

#include <doctest.h>

#include <vector>

using namespace accdom;

TEST_CASE("binomial_u64") {
    CHECK(binomial_u64(22, 11) == 705432);
    CHECK(binomial_u64(10, 0) == 1);
    CHECK(binomial_u64(5, 7) == 0);
    CHECK(binomial_u64(63, 31) == 916312070471295267ULL);
}

TEST_CASE("gosper order is ascending and rank/unrank invert it") {
    const int n = 10, k = 4;
    std::uint64_t mask = first_k_subset(k);
    std::uint64_t prev = 0;
    for (std::uint64_t r = 0; r < binomial_u64(n, k); ++r) {
        if (r > 0) CHECK(mask > prev);
        CHECK(subset_rank(mask) == r);
        CHECK(subset_unrank(r, k, n) == mask);
        prev = mask;
        mask = next_k_subset(mask);
    }
}

TEST_CASE("partition covers the rank space contiguously") {
    for (int workers : {1, 2, 3, 7, 16}) {
        auto parts = partition_ranks(12, 5, workers);
        REQUIRE(parts.size() == static_cast<std::size_t>(workers));
        CHECK(parts.front().begin == 0);
        CHECK(parts.back().end == binomial_u64(12, 5));
        for (std::size_t w = 1; w < parts.size(); ++w)
            CHECK(parts[w].begin == parts[w - 1].end);
    }
}

TEST_CASE("partitioned sweep visits every subset exactly once") {
    const int n = 9, k = 3;
    std::vector<int> seen(1 << n, 0);
    for (auto range : partition_ranks(n, k, 4))
        sweep_k_subsets(n, k, range, [&](std::uint64_t m) { ++seen[m]; });
    std::uint64_t visited = 0;
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) == k) {
            CHECK(seen[m] == 1);
            ++visited;
        } else {
            CHECK(seen[m] == 0);
        }
    }
    CHECK(visited == binomial_u64(n, k));
}

TEST_CASE("empty set sweep") {
    int calls = 0;
    sweep_k_subsets(5, 0, {0, binomial_u64(5, 0)}, [&](std::uint64_t m) {
        CHECK(m == 0);
        ++calls;
    });
    CHECK(calls == 1);
}
