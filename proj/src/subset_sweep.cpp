#include "accdom/subset_sweep.hpp"

#include <array>

namespace accdom {

namespace {

// Pascal triangle up to n=64; C(63,31) fits comfortably in 64 bits.
struct BinomTable {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    BinomTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable& binoms() {
    static const BinomTable t;
    return t;
}

}  // namespace

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    return binoms().c[n][k];
}

std::uint64_t subset_rank(std::uint64_t mask) {
    std::uint64_t rank = 0;
    int j = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        rank += binomial_u64(v, ++j);
        mask &= mask - 1;
    }
    return rank;
}

std::uint64_t subset_unrank(std::uint64_t rank, int k, int n) {
    std::uint64_t mask = 0;
    int hi = n;
    for (int j = k; j >= 1; --j) {
        int c = j - 1;
        // largest c < hi with C(c, j) <= rank
        for (int cand = hi - 1; cand >= j - 1; --cand) {
            if (binomial_u64(cand, j) <= rank) {
                c = cand;
                break;
            }
        }
        mask |= std::uint64_t{1} << c;
        rank -= binomial_u64(c, j);
        hi = c;
    }
    return mask;
}

std::vector<RankRange> partition_ranks(int n, int k, int workers) {
    std::uint64_t total = binomial_u64(n, k);
    if (workers < 1) workers = 1;
    std::vector<RankRange> out(workers);
    std::uint64_t base = total / workers, extra = total % workers;
    std::uint64_t at = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t len = base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        out[w] = {at, at + len};
        at += len;
    }
    return out;
}

}  // namespace accdom
