#pragma once

// Vertex subsets as single-word bitmasks.  Vertex v is bit v, so the
// canonical integer encoding of a set is exactly its mask value; all
// enumeration of set families is ascending in this encoding.  This is why
// graph construction caps n at 63.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace accdom {

inline constexpr int kMaxVertices = 63;

struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t mask) : bits(mask) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet full(int n) {
        return VertexSet(n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr bool contains(int v) const { return bits >> v & 1; }
    constexpr bool empty() const { return bits == 0; }
    int size() const { return std::popcount(bits); }
    int lowest() const { return std::countr_zero(bits); }  // undefined on empty

    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;  // canonical order

    std::vector<int> members() const {
        std::vector<int> out;
        std::uint64_t m = bits;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    // "{1,2,5}" with the given index base (1 for human output).
    std::string to_string(int base = 0) const;
};

// Visits each member in ascending order.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    std::uint64_t m = s.bits;
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

}  // namespace accdom
