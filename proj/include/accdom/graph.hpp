#pragma once

// Simple undirected graphs with bitmask adjacency rows, the graph families
// from the paper, and the corona / join / Cartesian product constructions.
//
// Vertex labels are 0-indexed internally (the CLI converts to 1-indexed for
// display).  Family labelings are fixed and documented per constructor so
// that identical specs always produce identical adjacency encodings.

#include "accdom/errors.hpp"
#include "accdom/vertex_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace accdom {

class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet adj(int v) const { return adj_[v]; }
    VertexSet closed_nbhd(int v) const { return closed_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    std::vector<int> degree_sequence() const;  // sorted ascending
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> closed_;  // adj[v] | {v}
};

// Symmetric, irreflexive; duplicate edges collapse silently (simple-graph
// contract), self-loops and out-of-range endpoints are input errors.
// n is capped at kMaxVertices so subsets fit one machine word.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    ladder,
    book,
    hypercube,
    friendship,
};

const char* family_name(Family f);

struct FamilySpec {
    Family family;
    int p1 = 0;
    int p2 = 0;  // only complete_bipartite has two parameters

    // Number of vertices of the graph this spec describes.
    int order() const;
    std::string to_string() const;
};

// Validates parameter ranges (path n>=1, cycle n>=3, complete n>=1,
// complete_bipartite m,n>=1, star n>=1, ladder n>=1, book n>=1,
// hypercube d>=1, friendship n>=1); throws domain_error otherwise.
void validate(const FamilySpec& spec);

// Deterministic labelings:
//   path/cycle      0..n-1 along the path / around the cycle
//   complete        any (all edges)
//   K_{m,n}         0..m-1 one side, m..m+n-1 the other
//   star K_{1,n}    0 is the center
//   ladder L_n      (i, side) -> 2i + side
//   book B_n        vertices 0 and 1 are the two star centers; leaf j of
//                   center c is 2 + c*n + j (isomorphic to K_{1,n} x K_2)
//   hypercube Q_d   vertex label = coordinate bit-vector
//   friendship F_n  0 is the center, triangle j uses (2j-1, 2j) 1-indexed
//                   pairs, i.e. vertices 2j+1, 2j+2 for j = 0..n-1
Graph make_family(const FamilySpec& spec);

// G o K_1: original vertex i keeps label i, its pendant partner is n+i.
Graph corona_k1(const Graph& g);

// Disjoint union plus all cross edges; h's labels shift by g.n().
Graph join(const Graph& g, const Graph& h);

// (a,b) -> a*h.n() + b; (a,b)~(a',b') iff equal in one coordinate and
// adjacent in the other.
Graph cartesian_product(const Graph& g, const Graph& h);

// Construction plan parsed from the family-spec grammar.  Composites nest:
// "corona:path:4", "join:complete:1:cycle:5", "product:path:3:complete:2".
struct GraphSpec {
    enum class Kind { family, corona, join, product };
    Kind kind = Kind::family;
    FamilySpec family{};                     // kind == family
    std::vector<GraphSpec> parts;            // 1 for corona, 2 for join/product

    int order() const;
    std::string to_string() const;
};

// Grammar: family:param[:param] | corona:<spec> | join:<spec>:<spec> |
// product:<spec>:<spec>.  Parse errors name the offending token.
GraphSpec parse_family_spec(const std::string& text);

Graph realize(const GraphSpec& spec);

// Edge-list text format: first line "n m", then m lines "u v", 0-indexed.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);

// CLI-facing helper: "path:7" or "@edges.txt".
Graph load_graph_argument(const std::string& arg);

}  // namespace accdom
