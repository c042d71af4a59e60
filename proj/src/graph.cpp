#include "accdom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace accdom {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw capacity_error("graphs are capped at " + std::to_string(kMaxVertices) +
                             " vertices (single-word subset encoding)");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet{});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].add(v);
        g.adj_[v].add(u);
    }
    g.closed_.resize(n);
    int twice_edges = 0;
    for (int v = 0; v < n; ++v) {
        g.closed_[v] = g.adj_[v] | VertexSet::single(v);
        twice_edges += g.adj_[v].size();
    }
    g.edge_count_ = twice_edges / 2;
    return g;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(adj_[u], [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::ladder: return "ladder";
        case Family::book: return "book";
        case Family::hypercube: return "hypercube";
        case Family::friendship: return "friendship";
    }
    return "?";
}

int FamilySpec::order() const {
    switch (family) {
        case Family::path:
        case Family::cycle:
        case Family::complete: return p1;
        case Family::complete_bipartite: return p1 + p2;
        case Family::star: return p1 + 1;
        case Family::ladder: return 2 * p1;
        case Family::book: return 2 * (p1 + 1);
        case Family::hypercube: return 1 << p1;
        case Family::friendship: return 2 * p1 + 1;
    }
    return 0;
}

std::string FamilySpec::to_string() const {
    std::string s = family_name(family);
    s += ':' + std::to_string(p1);
    if (family == Family::complete_bipartite) s += ':' + std::to_string(p2);
    return s;
}

void validate(const FamilySpec& spec) {
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw domain_error(std::string(family_name(spec.family)) + " requires " + what +
                               ", got " + spec.to_string());
    };
    switch (spec.family) {
        case Family::path: need(spec.p1 >= 1, "n>=1"); break;
        case Family::cycle: need(spec.p1 >= 3, "n>=3"); break;
        case Family::complete: need(spec.p1 >= 1, "n>=1"); break;
        case Family::complete_bipartite: need(spec.p1 >= 1 && spec.p2 >= 1, "m,n>=1"); break;
        case Family::star: need(spec.p1 >= 1, "n>=1"); break;
        case Family::ladder: need(spec.p1 >= 1, "n>=1"); break;
        case Family::book: need(spec.p1 >= 1, "n>=1"); break;
        case Family::hypercube: need(spec.p1 >= 1, "d>=1"); break;
        case Family::friendship: need(spec.p1 >= 1, "n>=1"); break;
    }
}

namespace {

Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph make_complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.emplace_back(u, m + v);
    return build_graph(m + n, e);
}

Graph make_hypercube(int d) {
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
    return build_graph(n, e);
}

Graph make_friendship(int n) {
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < n; ++j) {
        int a = 2 * j + 1, b = 2 * j + 2;
        e.emplace_back(0, a);
        e.emplace_back(0, b);
        e.emplace_back(a, b);
    }
    return build_graph(2 * n + 1, e);
}

// Book labeling: the two star centers are vertices 0 and 1; leaf j of
// center c is 2 + c*n + j.  Isomorphic to K_{1,n} x K_2.
Graph make_book(int n) {
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);
    for (int j = 0; j < n; ++j) {
        e.emplace_back(0, 2 + j);
        e.emplace_back(1, 2 + n + j);
        e.emplace_back(2 + j, 2 + n + j);
    }
    return build_graph(2 * (n + 1), e);
}

// Ladder labeling (i, side) -> 2i+side differs from the raw Cartesian
// product labeling; the isomorphism-class tests cover the agreement.
Graph make_ladder(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(2 * i, 2 * i + 1);
        if (i + 1 < n) {
            e.emplace_back(2 * i, 2 * (i + 1));
            e.emplace_back(2 * i + 1, 2 * (i + 1) + 1);
        }
    }
    return build_graph(2 * n, e);
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::path: return make_path(spec.p1);
        case Family::cycle: return make_cycle(spec.p1);
        case Family::complete: return make_complete(spec.p1);
        case Family::complete_bipartite: return make_complete_bipartite(spec.p1, spec.p2);
        case Family::star: return make_complete_bipartite(1, spec.p1);
        case Family::ladder: return make_ladder(spec.p1);
        case Family::book: return make_book(spec.p1);
        case Family::hypercube: return make_hypercube(spec.p1);
        case Family::friendship: return make_friendship(spec.p1);
    }
    throw domain_error("unknown family");
}

Graph corona_k1(const Graph& g) {
    int n = g.n();
    if (n < 1) throw input_error("corona requires a non-empty graph");
    auto e = g.edges();
    for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
    return build_graph(2 * n, e);
}

Graph join(const Graph& g, const Graph& h) {
    if (g.n() < 1 || h.n() < 1) throw input_error("join requires non-empty graphs");
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(g.n() + u, g.n() + v);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) e.emplace_back(u, g.n() + v);
    return build_graph(g.n() + h.n(), e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.n() < 1 || h.n() < 1) throw input_error("product requires non-empty graphs");
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.n(); ++a)
        for (auto [b1, b2] : h.edges()) e.emplace_back(a * h.n() + b1, a * h.n() + b2);
    for (auto [a1, a2] : g.edges())
        for (int b = 0; b < h.n(); ++b) e.emplace_back(a1 * h.n() + b, a2 * h.n() + b);
    return build_graph(g.n() * h.n(), e);
}

int GraphSpec::order() const {
    switch (kind) {
        case Kind::family: return family.order();
        case Kind::corona: return 2 * parts[0].order();
        case Kind::join: return parts[0].order() + parts[1].order();
        case Kind::product: return parts[0].order() * parts[1].order();
    }
    return 0;
}

std::string GraphSpec::to_string() const {
    switch (kind) {
        case Kind::family: return family.to_string();
        case Kind::corona: return "corona:" + parts[0].to_string();
        case Kind::join: return "join:" + parts[0].to_string() + ":" + parts[1].to_string();
        case Kind::product:
            return "product:" + parts[0].to_string() + ":" + parts[1].to_string();
    }
    return "?";
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);
    return tokens;
}

int parse_param(const std::vector<std::string>& tokens, std::size_t& pos,
                const std::string& family) {
    if (pos >= tokens.size())
        throw parse_error("family '" + family + "' is missing a parameter");
    const std::string& tok = tokens[pos];
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad parameter '" + tok + "' for family '" + family + "'");
    ++pos;
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw parse_error("parameter '" + tok + "' out of range");
    }
}

GraphSpec parse_spec_tokens(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size()) throw parse_error("empty graph spec");
    const std::string name = tokens[pos++];
    GraphSpec spec;
    if (name == "corona") {
        spec.kind = GraphSpec::Kind::corona;
        spec.parts.push_back(parse_spec_tokens(tokens, pos));
        return spec;
    }
    if (name == "join" || name == "product") {
        spec.kind = name == "join" ? GraphSpec::Kind::join : GraphSpec::Kind::product;
        spec.parts.push_back(parse_spec_tokens(tokens, pos));
        spec.parts.push_back(parse_spec_tokens(tokens, pos));
        return spec;
    }
    static const std::pair<const char*, Family> families[] = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"complete", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"star", Family::star},
        {"ladder", Family::ladder},
        {"book", Family::book},
        {"hypercube", Family::hypercube},
        {"friendship", Family::friendship},
    };
    for (auto [fname, f] : families) {
        if (name == fname) {
            spec.kind = GraphSpec::Kind::family;
            spec.family.family = f;
            spec.family.p1 = parse_param(tokens, pos, name);
            if (f == Family::complete_bipartite)
                spec.family.p2 = parse_param(tokens, pos, name);
            validate(spec.family);
            return spec;
        }
    }
    throw parse_error("unknown family name '" + name + "'");
}

}  // namespace

GraphSpec parse_family_spec(const std::string& text) {
    auto tokens = split_tokens(text);
    std::size_t pos = 0;
    GraphSpec spec = parse_spec_tokens(tokens, pos);
    if (pos != tokens.size())
        throw parse_error("trailing token '" + tokens[pos] + "' in graph spec '" + text + "'");
    return spec;
}

Graph realize(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphSpec::Kind::family: return make_family(spec.family);
        case GraphSpec::Kind::corona: return corona_k1(realize(spec.parts[0]));
        case GraphSpec::Kind::join: return join(realize(spec.parts[0]), realize(spec.parts[1]));
        case GraphSpec::Kind::product:
            return cartesian_product(realize(spec.parts[0]), realize(spec.parts[1]));
    }
    throw parse_error("invalid graph spec");
}

Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw parse_error("edge list must start with 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int j = 0; j < m; ++j) {
        int u, v;
        if (!(in >> u >> v))
            throw parse_error("edge list ended after " + std::to_string(j) + " of " +
                              std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open edge-list file '" + path + "'");
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph_argument(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return load_edge_list(arg.substr(1));
    return realize(parse_family_spec(arg));
}

}  // namespace accdom
