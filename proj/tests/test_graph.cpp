#include "accdom/graph.hpp"

#include "accdom/audit.hpp"
#include "accdom/domination.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace accdom;

TEST_CASE("build_graph basics") {
    Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(p5.n() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.degree_sequence() == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(p5.closed_nbhd(2) == VertexSet::of({1, 2, 3}));

    Graph iso = build_graph(3, {});
    CHECK(iso.edge_count() == 0);
    for (int v = 0; v < 3; ++v) CHECK(iso.closed_nbhd(v) == VertexSet::single(v));

    Graph k2 = build_graph(2, {{0, 1}, {1, 0}});  // duplicate collapses
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(build_graph(64, {}), capacity_error);
}

TEST_CASE("build_graph is label-deterministic") {
    Graph a = build_graph(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}});
    Graph b = build_graph(6, {{4, 5}, {1, 2}, {0, 1}, {2, 3}});
    CHECK(a == b);
}

TEST_CASE("family constructors") {
    Graph p5 = make_family({Family::path, 5});
    CHECK(p5.n() == 5);
    CHECK(p5.edge_count() == 4);

    Graph f2 = make_family({Family::friendship, 2});
    CHECK(f2.n() == 5);
    CHECK(f2.edge_count() == 6);
    CHECK(f2.degree(0) == 4);

    Graph q3 = make_family({Family::hypercube, 3});
    CHECK(q3.n() == 8);
    CHECK(q3.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

    CHECK_THROWS_AS(make_family({Family::cycle, 2}), domain_error);
}

TEST_CASE("corona") {
    Graph c_k2 = corona_k1(make_family({Family::complete, 2}));
    CHECK(test::isomorphic(c_k2, make_family({Family::path, 4})));

    Graph c_k1 = corona_k1(make_family({Family::complete, 1}));
    CHECK(c_k1 == make_family({Family::complete, 2}));

    Graph c_p3 = corona_k1(make_family({Family::path, 3}));
    CHECK(c_p3.n() == 6);
    CHECK(c_p3.edge_count() == 5);
    CHECK_THROWS_AS(corona_k1(build_graph(0, {})), input_error);
}

TEST_CASE("join") {
    Graph k1 = make_family({Family::complete, 1});
    Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(join(k1, two_k2) == make_family({Family::friendship, 2}));
    CHECK(join(k1, k1) == make_family({Family::complete, 2}));
    CHECK(join(make_family({Family::complete, 2}), make_family({Family::complete, 2})) ==
          make_family({Family::complete, 4}));
}

TEST_CASE("cartesian product") {
    Graph k2 = make_family({Family::complete, 2});
    CHECK(test::isomorphic(cartesian_product(make_family({Family::path, 2}), k2),
                           make_family({Family::cycle, 4})));
    CHECK(test::isomorphic(cartesian_product(k2, k2), make_family({Family::cycle, 4})));

    Graph l3 = cartesian_product(make_family({Family::path, 3}), k2);
    CHECK(l3.n() == 6);
    CHECK(l3.edge_count() == 7);
    CHECK(test::isomorphic(l3, make_family({Family::ladder, 3})));
}

TEST_CASE("book family matches K_{1,n} x K_2 with centers at 0 and 1") {
    for (int n = 1; n <= 4; ++n) {
        Graph book = make_family({Family::book, n});
        CHECK(book.degree(0) == n + 1);
        CHECK(book.degree(1) == n + 1);
        CHECK(book.adj(0).contains(1));
        Graph prod = cartesian_product(make_family({Family::star, n}),
                                       make_family({Family::complete, 2}));
        CHECK(test::isomorphic(book, prod));
    }
}

TEST_CASE("ladder family matches the Cartesian product up to n=5") {
    for (int n = 1; n <= 5; ++n) {
        Graph lad = make_family({Family::ladder, n});
        Graph prod = cartesian_product(make_family({Family::path, n}),
                                       make_family({Family::complete, 2}));
        CHECK(lad.degree_sequence() == prod.degree_sequence());
        CHECK(lad.edge_count() == prod.edge_count());
        CHECK(test::isomorphic(lad, prod));
    }
}

TEST_CASE("friendship equals join(K1, n K2) up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < n; ++j) pairs.emplace_back(2 * j, 2 * j + 1);
        Graph nk2 = build_graph(2 * n, pairs);
        Graph joined = join(make_family({Family::complete, 1}), nk2);
        CHECK(joined == make_family({Family::friendship, n}));
        CHECK(test::isomorphic(joined, make_family({Family::friendship, n})));
    }
}

TEST_CASE("handshake lemma across the family corpus") {
    for (const auto& [label, g] : family_corpus(12)) {
        int sum = 0;
        for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
        INFO(label);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("parse_family_spec") {
    GraphSpec c9 = parse_family_spec("cycle:9");
    CHECK(c9.kind == GraphSpec::Kind::family);
    CHECK(c9.family.family == Family::cycle);
    CHECK(c9.family.p1 == 9);

    GraphSpec cp2 = parse_family_spec("corona:path:2");
    CHECK(cp2.kind == GraphSpec::Kind::corona);
    CHECK(realize(cp2).n() == 4);

    GraphSpec jspec = parse_family_spec("join:complete:1:cycle:5");
    CHECK(jspec.order() == 6);
    CHECK(realize(jspec).edge_count() == 10);

    CHECK(parse_family_spec("complete_bipartite:3:5").order() == 8);
    CHECK(parse_family_spec("product:path:3:complete:2").order() == 6);

    CHECK_THROWS_AS(parse_family_spec("cycle:2"), domain_error);
    CHECK_THROWS_AS(parse_family_spec("wheel:5"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("path"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("path:x"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("path:3:4"), parse_error);
}

TEST_CASE("edge-list format round trip") {
    for (const auto& [label, g] : family_corpus(9)) {
        std::istringstream in(to_edge_list(g));
        INFO(label);
        CHECK(parse_edge_list(in) == g);
    }
    std::istringstream bad("3");
    CHECK_THROWS_AS(parse_edge_list(bad), parse_error);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(truncated), parse_error);
}

TEST_CASE("load_graph_argument") {
    CHECK(load_graph_argument("path:5") == make_family({Family::path, 5}));
    const char* path = "test_edges_tmp.txt";
    {
        std::ofstream out(path);
        out << to_edge_list(make_family({Family::cycle, 6}));
    }
    CHECK(load_graph_argument(std::string("@") + path) == make_family({Family::cycle, 6}));
    std::remove(path);
    CHECK_THROWS_AS(load_graph_argument("@no_such_file.txt"), input_error);
}
