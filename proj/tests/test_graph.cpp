#include "doctest.h"

#include <algorithm>
#include <random>

#include "hunters/generators.hpp"
#include "hunters/graph.hpp"
#include "oracles.hpp"

using namespace hunters;

namespace {

Graph triangle_with_pendant() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("parse and format graphs") {
    Graph p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(format_graph(p3) == "3 2\n0 1\n1 2\n");
    CHECK(parse_graph("1 0").n() == 1);
    Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3 == complete_graph(3));
    CHECK(parse_graph("3 2\n1 0\n2 1\n") == p3);

    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0\n"), ParseError);
    CHECK(to_dot(p3).find("0 -- 1") != std::string::npos);
}

TEST_CASE("bipartition") {
    auto p4 = bipartition(path_graph(4));
    REQUIRE(p4);
    CHECK(members(p4->red) == std::vector<int>{0, 2});
    CHECK(members(p4->white) == std::vector<int>{1, 3});
    CHECK_FALSE(bipartition(complete_graph(3)));
    auto star = bipartition(star_graph(5));
    REQUIRE(star);
    CHECK(members(star->red) == std::vector<int>{0});
    CHECK(star->white.count() == 5);
    CHECK_THROWS_AS(bipartition(Graph(2)), NotConnected);
}

TEST_CASE("split recognition") {
    auto sp = recognize_split(triangle_with_pendant());
    REQUIRE(sp);
    CHECK(members(sp->clique) == std::vector<int>{0, 1, 2});
    CHECK(members(sp->independent) == std::vector<int>{3});
    CHECK_FALSE(recognize_split(cycle_graph(5)));

    auto matched = gen_split_matching(4);
    sp = recognize_split(matched.graph);
    REQUIRE(sp);
    CHECK(members(sp->clique) == std::vector<int>{0, 1, 2, 3});

    // P_4: the maximum clique {1,2} works, {0,1} does not.
    sp = recognize_split(path_graph(4));
    REQUIRE(sp);
    CHECK(is_valid_split_partition(path_graph(4), *sp));

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        std::mt19937_64 rng(seed);
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_instance(RandomKind::connected, n, seed);
        auto r = recognize_split(g);
        CHECK(r.has_value() == oracle::is_split(g));
        if (r) CHECK(is_valid_split_partition(g, *r));
    }
}

TEST_CASE("cograph recognition") {
    auto k3 = recognize_cograph(complete_graph(3));
    REQUIRE(k3);
    CHECK(k3->kind == CoTree::Kind::join_node);
    CHECK(k3->children.size() == 3);
    CHECK_FALSE(recognize_cograph(path_graph(4)));

    // K_2 plus two isolated vertices.
    Graph g = Graph::from_edges(4, {{0, 1}});
    auto t = recognize_cograph(g);
    REQUIRE(t);
    CHECK(t->kind == CoTree::Kind::union_node);
    CHECK(evaluate_cotree(*t, 4) == g);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph h = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 7), seed);
        auto c = recognize_cograph(h);
        CHECK(c.has_value() == oracle::is_cograph(h));
        if (c) CHECK(evaluate_cotree(*c, h.n()) == h);
        Graph r = random_instance(RandomKind::cograph, 1 + static_cast<int>(seed % 10), seed);
        auto rc = recognize_cograph(r);
        REQUIRE(rc);
        CHECK(evaluate_cotree(*rc, r.n()) == r);
    }
}

TEST_CASE("interval recognition") {
    for (int n = 1; n <= 8; ++n) CHECK(recognize_interval(path_graph(n)));
    CHECK_FALSE(recognize_interval(cycle_graph(4)));
    CHECK_THROWS_AS(recognize_interval(Graph(3)), NotConnected);

    // K_4 on 0..3, apexes 4 and 5 joined to it, pendants 6 on 4 and 7 on 5.
    Graph g = complete_graph(8);
    g = Graph(8);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    for (int u = 0; u < 4; ++u) {
        g.add_edge(u, 4);
        g.add_edge(u, 5);
    }
    g.add_edge(4, 6);
    g.add_edge(5, 7);
    CHECK(oracle::is_chordal(g));
    CHECK_FALSE(oracle::has_asteroidal_triple(g));
    auto cliques = recognize_interval(g);
    REQUIRE(cliques);
    CHECK(*cliques == maximal_cliques(g));

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph h = random_instance(RandomKind::connected, 3 + static_cast<int>(seed % 6), seed);
        bool expected = oracle::is_chordal(h) && !oracle::has_asteroidal_triple(h);
        CHECK(recognize_interval(h).has_value() == expected);
        CHECK(is_chordal(h) == oracle::is_chordal(h));
        Graph iv = random_instance(RandomKind::interval, 1 + static_cast<int>(seed % 10), seed);
        CHECK(recognize_interval(iv));
    }
}

TEST_CASE("cliques, simplicial vertices, degree") {
    CHECK(maximal_cliques(complete_graph(5)).size() == 1);
    CHECK(omega(complete_graph(5)) == 5);
    auto p3 = maximal_cliques(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(members(p3[0]) == std::vector<int>{0, 1});
    CHECK(members(p3[1]) == std::vector<int>{1, 2});
    CHECK(omega(triangle_with_pendant()) == 3);
    CHECK(maximal_cliques(triangle_with_pendant()).size() == 2);

    CHECK(is_simplicial(path_graph(5), 0));
    CHECK_FALSE(is_simplicial(path_graph(3), 1));
    for (int v = 0; v < 5; ++v) CHECK(is_simplicial(complete_graph(5), v));

    CHECK(min_degree(complete_graph(4)) == 3);
    CHECK(min_degree(path_graph(5)) == 1);
    CHECK(min_degree(cycle_graph(6)) == 2);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 9), seed);
        auto mine = maximal_cliques(g);
        auto ref = oracle::maximal_cliques(g);
        std::vector<std::uint32_t> masks;
        for (const auto& c : mine) masks.push_back(oracle::mask_of(c));
        std::sort(masks.begin(), masks.end());
        CHECK(masks == ref);
    }
}

TEST_CASE("vertex cover") {
    CHECK(members(vertex_cover(star_graph(5), CoverMode::exact)) == std::vector<int>{0});
    CHECK(vertex_cover(path_graph(4), CoverMode::exact).count() == 2);
    CHECK(vertex_cover(cycle_graph(5), CoverMode::exact).count() == 3);
    CHECK(vertex_cover(cycle_graph(5), CoverMode::approx2).count() <= 4);
    CHECK_THROWS_AS(vertex_cover(path_graph(30), CoverMode::exact), SizeLimitExceeded);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 10), seed);
        auto exact = vertex_cover(g, CoverMode::exact);
        auto approx = vertex_cover(g, CoverMode::approx2);
        CHECK(is_vertex_cover(g, exact));
        CHECK(is_vertex_cover(g, approx));
        CHECK(static_cast<int>(exact.count()) == oracle::vertex_cover_size(g));
        CHECK(exact.count() <= approx.count());
        CHECK(approx.count() <= 2 * exact.count());
    }
}

TEST_CASE("exact pathwidth") {
    for (int n = 2; n <= 9; ++n) CHECK(pathwidth_exact(path_graph(n)).width == 1);
    for (int n = 1; n <= 7; ++n) CHECK(pathwidth_exact(complete_graph(n)).width == n - 1);
    auto t2 = pathwidth_exact(gen_ternary(2));
    CHECK(t2.width == 2);
    CHECK(is_valid_path_decomposition(gen_ternary(2), t2.decomposition));
    CHECK_THROWS_AS(pathwidth_exact(path_graph(23)), SizeLimitExceeded);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_instance(RandomKind::connected, 1 + static_cast<int>(seed % 8), seed);
        auto pw = pathwidth_exact(g);
        CHECK(pw.width == oracle::pathwidth_by_permutations(g));
        CHECK(pw.decomposition.width() == pw.width);
        CHECK(vertex_separation(g, pw.order) == pw.width);
        CHECK(is_valid_path_decomposition(g, pw.decomposition));
    }
}

TEST_CASE("named graphs") {
    CHECK(grid_graph(3, 4).m() == 17);
    CHECK(hypercube_graph(3).m() == 12);
    CHECK(cycle_graph(5).m() == 5);
    CHECK(gen_ternary(0).n() == 1);
    CHECK(gen_ternary(1) == star_graph(3));
    CHECK(gen_ternary(3).n() == 40);
}
