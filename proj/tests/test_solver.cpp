#include "doctest.h"

#include <random>

#include "hunters/generators.hpp"
#include "hunters/solver.hpp"
#include "oracles.hpp"

using namespace hunters;

TEST_CASE("decide_h on named families") {
    for (int n = 2; n <= 10; ++n) {
        Graph p = path_graph(n);
        auto d = decide_h(p, p.all(), 1);
        CHECK(d.yes);
        REQUIRE(d.strategy);
        CHECK(is_winning(p, p.all(), *d.strategy));
    }
    for (int n = 3; n <= 9; ++n) {
        Graph c = cycle_graph(n);
        CHECK_FALSE(decide_h(c, c.all(), 1).yes);
        CHECK(decide_h(c, c.all(), 2).yes);
    }
    Graph k4 = complete_graph(4);
    CHECK_FALSE(decide_h(k4, k4.all(), 2).yes);
    CHECK(decide_h(k4, k4.all(), 3).yes);
    CHECK_THROWS_AS(decide_h(Graph(3), Graph(3).all(), 1), NotConnected);
    CHECK_THROWS_AS(decide_h(path_graph(65), path_graph(65).all(), 1), SizeLimitExceeded);
}

TEST_CASE("hunter numbers") {
    Graph k1(1);
    auto r = hunter_number(k1, k1.all());
    CHECK(r.value == 0);
    CHECK(monotone_hunter_number(k1, k1.all()).value == 0);
    CHECK(hunter_number(grid_graph(3, 3), grid_graph(3, 3).all()).value == 2);

    Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
    auto red = bipartition(spider)->red;
    auto fr = hunter_number(spider, red);
    CHECK(fr.value == 1);
    CHECK(is_winning(spider, red, fr.strategy));
    // Legs of length two do not force a second hunter.
    CHECK(hunter_number(spider, spider.all()).value == 1);
}

TEST_CASE("monotone decisions") {
    for (int n = 4; n <= 9; ++n) {
        Graph p = path_graph(n);
        CHECK_FALSE(decide_mh(p, p.all(), 1).yes);
        auto d = decide_mh(p, p.all(), 2);
        CHECK(d.yes);
        REQUIRE(d.strategy);
        CHECK(is_monotone(p, p.all(), *d.strategy));
    }
    Graph star = star_graph(6);
    CHECK(decide_mh(star, star.all(), 1).yes);
    auto split = gen_split_matching(3);
    CHECK(monotone_hunter_number(split.graph, split.graph.all()).value == 3);
    CHECK(hunter_number(split.graph, split.graph.all()).value == 2);
    CHECK(monotone_hunter_number(path_graph(6), path_graph(6).all()).value == 2);
    auto gap = gen_cograph_gap(2);
    CHECK(monotone_hunter_number(gap.graph, gap.graph.all()).value == 5);
}

TEST_CASE("extracted strategies") {
    Graph k2 = path_graph(2);
    CHECK(*decide_h(k2, k2.all(), 1).strategy == make_strategy({{0}, {0}}));
    Graph p4 = path_graph(4);
    CHECK(is_winning(p4, p4.all(), *decide_h(p4, p4.all(), 1).strategy));
    Graph c4 = cycle_graph(4);
    auto s = *decide_h(c4, c4.all(), 2).strategy;
    CHECK(is_winning(c4, c4.all(), s));
    CHECK(s.hunters_used() <= 2);
    auto out = search(c4, c4.all(), 2, Mode::h);
    CHECK(out.winning);
    CHECK(extract_strategy(out) == s);
}

TEST_CASE("solver agrees with the fixpoint oracle") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Graph g = random_instance(RandomKind::connected, n, seed);
        auto w = g.all();
        std::uint32_t wm = oracle::mask_of(w);
        auto h = hunter_number(g, w);
        CHECK(h.value == oracle::hunter_number(g, wm, false));
        CHECK(h.certificate_checked);
        if (n >= 2) {
            CHECK(is_winning(g, w, h.strategy));
            CHECK(h.strategy.hunters_used() <= h.value);
        }
        if (n <= 6) {
            SolveOptions plain;
            plain.use_pathwidth_bound = false;
            plain.prune_growing_z = false;
            auto mh = monotone_hunter_number(g, w, plain);
            CHECK(mh.value == oracle::hunter_number(g, wm, true));
            CHECK(monotone_hunter_number(g, w).value == mh.value);
        }
    }
}

TEST_CASE("start sets other than V") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        Graph g = random_instance(RandomKind::connected, n, seed);
        std::mt19937_64 rng(seed);
        VertexSet w(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) w.set(v);
        if (w.none()) w.set(0);
        std::uint32_t wm = oracle::mask_of(w);
        for (int k = 1; k <= 3; ++k) {
            auto d = decide_h(g, w, k);
            CHECK(d.yes == oracle::can_win(g, wm, k));
            if (d.yes) CHECK(is_winning(g, w, *d.strategy));
            auto m = decide_mh(g, w, k);
            CHECK(m.yes == oracle::can_win_monotone(g, wm, k));
            if (m.yes) {
                CHECK(is_winning(g, w, *m.strategy));
                CHECK(is_monotone(g, w, *m.strategy));
            }
        }
    }
}

TEST_CASE("sandwich bounds") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 8), seed);
        int h = hunter_number(g, g.all()).value;
        SolveOptions o;
        o.use_pathwidth_bound = false;
        int mh = monotone_hunter_number(g, g.all(), o).value;
        int pw = pathwidth_exact(g).width;
        int vc = static_cast<int>(vertex_cover(g, CoverMode::exact).count());
        CHECK(min_degree(g) <= h);
        CHECK(h <= mh);
        CHECK(mh <= vc);
        CHECK(pw <= mh);
        CHECK(mh <= pw + 1);
    }
}

TEST_CASE("connected induced subgraphs never need more hunters") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_instance(RandomKind::connected, 4 + static_cast<int>(seed % 5), seed);
        int h = hunter_number(g, g.all()).value;
        int mh = monotone_hunter_number(g, g.all()).value;
        std::mt19937_64 rng(seed);
        VertexSet keep(g.n());
        keep.set(static_cast<int>(rng() % g.n()));
        for (int step = 0; step < 2 * g.n(); ++step) {
            int v = static_cast<int>(rng() % g.n());
            if (intersects(g.neighborhood(v), keep) && rng() % 3) keep.set(v);
        }
        Graph sub = induced_subgraph(g, members(keep));
        CHECK(hunter_number(sub, sub.all()).value <= h);
        CHECK(monotone_hunter_number(sub, sub.all()).value <= mh);
    }
}

TEST_CASE("decisions are monotone in k") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_instance(RandomKind::connected, 3 + static_cast<int>(seed % 6), seed);
        bool prev_h = false, prev_mh = false;
        for (int k = 1; k <= g.n(); ++k) {
            bool h = decide_h(g, g.all(), k).yes;
            bool mh = decide_mh(g, g.all(), k).yes;
            if (prev_h) CHECK(h);
            if (prev_mh) CHECK(mh);
            prev_h = h;
            prev_mh = mh;
        }
    }
}
