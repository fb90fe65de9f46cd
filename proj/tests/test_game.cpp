#include "doctest.h"

#include <random>

#include <fstream>
#include <sstream>

#include "hunters/game.hpp"
#include "hunters/generators.hpp"
#include "hunters/solver.hpp"
#include "oracles.hpp"

using namespace hunters;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(HUNTERS_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a..g = 0..6: a-b-c-d-e and c-f-g.
Graph spider23() { return parse_graph(slurp("spider23.g")); }

VertexSet set_of(const Graph& g, std::vector<int> vs) { return make_set(g.n(), vs); }

}  // namespace

TEST_CASE("advance") {
    Graph k2 = path_graph(2);
    CHECK(members(advance(k2, k2.all(), set_of(k2, {0}))) == std::vector<int>{0});
    Graph p4 = path_graph(4);
    CHECK(advance(p4, set_of(p4, {2}), set_of(p4, {2})).none());
    CHECK(members(advance(p4, p4.all(), set_of(p4, {1, 2}))) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(advance(p4, p4.all(), p4.none()), EmptyShot);
}

TEST_CASE("trace and winning") {
    Graph k2 = path_graph(2);
    auto t = trace(k2, k2.all(), make_strategy({{0}, {0}}));
    REQUIRE(t.z.size() == 3);
    CHECK(members(t.z[1]) == std::vector<int>{0});
    CHECK(t.winning());
    CHECK(t.effective_length() == 2);

    Graph p4 = path_graph(4);
    CHECK_FALSE(is_winning(p4, p4.all(), make_strategy({{0}, {1}, {2}, {3}})));

    Graph g = spider23();
    auto red = bipartition(g)->red;
    CHECK(members(red) == std::vector<int>{0, 2, 4, 6});
    auto s = parse_strategy(slurp("spider23.s"));
    auto ft = trace(g, red, s);
    CHECK(format_trace(ft) == "trace 7\n0 2 4 6\n1 3 5\n0 2 6\n1 5\n0 2\n1\n\n");
    CHECK(is_winning(g, red, s));
    CHECK_THROWS_AS(trace(Graph(2), Graph(2).all(), make_strategy({{0}})), NotConnected);
    CHECK_THROWS_AS(trace(k2, k2.none(), make_strategy({{0}})), BadParameters);
}

TEST_CASE("strategy text format") {
    auto s = make_strategy({{3, 1}, {2}});
    CHECK(format_strategy(s) == "strategy 2\n1 3\n2\n");
    CHECK(parse_strategy(format_strategy(s)) == s);
    CHECK_THROWS_AS(parse_strategy("strategy 2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_strategy("strategy 1\n\n"), ParseError);
    CHECK_THROWS_AS(parse_strategy("plan 1\n0\n"), ParseError);
}

TEST_CASE("escape witness") {
    Graph k2 = path_graph(2);
    CHECK_FALSE(escape_witness(k2, k2.all(), make_strategy({{0}, {0}})));

    Graph p4 = path_graph(4);
    auto s = make_strategy({{1}, {1}});
    auto walk = escape_witness(p4, p4.all(), s);
    REQUIRE(walk);
    CHECK(walk->size() == 3);
    CHECK((*walk)[0] >= 2);
    CHECK((*walk)[1] >= 2);
    CHECK(is_valid_escape(p4, p4.all(), s, *walk));

    Graph c3 = cycle_graph(3);
    auto s3 = make_strategy({{0}, {0}});
    walk = escape_witness(c3, c3.all(), s3);
    REQUIRE(walk);
    CHECK(is_valid_escape(c3, c3.all(), s3, *walk));

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 6), seed);
        std::mt19937_64 rng(seed);
        Strategy r;
        for (int i = 0, len = 1 + static_cast<int>(rng() % 6); i < len; ++i)
            r.push({static_cast<int>(rng() % g.n())});
        bool win = is_winning(g, g.all(), r);
        CHECK(win == oracle::winning_by_walks(g, oracle::mask_of(g.all()), r));
        auto w = escape_witness(g, g.all(), r);
        CHECK(w.has_value() == !win);
        if (w) CHECK(is_valid_escape(g, g.all(), r, *w));
    }
}

TEST_CASE("parsimonious strategies") {
    Graph g = spider23();
    auto red = bipartition(g)->red;
    auto s = parse_strategy(slurp("spider23.s"));
    CHECK(is_parsimonious(g, red, s));
    Graph k2 = path_graph(2);
    CHECK_FALSE(is_parsimonious(k2, k2.all(), make_strategy({{0}, {1}})));

    CHECK(make_parsimonious(g, red, s) == s);

    Graph p3 = path_graph(3);
    // A rabbit on 1 survives the second round here, so this is not a valid input.
    CHECK_THROWS_AS(make_parsimonious(p3, p3.all(), make_strategy({{1}, {0, 2}, {1}})), NotWinning);
    auto fixed = make_parsimonious(p3, p3.all(), make_strategy({{0, 2}, {1}, {1}}));
    CHECK_FALSE(is_parsimonious(p3, p3.all(), make_strategy({{0, 2}, {1}, {1}})));
    CHECK(is_winning(p3, p3.all(), fixed));
    CHECK(is_parsimonious(p3, p3.all(), fixed));
    CHECK(fixed.hunters_used() <= 2);

    auto k = make_parsimonious(k2, k2.all(), make_strategy({{0}, {1}, {0}, {0}}));
    CHECK(is_winning(k2, k2.all(), k));
    CHECK(is_parsimonious(k2, k2.all(), k));
    CHECK(k.hunters_used() == 1);

    CHECK_THROWS_AS(make_parsimonious(k2, k2.all(), make_strategy({{0}})), NotWinning);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph h = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 7), seed);
        auto strat = hunter_number(h, h.all()).strategy;
        std::mt19937_64 rng(seed);
        // Pad every round with a random extra vertex to break parsimony.
        Strategy noisy;
        for (auto r : strat.rounds) {
            r.push_back(static_cast<int>(rng() % h.n()));
            noisy.push(r);
        }
        auto p = make_parsimonious(h, h.all(), noisy);
        CHECK(is_winning(h, h.all(), p));
        CHECK(is_parsimonious(h, h.all(), p));
        CHECK(p.hunters_used() <= noisy.hunters_used());
    }
}

TEST_CASE("cleared and monotone") {
    Graph g = spider23();
    auto red = bipartition(g)->red;
    auto s = parse_strategy(slurp("spider23.s"));
    CHECK(cleared_at(g, red, s, 0, 6));
    CHECK(cleared_at(g, red, s, 2, 1));
    // e is not shot in round 1 and has no contaminated neighbour before it.
    CHECK_FALSE(cleared_at(g, red, s, 4, 1));
    CHECK(is_monotone(g, red, s));

    Graph p4 = path_graph(4);
    auto report = check_monotone(p4, p4.all(), make_strategy({{0}, {1, 2}, {1, 2}}));
    CHECK_FALSE(report.monotone);
    REQUIRE(report.violation);
    CHECK(report.violation->vertex == 0);
    CHECK(report.violation->cleared_round == 1);
    CHECK(report.violation->recontaminated_round == 1);

    auto split = gen_split_matching(4);
    auto clique = make_strategy({{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(is_winning(split.graph, split.graph.all(), clique));
    CHECK(is_monotone(split.graph, split.graph.all(), clique));

    auto gap = gen_cograph_gap(2);
    CHECK_FALSE(is_monotone(gap.graph, gap.graph.all(), *gap.strategy));
}

TEST_CASE("monotone properties on solver output") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_instance(RandomKind::connected, 2 + static_cast<int>(seed % 8), seed);
        auto s = monotone_hunter_number(g, g.all()).strategy;
        auto t = trace(g, g.all(), s);
        REQUIRE(is_monotone(g, g.all(), s));
        REQUIRE(is_parsimonious(g, g.all(), s));
        for (std::size_t i = 1; i < t.z.size(); ++i) CHECK(is_subset(t.z[i], t.z[i - 1]));
        for (int i = 0; i < s.length(); ++i)
            for (int j = i + 1; j < s.length(); ++j)
                for (int v : s.rounds[i]) {
                    const auto& later = s.rounds[j];
                    if (!std::binary_search(later.begin(), later.end(), v)) continue;
                    const auto& next = s.rounds[i + 1];
                    CHECK(std::binary_search(next.begin(), next.end(), v));
                }
    }
}

TEST_CASE("advance is monotone in z") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_instance(RandomKind::connected, 3 + static_cast<int>(seed % 8), seed);
        std::mt19937_64 rng(seed);
        VertexSet z(g.n()), z2(g.n()), s(g.n());
        for (int v = 0; v < g.n(); ++v) {
            if (rng() % 2) z.set(v);
            if (rng() % 3) s.set(v);
        }
        if (s.none()) s.set(0);
        z2 = z;
        z2.set(static_cast<int>(rng() % g.n()));
        CHECK(is_subset(advance(g, z, s), advance(g, z2, s)));
    }
}

TEST_CASE("restrict strategy") {
    Graph g = spider23();
    auto red = bipartition(g)->red;
    auto s = parse_strategy(slurp("spider23.s"));
    CHECK(restrict_strategy(s, g, g.all()) == s);

    auto path = set_of(g, {0, 1, 2, 3});
    auto r = restrict_strategy(s, g, path);
    Graph h = induced_subgraph(g, {0, 1, 2, 3});
    CHECK(is_winning(h, set_of(h, {0, 2}), r));
    CHECK_THROWS_AS(restrict_strategy(s, g, set_of(g, {0, 2})), InvalidSubgraph);
    CHECK_THROWS_AS(restrict_strategy(s, g, g.none()), InvalidSubgraph);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph big = random_instance(RandomKind::connected, 4 + static_cast<int>(seed % 6), seed);
        auto strat = hunter_number(big, big.all()).strategy;
        std::mt19937_64 rng(seed);
        VertexSet keep(big.n());
        keep.set(static_cast<int>(rng() % big.n()));
        for (int step = 0; step < big.n(); ++step) {
            int v = static_cast<int>(rng() % big.n());
            if (intersects(big.neighborhood(v), keep) && rng() % 2) keep.set(v);
        }
        auto sub = induced_subgraph(big, members(keep));
        CHECK(is_winning(sub, sub.all(), restrict_strategy(strat, big, keep)));
    }
}

TEST_CASE("extend red strategy to the whole vertex set") {
    Graph g = spider23();
    auto bip = *bipartition(g);
    auto s = parse_strategy(slurp("spider23.s"));
    auto full = extend_red_to_full(g, bip, s);
    CHECK(full.length() == 2 * s.length() + 1);
    CHECK(is_winning(g, g.all(), full));
    CHECK(full.hunters_used() == s.hunters_used());

    Graph p4 = path_graph(4);
    auto bp = *bipartition(p4);
    auto sweep = make_strategy({{2}, {1}});
    REQUIRE(is_winning(p4, bp.red, sweep));
    auto ext = extend_red_to_full(p4, bp, sweep);
    CHECK(ext.length() == 5);
    CHECK(is_winning(p4, p4.all(), ext));
    CHECK_THROWS_AS(extend_red_to_full(p4, bp, make_strategy({{0}})), NotWinning);
}
