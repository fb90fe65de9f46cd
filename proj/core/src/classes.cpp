#include "hunters/classes.hpp"

#include <algorithm>

namespace hunters {

namespace {

void require_split(const Graph& g, const SplitPartition& sp) {
    if (!is_valid_split_partition(g, sp)) throw InvalidPartition("not a split partition with a maximal clique");
    require_connected(g);
}

std::vector<int> without(const std::vector<int>& vs, int x) {
    std::vector<int> out;
    for (int v : vs)
        if (v != x) out.push_back(v);
    return out;
}

}  // namespace

SolveResult split_h(const Graph& g, const SplitPartition& sp) {
    require_split(g, sp);
    auto c = members(sp.clique);
    if (g.n() == 1) return SolveResult{0, make_strategy({{0}}), true};
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            int x = c[i], y = c[j];
            if ((g.neighborhood(x) & g.neighborhood(y) & sp.independent).none()) {
                auto cy = without(c, y), cx = without(c, x);
                Strategy s = make_strategy({cy, cy, cx, cx, cy});
                return SolveResult{static_cast<int>(c.size()) - 1, s, is_winning(g, g.all(), s)};
            }
        }
    Strategy s = make_strategy({c, c});
    return SolveResult{static_cast<int>(c.size()), s, is_winning(g, g.all(), s)};
}

SolveResult split_mh(const Graph& g, const SplitPartition& sp) {
    require_split(g, sp);
    auto c = members(sp.clique);
    if (g.n() == 1) return SolveResult{0, make_strategy({{0}}), true};
    for (int v : c) {
        if (g.neighborhood(v).is_subset_of(sp.clique)) {
            auto rest = without(c, v);
            Strategy s = make_strategy({rest, rest});
            bool ok = is_winning(g, g.all(), s) && is_monotone(g, g.all(), s);
            return SolveResult{static_cast<int>(c.size()) - 1, s, ok};
        }
    }
    Strategy s = make_strategy({c, c});
    bool ok = is_winning(g, g.all(), s) && is_monotone(g, g.all(), s);
    return SolveResult{static_cast<int>(c.size()), s, ok};
}

int split_pathwidth_equals_h(const Graph& g, const SplitPartition& sp) { return split_h(g, sp).value; }

int interval_mh(const Graph& g) {
    auto cliques = recognize_interval(g);
    if (!cliques) throw NotInterval("graph is not an interval graph");
    std::size_t w = 0;
    for (const auto& c : *cliques) w = std::max(w, c.count());
    bool all_have_simplicial = true;
    for (const auto& c : *cliques) {
        if (c.count() != w) continue;
        bool has = false;
        for (int v : members(c))
            if (is_simplicial(g, v)) has = true;
        if (!has) all_have_simplicial = false;
    }
    return static_cast<int>(w) - (all_have_simplicial ? 1 : 0);
}

namespace {

struct Summary {
    int mh;
    int size;
};

Summary join(Summary a, Summary b) { return {std::min(a.mh + b.size, a.size + b.mh), a.size + b.size}; }

Summary summarize(const CoTree& t, bool left) {
    if (t.kind == CoTree::Kind::leaf) return {0, 1};
    std::vector<Summary> parts;
    for (const auto& c : t.children) parts.push_back(summarize(c, left));
    if (t.kind == CoTree::Kind::union_node) {
        Summary s{0, 0};
        for (auto p : parts) s = {std::max(s.mh, p.mh), s.size + p.size};
        return s;
    }
    if (!left) std::reverse(parts.begin(), parts.end());
    Summary acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = join(acc, parts[i]);
    return acc;
}

}  // namespace

int cograph_mh(const CoTree& t) { return summarize(t, true).mh; }

int cograph_mh_fold_right(const CoTree& t) { return summarize(t, false).mh; }

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int known_h(Family family, int a, int b) {
    if (a < 1) throw BadParameters("family size must be positive");
    switch (family) {
        case Family::path:
            return a == 1 ? 0 : 1;
        case Family::cycle:
            if (a < 3) throw BadParameters("cycles need at least 3 vertices");
            return 2;
        case Family::clique:
            return a - 1;
        case Family::grid:
            if (b < 1) throw BadParameters("grid needs two positive sides");
            if (a * b == 1) return 0;
            return std::min(a, b) / 2 + 1;
        case Family::hypercube: {
            long long h = 1;
            for (int i = 0; i <= a - 2; ++i) h += binomial(i, i / 2);
            return static_cast<int>(h);
        }
    }
    throw BadParameters("unknown family");
}

}  // namespace hunters
