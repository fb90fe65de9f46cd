#include "hunters/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace hunters {

namespace {

struct StateHash {
    std::size_t operator()(const GameState& s) const {
        std::uint64_t h = s.z * 0x9E3779B97F4A7C15ull;
        h ^= s.cleared + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct Link {
    GameState parent;
    std::uint64_t shot;
};

std::uint64_t spread(std::uint64_t bits, const std::vector<int>& pos) {
    std::uint64_t r = 0;
    for (; bits; bits &= bits - 1) r |= 1ull << pos[std::countr_zero(bits)];
    return r;
}

// Calls f(mask) for every j-subset of `pool` in ascending mask order; stops when f returns true.
template <class F>
bool for_each_subset(std::uint64_t pool, int j, F&& f) {
    std::vector<int> pos;
    for (std::uint64_t b = pool; b; b &= b - 1) pos.push_back(std::countr_zero(b));
    int r = static_cast<int>(pos.size());
    if (j < 0 || j > r) return false;
    if (j == 0) return f(std::uint64_t{0});
    std::uint64_t x = (j == 64) ? ~0ull : ((1ull << j) - 1);
    std::uint64_t last = x << (r - j);
    for (;;) {
        if (f(spread(x, pos))) return true;
        if (x == last) return false;
        std::uint64_t c = x & (~x + 1);
        std::uint64_t s = x + c;
        x = (((s ^ x) >> 2) / c) | s;
    }
}

struct Masks {
    int n;
    std::vector<std::uint64_t> adj;

    explicit Masks(const Graph& g) : n(g.n()), adj(g.n(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1ull << v;
            adj[v] |= 1ull << u;
        }
    }

    std::uint64_t neighborhood(std::uint64_t x) const {
        std::uint64_t r = 0;
        for (; x; x &= x - 1) r |= adj[std::countr_zero(x)];
        return r;
    }

    std::uint64_t newly_cleared(std::uint64_t z, std::uint64_t s) const {
        std::uint64_t r = s;
        for (int v = 0; v < n; ++v) {
            std::uint64_t touched = adj[v] & z;
            if (touched && (touched & ~s) == 0) r |= 1ull << v;
        }
        return r;
    }
};

std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : members(s)) m |= 1ull << v;
    return m;
}

}  // namespace

SearchOutcome search(const Graph& g, const VertexSet& w, int k, Mode mode, const SolveOptions& opt) {
    require_connected(g);
    if (g.n() > kSolverMaxVertices)
        throw SizeLimitExceeded("exact search limited to " + std::to_string(kSolverMaxVertices) + " vertices");
    if (w.size() != static_cast<std::size_t>(g.n()) || w.none()) throw BadParameters("start set is empty or mis-sized");
    if (k < 1) throw BadParameters("hunter count must be at least 1");

    Masks mk(g);
    const bool prune = mode == Mode::mh && opt.prune_growing_z && w.all();
    SearchOutcome out;
    out.mode = mode;
    out.k = k;
    out.n = g.n();

    GameState start{to_mask(w), 0};
    std::unordered_map<GameState, Link, StateHash> seen;
    seen.reserve(1024);
    seen.emplace(start, Link{start, 0});
    std::deque<GameState> queue{start};
    GameState winner{};
    std::uint64_t winning_shot = 0;
    bool found = false;

    while (!queue.empty() && !found) {
        GameState cur = queue.front();
        queue.pop_front();
        int zsize = std::popcount(cur.z);
        std::uint64_t forced = mode == Mode::mh ? (cur.cleared & cur.z) : 0;
        int fsize = std::popcount(forced);
        if (fsize > k) continue;
        std::uint64_t pool = cur.z & ~forced;
        int top = std::min(k, zsize);
        int bottom = mode == Mode::h ? top : std::max(1, fsize);
        for (int size = top; size >= bottom && !found; --size) {
            for_each_subset(pool, size - fsize, [&](std::uint64_t extra) {
                std::uint64_t shot = forced | extra;
                std::uint64_t next_z = mk.neighborhood(cur.z & ~shot);
                if (prune && (next_z & ~cur.z)) return false;
                GameState next{next_z, 0};
                if (mode == Mode::mh) next.cleared = cur.cleared | mk.newly_cleared(cur.z, shot);
                if (next_z == 0) {
                    winner = cur;
                    winning_shot = shot;
                    found = true;
                    return true;
                }
                if (seen.emplace(next, Link{cur, shot}).second) queue.push_back(next);
                return false;
            });
        }
    }
    out.states = seen.size();
    if (!found) return out;
    out.winning = true;
    out.shots.push_back(winning_shot);
    for (GameState s = winner; !(s == start);) {
        const Link& link = seen.at(s);
        out.shots.push_back(link.shot);
        s = link.parent;
    }
    std::reverse(out.shots.begin(), out.shots.end());
    if (g.n() < 63 && out.shots.size() > (std::size_t{1} << g.n()))
        throw InternalError("strategy longer than the number of game states");
    return out;
}

Strategy extract_strategy(const SearchOutcome& outcome) {
    if (!outcome.winning) throw NotWinning("no winning play was found");
    Strategy s;
    for (std::uint64_t shot : outcome.shots) {
        std::vector<int> round;
        for (std::uint64_t b = shot; b; b &= b - 1) round.push_back(std::countr_zero(b));
        s.push(std::move(round));
    }
    return s;
}

namespace {

Decision to_decision(const SearchOutcome& o) {
    Decision d;
    d.yes = o.winning;
    d.states = o.states;
    if (o.winning) d.strategy = extract_strategy(o);
    return d;
}

bool single_vertex(const Graph& g, const VertexSet& w) {
    return g.n() == 1 && w.size() == 1 && w.test(0);
}

int cover_bound(const Graph& g) {
    if (g.n() <= kVertexCoverExactMaxVertices) return static_cast<int>(vertex_cover(g, CoverMode::exact).count());
    return static_cast<int>(vertex_cover(g, CoverMode::approx2).count());
}

SolveResult single_vertex_result() {
    return SolveResult{0, make_strategy({{0}}), true};
}

}  // namespace

Decision decide_h(const Graph& g, const VertexSet& w, int k) {
    if (single_vertex(g, w)) return Decision{true, make_strategy({{0}}), 1};
    return to_decision(search(g, w, k, Mode::h));
}

Decision decide_mh(const Graph& g, const VertexSet& w, int k, const SolveOptions& opt) {
    if (single_vertex(g, w)) return Decision{true, make_strategy({{0}}), 1};
    return to_decision(search(g, w, k, Mode::mh, opt));
}

SolveResult hunter_number(const Graph& g, const VertexSet& w) {
    require_connected(g);
    if (single_vertex(g, w)) return single_vertex_result();
    int lo = w.all() ? std::max(1, min_degree(g)) : 1;
    int hi = std::max(lo, cover_bound(g));
    for (int k = lo; k <= g.n(); ++k) {
        auto d = decide_h(g, w, k);
        if (!d.yes) {
            if (k >= hi) throw InternalError("no winning strategy within the vertex cover bound");
            continue;
        }
        SolveResult r{k, *d.strategy, false};
        r.certificate_checked = r.strategy.hunters_used() <= k && is_winning(g, w, r.strategy);
        return r;
    }
    throw InternalError("hunter number search exhausted");
}

SolveResult monotone_hunter_number(const Graph& g, const VertexSet& w, const SolveOptions& opt) {
    require_connected(g);
    if (single_vertex(g, w)) return single_vertex_result();
    int lo = 1;
    if (opt.use_pathwidth_bound && w.all() && g.n() <= kPathwidthMaxVertices) lo = std::max(1, pathwidth_exact(g).width);
    int hi = std::max(lo, cover_bound(g));
    for (int k = lo; k <= g.n(); ++k) {
        auto d = decide_mh(g, w, k, opt);
        if (!d.yes) {
            if (k >= hi) throw InternalError("no monotone strategy within the vertex cover bound");
            continue;
        }
        SolveResult r{k, *d.strategy, false};
        r.certificate_checked = r.strategy.hunters_used() <= k && is_winning(g, w, r.strategy) &&
                                is_monotone(g, w, r.strategy);
        return r;
    }
    throw InternalError("monotone hunter number search exhausted");
}

}  // namespace hunters
