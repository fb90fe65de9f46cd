#include "hunters/game.hpp"

#include <algorithm>
#include <sstream>

namespace hunters {

int Strategy::hunters_used() const {
    std::size_t k = 0;
    for (const auto& r : rounds) k = std::max(k, r.size());
    return static_cast<int>(k);
}

void Strategy::push(std::vector<int> round) {
    std::sort(round.begin(), round.end());
    round.erase(std::unique(round.begin(), round.end()), round.end());
    rounds.push_back(std::move(round));
}

void Strategy::append(const Strategy& other) {
    rounds.insert(rounds.end(), other.rounds.begin(), other.rounds.end());
}

Strategy make_strategy(std::vector<std::vector<int>> rounds) {
    Strategy s;
    for (auto& r : rounds) s.push(std::move(r));
    return s;
}

VertexSet round_set(const Graph& g, const std::vector<int>& round) { return make_set(g.n(), round); }

void validate_strategy(const Graph& g, const Strategy& s) {
    if (s.rounds.empty()) throw EmptyShot("strategy has no rounds");
    for (std::size_t i = 0; i < s.rounds.size(); ++i) {
        if (s.rounds[i].empty()) throw EmptyShot("round " + std::to_string(i + 1) + " shoots nothing");
        for (int v : s.rounds[i])
            if (v < 0 || v >= g.n())
                throw BadParameters("round " + std::to_string(i + 1) + " shoots unknown vertex " + std::to_string(v));
    }
}

int Trace::effective_length() const {
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i].none()) return static_cast<int>(i);
    return -1;
}

VertexSet advance(const Graph& g, const VertexSet& z, const VertexSet& s) {
    if (s.none()) throw EmptyShot("advance called with an empty shot");
    return g.neighborhood(z - s);
}

Trace trace(const Graph& g, const VertexSet& w, const Strategy& strat) {
    require_connected(g);
    if (w.none()) throw BadParameters("empty start set");
    validate_strategy(g, strat);
    Trace t{w, {w}};
    t.z.reserve(strat.rounds.size() + 1);
    for (const auto& r : strat.rounds) t.z.push_back(advance(g, t.z.back(), round_set(g, r)));
    return t;
}

bool is_winning(const Graph& g, const VertexSet& w, const Strategy& strat) { return trace(g, w, strat).winning(); }

bool is_parsimonious(const Graph& g, const VertexSet& w, const Strategy& strat) {
    auto t = trace(g, w, strat);
    for (std::size_t i = 0; i < strat.rounds.size(); ++i)
        for (int v : strat.rounds[i])
            if (!t.z[i].test(v)) return false;
    return true;
}

std::optional<std::vector<int>> escape_witness(const Graph& g, const VertexSet& w, const Strategy& strat) {
    auto t = trace(g, w, strat);
    if (t.winning()) return std::nullopt;
    int l = strat.length();
    std::vector<int> walk(l + 1);
    walk[l] = static_cast<int>(t.z[l].find_first());
    for (int i = l; i >= 1; --i) {
        VertexSet alive = t.z[i - 1] - round_set(g, strat.rounds[i - 1]);
        VertexSet pred = alive & g.neighborhood(walk[i]);
        if (pred.none()) throw InternalError("contamination trace is inconsistent");
        walk[i - 1] = static_cast<int>(pred.find_first());
    }
    return walk;
}

bool is_valid_escape(const Graph& g, const VertexSet& w, const Strategy& strat, const std::vector<int>& walk) {
    if (walk.size() != strat.rounds.size() + 1 || !w.test(walk[0])) return false;
    for (std::size_t i = 0; i < strat.rounds.size(); ++i) {
        if (std::binary_search(strat.rounds[i].begin(), strat.rounds[i].end(), walk[i])) return false;
        if (!g.adjacent(walk[i], walk[i + 1])) return false;
    }
    return true;
}

Strategy make_parsimonious(const Graph& g, const VertexSet& w, const Strategy& strat) {
    Strategy cur = strat;
    for (;;) {
        auto t = trace(g, w, cur);
        int first_empty = t.effective_length();
        if (first_empty < 0) throw NotWinning("make_parsimonious needs a winning strategy");
        if (first_empty == 0) throw BadParameters("empty start set");
        cur.rounds.resize(first_empty);
        int disjoint = -1;
        for (int i = 0; i < first_empty && disjoint < 0; ++i)
            if (!t.z[i].intersects(round_set(g, cur.rounds[i]))) disjoint = i;
        if (disjoint >= 0) {
            cur.rounds[disjoint] = {static_cast<int>(t.z[disjoint].find_first())};
            continue;
        }
        Strategy out;
        for (int i = 0; i < first_empty; ++i) out.push(members(t.z[i] & round_set(g, cur.rounds[i])));
        return out;
    }
}

namespace {

bool cleared_by(const Graph& g, const VertexSet& z_prev, const VertexSet& s, int v) {
    if (s.test(v)) return true;
    bool touched = false;
    for (int u : g.neighbors(v))
        if (z_prev.test(u)) {
            if (!s.test(u)) return false;
            touched = true;
        }
    return touched;
}

}  // namespace

bool cleared_at(const Graph& g, const VertexSet& w, const Strategy& strat, int v, int i) {
    if (i < 1 || i > strat.length()) throw BadParameters("round index out of range");
    auto t = trace(g, w, strat);
    return cleared_by(g, t.z[i - 1], round_set(g, strat.rounds[i - 1]), v);
}

MonotoneReport check_monotone(const Graph& g, const VertexSet& w, const Strategy& strat) {
    auto t = trace(g, w, strat);
    int l = strat.length();
    std::vector<VertexSet> shots;
    shots.reserve(l);
    for (const auto& r : strat.rounds) shots.push_back(round_set(g, r));
    // first_cleared[v] = first round at which v is cleared (l + 1 if never).
    std::vector<int> first_cleared(g.n(), l + 1);
    for (int i = 1; i <= l; ++i)
        for (int v = 0; v < g.n(); ++v)
            if (first_cleared[v] > l && cleared_by(g, t.z[i - 1], shots[i - 1], v)) first_cleared[v] = i;
    MonotoneReport rep;
    for (int j = 1; j < l; ++j) {
        VertexSet exposed = t.z[j] - shots[j];
        for (auto v = exposed.find_first(); v != VertexSet::npos; v = exposed.find_next(v)) {
            if (first_cleared[v] <= j) {
                rep.monotone = false;
                rep.violation = Violation{static_cast<int>(v), first_cleared[v], j};
                return rep;
            }
        }
    }
    return rep;
}

bool is_monotone(const Graph& g, const VertexSet& w, const Strategy& strat) {
    return check_monotone(g, w, strat).monotone;
}

Strategy restrict_strategy(const Strategy& strat, const Graph& g, const VertexSet& h_vertices) {
    if (h_vertices.size() != static_cast<std::size_t>(g.n()) || h_vertices.none())
        throw InvalidSubgraph("vertex set is empty or sized for another graph");
    if (!is_connected(g, h_vertices)) throw InvalidSubgraph("vertex set does not induce a connected subgraph");
    validate_strategy(g, strat);
    auto hv = members(h_vertices);
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < static_cast<int>(hv.size()); ++i) index[hv[i]] = i;
    int fallback = -1;
    for (const auto& r : strat.rounds) {
        for (int v : r)
            if (index[v] >= 0) {
                fallback = index[v];
                break;
            }
        if (fallback >= 0) break;
    }
    if (fallback < 0) fallback = 0;
    Strategy out;
    for (const auto& r : strat.rounds) {
        std::vector<int> kept;
        for (int v : r)
            if (index[v] >= 0) kept.push_back(index[v]);
        if (kept.empty()) kept.push_back(fallback);
        out.push(std::move(kept));
    }
    return out;
}

Strategy extend_red_to_full(const Graph& g, const Bipartition& bip, const Strategy& strat) {
    if (!is_winning(g, bip.red, strat)) throw NotWinning("strategy does not win from the red class");
    Strategy out = strat;
    if (strat.length() % 2 == 0) out.push({strat.rounds.front().front()});
    out.append(strat);
    return out;
}

std::string format_strategy(const Strategy& s) {
    std::ostringstream out;
    out << "strategy " << s.length() << '\n';
    for (const auto& r : s.rounds) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << '\n';
    }
    return out.str();
}

Strategy parse_strategy(const std::string& text) {
    std::istringstream in(text);
    std::string line, word;
    if (!std::getline(in, line)) throw ParseError("empty strategy text");
    std::istringstream head(line);
    long long l = -1;
    if (!(head >> word >> l) || word != "strategy" || l < 1 || (head >> word))
        throw ParseError("bad strategy header: '" + line + "'");
    Strategy s;
    for (long long i = 0; i < l; ++i) {
        if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(l) + " strategy rounds");
        std::istringstream row(line);
        std::vector<int> round;
        long long v = 0;
        while (row >> v) {
            if (v < 0 || v > 100000000) throw ParseError("bad vertex id in round " + std::to_string(i + 1));
            round.push_back(static_cast<int>(v));
        }
        if (!row.eof()) throw ParseError("bad round line: '" + line + "'");
        if (round.empty()) throw ParseError("round " + std::to_string(i + 1) + " is empty");
        s.push(std::move(round));
    }
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content: '" + line + "'");
    return s;
}

std::string format_trace(const Trace& t) {
    std::ostringstream out;
    out << "trace " << t.z.size() << '\n';
    for (const auto& z : t.z) {
        auto vs = members(z);
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace hunters
