#include "hunters/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace hunters {

VertexSet make_set(int n, const std::vector<int>& list) {
    VertexSet s(n);
    for (int v : list) s.set(v);
    return s;
}

std::vector<int> members(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(static_cast<int>(v));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); }

bool intersects(const VertexSet& a, const VertexSet& b) { return a.intersects(b); }

Graph::Graph(int n) : adj_(n) {
    if (n < 0) throw BadParameters("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw ParseError("vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all() const {
    VertexSet s(n());
    s.set();
    return s;
}

VertexSet Graph::neighborhood(int v) const { return make_set(n(), adj_[v]); }

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out(n());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        for (int w : adj_[v]) out.set(w);
    return out;
}

namespace {

bool read_ints(const std::string& line, int& a, int& b) {
    std::istringstream in(line);
    long long x = 0, y = 0;
    if (!(in >> x >> y)) return false;
    std::string rest;
    if (in >> rest) return false;
    if (x < 0 || y < 0 || x > 100000000 || y > 100000000) return false;
    a = static_cast<int>(x);
    b = static_cast<int>(y);
    return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input");
    int n = 0, m = 0;
    if (!read_ints(line, n, m)) throw ParseError("bad header line: '" + line + "'");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(m) + " edge lines");
        int u = 0, v = 0;
        if (!read_ints(line, u, v)) throw ParseError("bad edge line: '" + line + "'");
        g.add_edge(u, v);
    }
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content: '" + line + "'");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& vertices) {
    std::vector<VertexSet> out;
    VertexSet seen(g.n());
    for (int s : members(vertices)) {
        if (seen.test(s)) continue;
        VertexSet comp(g.n());
        std::vector<int> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int w : g.neighbors(v))
                if (vertices.test(w) && !seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g, const VertexSet& vertices) {
    return vertices.none() || components(g, vertices).size() == 1;
}

bool is_connected(const Graph& g) { return g.n() > 0 && is_connected(g, g.all()); }

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("graph with " + std::to_string(g.n()) + " vertices is not connected");
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
    Graph h(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (index[w] > i) h.add_edge(i, index[w]);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    require_connected(g);
    std::vector<int> color(g.n(), -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                q.push(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    Bipartition b{g.none(), g.none()};
    for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? b.red : b.white).set(v);
    return b;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    auto vs = members(s);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : members(s))
        for (int w : g.neighbors(v))
            if (s.test(w)) return false;
    return true;
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& sp) {
    if (sp.clique.size() != static_cast<std::size_t>(g.n()) || sp.independent.size() != sp.clique.size()) return false;
    if (sp.clique.intersects(sp.independent) || (sp.clique | sp.independent).count() != static_cast<std::size_t>(g.n()))
        return false;
    if (sp.clique.none() || !is_clique(g, sp.clique) || !is_independent(g, sp.independent)) return false;
    for (int v : members(sp.independent))
        if (sp.clique.is_subset_of(g.neighborhood(v))) return false;
    return true;
}

std::optional<SplitPartition> recognize_split(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    auto cliques = maximal_cliques(g);
    std::size_t best = 0;
    for (const auto& c : cliques) best = std::max(best, c.count());
    for (const auto& c : cliques) {
        if (c.count() != best) continue;
        SplitPartition sp{c, g.all() - c};
        if (!is_independent(g, sp.independent)) continue;
        for (int v : members(sp.independent)) {
            if (sp.clique.is_subset_of(g.neighborhood(v))) {
                sp.clique.set(v);
                sp.independent.reset(v);
                break;
            }
        }
        return sp;
    }
    return std::nullopt;
}

int CoTree::size() const {
    if (kind == Kind::leaf) return 1;
    int s = 0;
    for (const auto& c : children) s += c.size();
    return s;
}

namespace {

std::optional<CoTree> cotree_of(const Graph& g, const Graph& co, const VertexSet& vs) {
    if (vs.count() == 1) return CoTree{CoTree::Kind::leaf, static_cast<int>(vs.find_first()), {}};
    CoTree node;
    auto parts = components(g, vs);
    if (parts.size() > 1) {
        node.kind = CoTree::Kind::union_node;
    } else {
        parts = components(co, vs);
        if (parts.size() == 1) return std::nullopt;
        node.kind = CoTree::Kind::join_node;
    }
    for (const auto& p : parts) {
        auto child = cotree_of(g, co, p);
        if (!child) return std::nullopt;
        node.children.push_back(std::move(*child));
    }
    return node;
}

void collect_leaves(const CoTree& t, std::vector<int>& out) {
    if (t.kind == CoTree::Kind::leaf) {
        out.push_back(t.vertex);
        return;
    }
    for (const auto& c : t.children) collect_leaves(c, out);
}

}  // namespace

std::optional<CoTree> recognize_cograph(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    return cotree_of(g, complement(g), g.all());
}

Graph evaluate_cotree(const CoTree& t, int n) {
    Graph g(n);
    std::function<void(const CoTree&)> walk = [&](const CoTree& node) {
        if (node.kind == CoTree::Kind::leaf) return;
        for (const auto& c : node.children) walk(c);
        if (node.kind != CoTree::Kind::join_node) return;
        std::vector<std::vector<int>> leaves(node.children.size());
        for (std::size_t i = 0; i < node.children.size(); ++i) collect_leaves(node.children[i], leaves[i]);
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j)
                for (int u : leaves[i])
                    for (int v : leaves[j]) g.add_edge(u, v);
    };
    walk(t);
    return g;
}

namespace {

// Maximum cardinality search; the reverse visiting order is a perfect
// elimination ordering whenever g is chordal.
std::vector<int> mcs_elimination_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!done[w]) ++weight[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Candidate cliques {v} + later neighbours, or nullopt if the order is not a PEO.
std::optional<std::vector<VertexSet>> peo_cliques(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<VertexSet> cands;
    for (int v : order) {
        int parent = -1;
        VertexSet later(n);
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) {
                later.set(w);
                if (parent < 0 || pos[w] < pos[parent]) parent = w;
            }
        if (parent >= 0) {
            VertexSet rest = later;
            rest.reset(parent);
            if (!rest.is_subset_of(g.neighborhood(parent))) return std::nullopt;
        }
        later.set(v);
        cands.push_back(std::move(later));
    }
    return cands;
}

}  // namespace

bool is_chordal(const Graph& g) { return peo_cliques(g, mcs_elimination_order(g)).has_value(); }

bool has_asteroidal_triple(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        VertexSet rest = g.all() - g.neighborhood(a);
        rest.reset(a);
        int label = 0;
        for (const auto& c : components(g, rest)) {
            for (int v : members(c)) comp[a][v] = label;
            ++label;
        }
    }
    auto together = [&](int x, int y, int z) { return comp[x][y] >= 0 && comp[x][y] == comp[x][z]; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                if (together(a, b, c) && together(b, a, c) && together(c, a, b)) return true;
            }
        }
    return false;
}

std::optional<std::vector<VertexSet>> recognize_interval(const Graph& g) {
    require_connected(g);
    auto cands = peo_cliques(g, mcs_elimination_order(g));
    if (!cands || has_asteroidal_triple(g)) return std::nullopt;
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cands->size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cands->size() && maximal; ++j) {
            if (i == j) continue;
            const auto& a = (*cands)[i];
            const auto& b = (*cands)[j];
            if (a.is_proper_subset_of(b) || (a == b && j < i)) maximal = false;
        }
        if (maximal) out.push_back((*cands)[i]);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return members(a) < members(b); });
    return out;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (int u : members(p | x)) {
        std::size_t c = (p & g.neighborhood(u)).count();
        if (pivot < 0 || c > best) {
            pivot = u;
            best = c;
        }
    }
    for (int v : members(p - g.neighborhood(pivot))) {
        VertexSet nv = g.neighborhood(v);
        VertexSet r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & nv, x & nv, out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, g.none(), g.all(), g.none(), out);
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return members(a) < members(b); });
    return out;
}

int omega(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, static_cast<int>(c.count()));
    return best;
}

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighborhood(v)); }

int min_degree(const Graph& g) {
    int best = g.n() > 0 ? g.degree(0) : 0;
    for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& u) {
    for (auto [a, b] : g.edges())
        if (!u.test(a) && !u.test(b)) return false;
    return true;
}

namespace {

struct CoverSearch {
    std::vector<std::uint32_t> adj;
    std::uint32_t best;
    int best_size;

    void run(std::uint32_t chosen, int size, std::uint32_t alive) {
        if (size >= best_size) return;
        int pick = -1, pick_deg = 0;
        for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            int d = __builtin_popcount(adj[v] & alive);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick < 0) {
            best = chosen;
            best_size = size;
            return;
        }
        std::uint32_t nb = adj[pick] & alive;
        run(chosen | (1u << pick), size + 1, alive & ~(1u << pick));
        run(chosen | nb, size + pick_deg, alive & ~nb & ~(1u << pick));
    }
};

}  // namespace

VertexSet vertex_cover(const Graph& g, CoverMode mode) {
    if (mode == CoverMode::approx2) {
        VertexSet u = g.none();
        for (auto [a, b] : g.edges())
            if (!u.test(a) && !u.test(b)) {
                u.set(a);
                u.set(b);
            }
        return u;
    }
    if (g.n() > kVertexCoverExactMaxVertices)
        throw SizeLimitExceeded("exact vertex cover limited to " + std::to_string(kVertexCoverExactMaxVertices) +
                                " vertices");
    CoverSearch s;
    s.adj.assign(g.n(), 0);
    for (auto [a, b] : g.edges()) {
        s.adj[a] |= 1u << b;
        s.adj[b] |= 1u << a;
    }
    std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    s.best = all;
    s.best_size = g.n() + 1;
    s.run(0, 0, all);
    VertexSet u = g.none();
    for (int v = 0; v < g.n(); ++v)
        if (s.best >> v & 1u) u.set(v);
    return u;
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.count()) - 1);
    return w;
}

bool is_valid_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    VertexSet covered = g.none();
    for (const auto& b : pd.bags) {
        if (b.size() != static_cast<std::size_t>(g.n())) return false;
        covered |= b;
    }
    if (covered != g.all()) return false;
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& b : pd.bags)
            if (b.test(u) && b.test(v)) found = true;
        if (!found) return false;
    }
    for (int v = 0; v < g.n(); ++v) {
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
            if (pd.bags[i].test(v)) {
                if (first < 0) first = i;
                last = i;
            }
        for (int i = first; i <= last; ++i)
            if (!pd.bags[i].test(v)) return false;
    }
    return true;
}

int vertex_separation(const Graph& g, const std::vector<int>& order) {
    VertexSet prefix = g.none();
    int best = 0;
    for (int v : order) {
        prefix.set(v);
        int boundary = 0;
        for (int u : members(prefix))
            if (!g.neighborhood(u).is_subset_of(prefix)) ++boundary;
        best = std::max(best, boundary);
    }
    return best;
}

PathwidthResult pathwidth_exact(const Graph& g) {
    int n = g.n();
    if (n > kPathwidthMaxVertices)
        throw SizeLimitExceeded("exact pathwidth limited to " + std::to_string(kPathwidthMaxVertices) + " vertices");
    PathwidthResult res;
    if (n == 0) return res;
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [a, b] : g.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    auto boundary = [&](std::uint32_t s) {
        int c = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            if (adj[v] & ~s) ++c;
        }
        return c;
    };
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> f(std::size_t(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
        int best = 255;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            best = std::min<int>(best, f[s & ~(1u << v)]);
        }
        f[s] = static_cast<std::uint8_t>(std::max(best, boundary(s)));
        if (s == full) break;
    }
    res.width = f[full];
    std::vector<int> rev;
    for (std::uint32_t s = full; s;) {
        int pick = -1;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            if (pick < 0 || f[s & ~(1u << v)] < f[s & ~(1u << pick)]) pick = v;
        }
        rev.push_back(pick);
        s &= ~(1u << pick);
    }
    res.order.assign(rev.rbegin(), rev.rend());
    std::uint32_t prefix = 0;
    for (int v : res.order) {
        VertexSet bag = g.none();
        for (std::uint32_t rest = prefix; rest; rest &= rest - 1) {
            int u = __builtin_ctz(rest);
            if (adj[u] & ~prefix) bag.set(u);
        }
        bag.set(v);
        res.decomposition.bags.push_back(std::move(bag));
        prefix |= 1u << v;
    }
    return res;
}

}  // namespace hunters
