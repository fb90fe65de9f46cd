#include "hunters/tree.hpp"

#include <algorithm>
#include <sstream>

namespace hunters {

bool TreeLabel::contains(int m) const { return std::find(entries.begin(), entries.end(), m) != entries.end(); }

bool TreeLabel::has_critical(int m) const {
    if (std::find(entries.begin(), entries.end() - 1, m) != entries.end() - 1) return true;
    return starred && entries.back() == m;
}

std::string TreeLabel::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
    if (starred) out << '*';
    return out.str();
}

TreeLabel parse_label(const std::string& text) {
    TreeLabel l;
    std::string body = text;
    if (!body.empty() && body.back() == '*') {
        l.starred = true;
        body.pop_back();
    }
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad label '" + text + "'");
        l.entries.push_back(std::stoi(item));
    }
    if (l.entries.empty()) throw ParseError("empty label");
    for (std::size_t i = 1; i < l.entries.size(); ++i)
        if (l.entries[i] >= l.entries[i - 1]) throw ParseError("label entries must decrease: '" + text + "'");
    return l;
}

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

bool is_star(const Graph& g) {
    if (!is_tree(g) || g.n() < 2) return false;
    int big = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 2) ++big;
    return big <= 1;
}

RootedTree RootedTree::from_graph(const Graph& g, int root) {
    if (!is_tree(g)) throw BadParameters("graph is not a tree");
    if (root < 0 || root >= g.n()) throw BadParameters("root out of range");
    RootedTree t;
    t.root = root;
    t.parent.assign(g.n(), -1);
    t.children.assign(g.n(), {});
    std::vector<int> stack{root};
    std::vector<bool> seen(g.n(), false);
    seen[root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                t.parent[w] = v;
                t.children[v].push_back(w);
                stack.push_back(w);
            }
    }
    return t;
}

std::vector<int> RootedTree::postorder() const {
    std::vector<int> order, stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : children[v]) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

TreeLabel combine_labels(const std::vector<TreeLabel>& children) {
    if (children.empty()) return TreeLabel{{0}, false};
    TreeLabel lambda;
    int k = 0;
    for (const auto& c : children)
        for (int a : c.entries) k = std::max(k, a);
    for (int m = 0; m <= k; ++m) {
        int nm = 0;
        bool critical = false;
        for (const auto& c : children) {
            if (c.contains(m)) ++nm;
            if (c.has_critical(m)) critical = true;
        }
        if (m == 0) {
            lambda = TreeLabel{{nm >= 1 ? 1 : 0}, false};
        } else if (m == 1) {
            if (nm == 1 && !critical && lambda == TreeLabel{{0}, false}) {
                lambda = TreeLabel{{1}, true};  // case 3
            } else if (nm >= 1) {
                lambda = TreeLabel{{2}, false};  // cases 4 and 5
            }
        } else {
            // Invariant: lambda is the label of v in the tree without the
            // subtrees of monotone hunter number at least m.
            if (nm >= 3) {
                lambda = TreeLabel{{m + 1}, false};  // case 6
            } else if (nm == 2 && critical) {
                lambda = TreeLabel{{m + 1}, false};  // case 7
            } else if (nm == 2) {
                lambda = TreeLabel{{m}, true};  // case 8
            } else if (nm == 1 && critical && lambda.contains(m)) {
                lambda = TreeLabel{{m + 1}, false};  // case 9
            } else if (nm == 1 && critical) {
                lambda.entries.insert(lambda.entries.begin(), m);  // case 10
            } else if (nm == 1) {
                lambda = TreeLabel{{m}, false};  // case 11
            }
        }
    }
    return lambda;
}

std::vector<TreeLabel> tree_labels(const RootedTree& t) {
    std::vector<TreeLabel> labels(t.n());
    for (int v : t.postorder()) {
        std::vector<TreeLabel> ch;
        for (int c : t.children[v]) ch.push_back(labels[c]);
        labels[v] = combine_labels(ch);
    }
    return labels;
}

TreeLabel tree_label(const RootedTree& t, int u) {
    Graph g(t.n());
    for (int v = 0; v < t.n(); ++v)
        if (t.parent[v] >= 0) g.add_edge(v, t.parent[v]);
    return tree_labels(RootedTree::from_graph(g, u))[u];
}

int tree_mh(const RootedTree& t) { return tree_labels(t)[t.root].mh(); }

int tree_mh(const Graph& tree) { return tree_mh(RootedTree::from_graph(tree, 0)); }

namespace {

Graph to_graph(const RootedTree& t) {
    Graph g(t.n());
    for (int v = 0; v < t.n(); ++v)
        if (t.parent[v] >= 0) g.add_edge(v, t.parent[v]);
    return g;
}

// Vertices of the component of g - removed that contains start.
std::vector<int> component_without(const Graph& g, int start, const VertexSet& removed) {
    for (const auto& c : components(g, g.all() - removed))
        if (c.test(start)) return members(c);
    return {};
}

int mh_of(const Graph& g, const std::vector<int>& vertices) {
    return tree_mh(induced_subgraph(g, vertices));
}

Strategy synthesize(const Graph& t);

// Path of the phase construction: every component off the path has monotone
// hunter number below h.
std::vector<int> phase_path(const Graph& t, int h) {
    int n = t.n();
    // heavy[v] = neighbours of v whose branch at v has mh >= h.
    std::vector<std::vector<int>> heavy(n);
    for (int v = 0; v < n; ++v) {
        VertexSet removed = make_set(n, {v});
        for (int u : t.neighbors(v))
            if (mh_of(t, component_without(t, u, removed)) >= h) heavy[v].push_back(u);
    }
    std::vector<int> x;
    for (int v = 0; v < n; ++v)
        if (heavy[v].size() == 2) x.push_back(v);
    std::vector<int> path;
    if (!x.empty()) {
        VertexSet in_x = make_set(n, x);
        int start = -1;
        for (int v : x) {
            int deg = 0;
            for (int u : t.neighbors(v))
                if (in_x.test(u)) ++deg;
            if (deg <= 1) {
                start = v;
                break;
            }
        }
        if (start < 0) throw InternalError("critical vertices do not induce a path");
        std::vector<int> order{start};
        for (int prev = -1, cur = start;;) {
            int next = -1;
            for (int u : t.neighbors(cur))
                if (in_x.test(u) && u != prev) next = u;
            if (next < 0) break;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        if (order.size() != x.size()) throw InternalError("critical vertices do not induce a path");
        auto other_heavy = [&](int v, int exclude) {
            for (int u : heavy[v])
                if (u != exclude) return u;
            throw InternalError("missing heavy branch");
        };
        int first = order.size() > 1 ? other_heavy(order.front(), order[1]) : heavy[order.front()][0];
        int last = order.size() > 1 ? other_heavy(order.back(), order[order.size() - 2]) : heavy[order.back()][1];
        path.push_back(first);
        path.insert(path.end(), order.begin(), order.end());
        path.push_back(last);
        return path;
    }
    path.push_back(0);
    for (int prev = -1, cur = 0;;) {
        int next = -1;
        for (int u : heavy[cur])
            if (u != prev) {
                next = u;
                break;
            }
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

Strategy synthesize(const Graph& t) {
    int n = t.n();
    if (n == 1) return make_strategy({{0}});
    int h = tree_mh(t);
    if (h == 1) {
        int c = 0;
        for (int v = 1; v < n; ++v)
            if (t.degree(v) > t.degree(c)) c = v;
        return make_strategy({{c}, {c}});
    }
    auto path = phase_path(t, h);
    VertexSet on_path = make_set(n, path);
    Strategy out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int v = path[i];
        bool any = false;
        for (int u : t.neighbors(v)) {
            if (on_path.test(u)) continue;
            auto comp = component_without(t, u, on_path);
            Strategy local = synthesize(induced_subgraph(t, comp));
            for (const auto& r : local.rounds) {
                std::vector<int> round{v};
                for (int x : r) round.push_back(comp[x]);
                out.push(std::move(round));
            }
            any = true;
        }
        if (!any) out.push({v});
        if (i + 1 < path.size()) out.push({v, path[i + 1]});
    }
    auto tr = trace(t, t.all(), out);
    int end = tr.effective_length();
    if (end < 0) throw InternalError("synthesized tree strategy does not win");
    out.rounds.resize(end);
    return out;
}

}  // namespace

Strategy tree_monotone_strategy(const Graph& tree) {
    if (!is_tree(tree)) throw BadParameters("graph is not a tree");
    return synthesize(tree);
}

Strategy tree_monotone_strategy(const RootedTree& t) { return synthesize(to_graph(t)); }

}  // namespace hunters
