#include "hunters/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace hunters {

std::string FamilyInstance::meta_value(const std::string& key) const {
    for (const auto& [k, v] : meta)
        if (k == key) return v;
    return {};
}

std::string format_meta(const FamilyInstance& f) {
    std::ostringstream out;
    for (const auto& [k, v] : f.meta) out << k << '=' << v << '\n';
    return out.str();
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParameters("cycles need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw BadParameters("grid sides must be positive");
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

Graph hypercube_graph(int dim) {
    if (dim < 0 || dim > 16) throw BadParameters("hypercube dimension out of range");
    Graph g(1 << dim);
    for (int v = 0; v < (1 << dim); ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
    return g;
}

namespace {

std::string join_ints(const std::vector<long long>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

long long even_ceil(long long x) { return x % 2 == 0 ? x : x + 1; }

// Tree with a distinguished root (id 0) and, for each child copy, the path of
// vertex ids from the root (exclusive) to the copy's root (inclusive).
struct Layout {
    std::vector<std::vector<int>> legs;
    std::vector<Layout> copies;

    void shift(int offset) {
        for (auto& leg : legs)
            for (int& v : leg) v += offset;
        for (auto& c : copies) c.shift(offset);
    }
};

struct Built {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    Strategy strategy;
    Layout layout;
    long long ell = 0;  // smallest even integer >= the strategy length bound
    std::vector<long long> p;
    std::vector<long long> phase_ends;
};

Strategy spider_strategy(int k, int q) {
    auto leg = [k](int i, int j) { return 1 + i * k + (j - 1); };
    Strategy s;
    int round = 0;
    auto emit = [&](std::vector<int> r) {
        s.push(std::move(r));
        ++round;
    };
    if (k % 2 == 0) {
        emit({0});
        for (int i = 0; i < q; ++i)
            for (int j = 1; j <= k; ++j) {
                if ((round + 1) % 2 == 1)
                    emit({0, leg(i, j)});
                else
                    emit({leg(i, j)});
            }
    } else {
        for (int i = 0; i < q; ++i) {
            emit({0});
            for (int j = 1; j <= k; ++j) {
                if ((round + 1) % 2 == 1)
                    emit({0, leg(i, j)});
                else
                    emit({leg(i, j)});
            }
        }
    }
    return s;
}

Built build_spider(int k, int q) {
    Built b;
    b.n = q * k + 1;
    for (int i = 0; i < q; ++i) {
        std::vector<int> leg;
        for (int j = 1; j <= k; ++j) {
            int v = 1 + i * k + (j - 1);
            b.edges.emplace_back(j == 1 ? 0 : v - 1, v);
            leg.push_back(v);
        }
        b.layout.legs.push_back(std::move(leg));
    }
    b.strategy = spider_strategy(k, q);
    b.ell = even_ceil(b.strategy.length());
    return b;
}

// Predicted (vertices, strategy length bound) of T_{i,q}.
std::pair<long long, long long> predict_T(int i, int q) {
    long long n = 3LL * q + 1, ell = even_ceil(4LL * q);
    for (int level = 2; level <= i; ++level) {
        long long sum = 0, weighted = 0, next_n = 1;
        for (int j = 1; j <= q; ++j) {
            long long p = j == 1 ? 2 : even_ceil(ell + sum);
            sum += p;
            weighted += j * p;
            next_n += p - 1;
            if (sum > (1LL << 40)) return {1LL << 40, 1LL << 40};
        }
        n = next_n + q * n;
        ell = even_ceil(q * ell + weighted);
    }
    return {n, ell};
}

Built build_T(int i, int q) {
    if (i == 1) return build_spider(3, q);
    Built sub = build_T(i - 1, q);
    Built b;
    b.n = 1;
    long long sum = 0;
    for (int j = 1; j <= q; ++j) {
        long long p = j == 1 ? 2 : even_ceil(sub.ell + sum);
        if (p % 2 != 0 || (j > 1 && p < sub.ell + sum)) throw InternalError("bad path length");
        b.p.push_back(p);
        sum += p;
    }
    std::vector<int> offsets;
    for (int j = 0; j < q; ++j) {
        std::vector<int> leg;
        int prev = 0;
        for (long long t = 1; t < b.p[j]; ++t) {
            int v = b.n++;
            b.edges.emplace_back(prev, v);
            leg.push_back(v);
            prev = v;
        }
        int offset = b.n;
        offsets.push_back(offset);
        b.edges.emplace_back(prev, offset);
        leg.push_back(offset);
        for (auto [u, v] : sub.edges) b.edges.emplace_back(u + offset, v + offset);
        b.n += sub.n;
        Layout copy = sub.layout;
        copy.shift(offset);
        b.layout.legs.push_back(std::move(leg));
        b.layout.copies.push_back(std::move(copy));
    }

    // Phase j: c shot alone, then the second hunter walks P^q, ..., P^j towards
    // the copy roots while c is shot on odd rounds, then the copy strategy runs
    // in T^j, then padding up to the phase length.
    const int c = 0;
    long long round = 0;
    auto emit = [&](std::vector<int> r) {
        b.strategy.push(std::move(r));
        ++round;
    };
    for (int j = 0; j < q; ++j) {
        long long start = round;
        if (start % 2 != 0) throw InternalError("phase starts after an odd round");
        long long walk = 0;
        for (int k = j; k < q; ++k) walk += b.p[k];
        emit({c});
        for (int k = q - 1; k >= j; --k) {
            const auto& leg = b.layout.legs[k];
            for (std::size_t t = 0; t < leg.size(); ++t) {
                bool last = k == j && t + 1 == leg.size();
                if (last) break;
                if ((round + 1) % 2 == 1)
                    emit({c, leg[t]});
                else
                    emit({leg[t]});
            }
        }
        if ((round + 1) % 2 != 1) throw InternalError("copy root is shot on an even round");
        std::vector<int> first{c};
        for (int v : sub.strategy.rounds.front()) first.push_back(v + offsets[j]);
        emit(first);
        for (std::size_t r = 1; r < sub.strategy.rounds.size(); ++r) {
            std::vector<int> mapped;
            for (int v : sub.strategy.rounds[r]) mapped.push_back(v + offsets[j]);
            emit(mapped);
        }
        long long phase_len = sub.ell + walk;
        if (round - start > phase_len) throw InternalError("phase longer than its bound");
        while (round - start < phase_len) emit({c});
        b.phase_ends.push_back(round);
    }
    long long weighted = 0;
    for (int j = 0; j < q; ++j) weighted += (j + 1) * b.p[j];
    b.ell = even_ceil(q * sub.ell + weighted);
    if (b.strategy.length() > b.ell) throw InternalError("strategy longer than its bound");
    return b;
}

void verify_instance(const FamilyInstance& f) {
    if (f.strategy && !is_winning(f.graph, f.start(), *f.strategy))
        throw InternalError("generated strategy does not win on its instance");
}

VertexSet red_class(const Graph& g) { return bipartition(g)->red; }

}  // namespace

FamilyInstance gen_spider(int k, int q) {
    if (k < 1 || q < 1) throw BadParameters("spider needs k >= 1 and q >= 1");
    Built b = build_spider(k, q);
    FamilyInstance f;
    f.graph = Graph::from_edges(b.n, b.edges);
    f.meta = {{"family", "spider"}, {"k", std::to_string(k)}, {"q", std::to_string(q)}, {"n", std::to_string(b.n)}};
    if (k >= 3 && q >= 6) {
        f.strategy = b.strategy;
        f.start_set = red_class(f.graph);
        f.meta.emplace_back("ell", std::to_string(b.ell));
        f.meta.emplace_back("length", std::to_string(b.strategy.length()));
    }
    verify_instance(f);
    return f;
}

FamilyInstance gen_T(int i, int q) {
    if (i < 1 || q < 6) throw BadParameters("T needs i >= 1 and q >= 6");
    auto [n, ell] = predict_T(i, q);
    if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(ell) > kReplayBudget)
        throw SizeLimitExceeded("T_{" + std::to_string(i) + "," + std::to_string(q) + "} would have " +
                                std::to_string(n) + " vertices and " + std::to_string(ell) + " rounds");
    Built b = build_T(i, q);
    if (b.n != n) throw InternalError("vertex count differs from the prediction");
    FamilyInstance f;
    f.graph = Graph::from_edges(b.n, b.edges);
    f.strategy = b.strategy;
    f.start_set = red_class(f.graph);
    f.meta = {{"family", "T"},
              {"i", std::to_string(i)},
              {"q", std::to_string(q)},
              {"n", std::to_string(b.n)},
              {"p", join_ints(b.p)},
              {"ell", std::to_string(b.ell)},
              {"length", std::to_string(b.strategy.length())},
              {"phase_ends", join_ints(b.phase_ends)}};
    verify_instance(f);
    return f;
}

Graph gen_ternary(int n) {
    if (n < 0 || n > 10) throw BadParameters("ternary depth out of range");
    std::vector<std::pair<int, int>> edges;
    int count = 0;
    std::function<int(int)> build = [&](int depth) {
        int root = count++;
        if (depth == 0) return root;
        for (int c = 0; c < 3; ++c) edges.emplace_back(root, build(depth - 1));
        return root;
    };
    build(n);
    return Graph::from_edges(count, edges);
}

FamilyInstance gen_split_matching(int a) {
    if (a < 2) throw BadParameters("split matching needs a >= 2");
    Graph g(2 * a);
    for (int u = 0; u < a; ++u) {
        for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
        g.add_edge(u, a + u);
    }
    FamilyInstance f;
    f.graph = std::move(g);
    f.meta = {{"family", "splitmatch"}, {"a", std::to_string(a)}, {"n", std::to_string(2 * a)},
              {"h", std::to_string(a - 1)}, {"mh", std::to_string(a)}};
    return f;
}

FamilyInstance gen_cograph_gap(int a) {
    if (a < 1) throw BadParameters("cograph gap needs a >= 1");
    // A = {0..2a-1} with clique {0..a-1}; B = {2a..4a-1} with clique {2a..3a-1}.
    Graph g(4 * a);
    for (int base : {0, 2 * a})
        for (int u = base; u < base + a; ++u)
            for (int v = u + 1; v < base + a; ++v) g.add_edge(u, v);
    for (int u = 0; u < 2 * a; ++u)
        for (int v = 2 * a; v < 4 * a; ++v) g.add_edge(u, v);
    std::vector<int> side_a(2 * a), clique_a(a), clique_b(a);
    std::iota(side_a.begin(), side_a.end(), 0);
    std::iota(clique_a.begin(), clique_a.end(), 0);
    std::iota(clique_b.begin(), clique_b.end(), 2 * a);
    std::vector<int> both = clique_a;
    both.insert(both.end(), clique_b.begin(), clique_b.end());
    FamilyInstance f;
    f.graph = std::move(g);
    f.strategy = make_strategy({side_a, both, clique_b, side_a});
    f.meta = {{"family", "cographgap"}, {"a", std::to_string(a)}, {"n", std::to_string(4 * a)},
              {"h", std::to_string(2 * a)}, {"mh", std::to_string(3 * a - 1)}};
    verify_instance(f);
    return f;
}

FamilyInstance subdivide_for_two_hunters(const Graph& tree) {
    if (tree.n() < 1 || tree.m() != tree.n() - 1 || !is_connected(tree)) throw BadParameters("input is not a tree");
    int n = tree.n();
    auto bfs = [&](int s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : tree.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        return dist;
    };
    int root = 0, ecc = n;
    for (int v = 0; v < n; ++v) {
        auto d = bfs(v);
        int e = *std::max_element(d.begin(), d.end());
        if (e < ecc) {
            ecc = e;
            root = v;
        }
    }
    FamilyInstance f;
    if (n == 1) {
        f.graph = tree;
        f.strategy = make_strategy({{0}});
        f.meta = {{"family", "subdivision"}, {"i", "0"}, {"q", "0"}, {"n", "1"}};
        return f;
    }
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, tree.degree(v));
    int q = std::max(6, maxdeg);
    auto [pn, pell] = predict_T(ecc, q);
    if (static_cast<std::uint64_t>(pn) * static_cast<std::uint64_t>(pell) > kReplayBudget)
        throw SizeLimitExceeded("host tree T_{" + std::to_string(ecc) + "," + std::to_string(q) + "} is too large");
    Built host = build_T(ecc, q);
    Graph big = Graph::from_edges(host.n, host.edges);

    VertexSet keep(host.n);
    std::vector<int> image(n, -1);
    std::function<void(int, int, int, const Layout&)> embed = [&](int v, int parent, int at, const Layout& lay) {
        image[v] = at;
        keep.set(at);
        int slot = 0;
        for (int w : tree.neighbors(v)) {
            if (w == parent) continue;
            const auto& leg = lay.legs.at(slot);
            for (int x : leg) keep.set(x);
            if (lay.copies.empty())
                image[w] = leg.back(), keep.set(leg.back());
            else
                embed(w, v, leg.back(), lay.copies.at(slot));
            ++slot;
        }
    };
    embed(root, -1, 0, host.layout);

    auto kept = members(keep);
    f.graph = induced_subgraph(big, kept);
    f.strategy = restrict_strategy(host.strategy, big, keep);
    f.start_set = red_class(f.graph);
    std::vector<long long> images;
    std::vector<int> index(host.n, -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) index[kept[i]] = i;
    for (int v = 0; v < n; ++v) images.push_back(index[image[v]]);
    f.meta = {{"family", "subdivision"},
              {"root", std::to_string(root)},
              {"i", std::to_string(ecc)},
              {"q", std::to_string(q)},
              {"host_n", std::to_string(host.n)},
              {"n", std::to_string(f.graph.n())},
              {"images", join_ints(images)},
              {"length", std::to_string(f.strategy->length())}};
    verify_instance(f);
    return f;
}

Graph random_tree_from_pruefer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int x : code) {
        if (x < 0 || x >= n) throw BadParameters("Pruefer code entry out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    Graph g(n);
    for (int x : code) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    g.add_edge(u, leaves.top());
    return g;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph random_tree(Rng& rng, int n) {
    if (n == 1) return Graph(1);
    std::vector<int> code(n - 2);
    for (int& x : code) x = uniform(rng, 0, n - 1);
    return random_tree_from_pruefer(code);
}

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph random_split(Rng& rng, int n) {
    int c = uniform(rng, 1, n);
    if (n > 1 && c == 1) c = 2;
    Graph g(n);
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
    for (int x = c; x < n; ++x) {
        std::vector<int> nb;
        for (int u = 0; u < c; ++u)
            if (coin(rng, 0.5)) nb.push_back(u);
        if (nb.empty()) nb.push_back(uniform(rng, 0, c - 1));
        for (int u : nb) g.add_edge(u, x);
    }
    return relabel(g, rng);
}

void random_cotree_edges(Rng& rng, std::vector<int> leaves, bool join, std::vector<std::pair<int, int>>& edges) {
    if (leaves.size() == 1) return;
    int parts = uniform(rng, 2, std::min<int>(3, static_cast<int>(leaves.size())));
    std::shuffle(leaves.begin(), leaves.end(), rng);
    std::vector<std::size_t> cuts;
    while (static_cast<int>(cuts.size()) < parts - 1) {
        std::size_t cut = uniform(rng, 1, static_cast<int>(leaves.size()) - 1);
        if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(leaves.size());
    std::vector<std::vector<int>> groups;
    std::size_t from = 0;
    for (std::size_t cut : cuts) {
        groups.emplace_back(leaves.begin() + from, leaves.begin() + cut);
        from = cut;
    }
    if (join)
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t j = i + 1; j < groups.size(); ++j)
                for (int u : groups[i])
                    for (int v : groups[j]) edges.emplace_back(u, v);
    for (auto& grp : groups) random_cotree_edges(rng, grp, !join ? true : coin(rng, 0.3), edges);
}

Graph random_cograph(Rng& rng, int n) {
    std::vector<int> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 0);
    std::vector<std::pair<int, int>> edges;
    random_cotree_edges(rng, leaves, true, edges);
    return Graph::from_edges(n, edges);
}

Graph random_connected(Rng& rng, int n, double p) {
    for (;;) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng, p)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

Graph random_interval(Rng& rng, int n) {
    for (;;) {
        std::vector<std::pair<int, int>> iv(n);
        for (auto& [l, r] : iv) {
            l = uniform(rng, 0, 2 * n);
            r = l + uniform(rng, 0, std::max(1, n / 2));
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

Graph random_bipartite(Rng& rng, int n) {
    Graph t = random_tree(rng, n);
    if (n == 1) return t;
    auto bip = bipartition(t);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bip->red.test(u) != bip->red.test(v) && !t.adjacent(u, v) && coin(rng, 0.25)) t.add_edge(u, v);
    return t;
}

}  // namespace

Graph random_instance(RandomKind kind, int n, std::uint64_t seed) {
    if (n < 1) throw BadParameters("random instance needs n >= 1");
    Rng rng(seed);
    switch (kind) {
        case RandomKind::tree:
            return random_tree(rng, n);
        case RandomKind::split:
            return random_split(rng, n);
        case RandomKind::cograph:
            return random_cograph(rng, n);
        case RandomKind::connected:
            return random_connected(rng, n, 0.4);
        case RandomKind::interval:
            return random_interval(rng, n);
        case RandomKind::bipartite:
            return random_bipartite(rng, n);
    }
    throw BadParameters("unknown random kind");
}

}  // namespace hunters
