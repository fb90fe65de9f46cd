#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hunters/errors.hpp"

namespace hunters {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

VertexSet make_set(int n, const std::vector<int>& members = {});
std::vector<int> members(const VertexSet& s);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Throws ParseError on loops, duplicates and out-of-range ids.
    void add_edge(int u, int v);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;
    VertexSet none() const { return VertexSet(n()); }
    VertexSet all() const;
    VertexSet neighborhood(int v) const;
    // Union of N(v) over v in s.
    VertexSet neighborhood(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& vertices);
void require_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexSet& vertices);

// Induced subgraph on the sorted vertex list; new id i is old id vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph complement(const Graph& g);

struct Bipartition {
    VertexSet red;
    VertexSet white;
};

std::optional<Bipartition> bipartition(const Graph& g);

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

bool is_valid_split_partition(const Graph& g, const SplitPartition& sp);
std::optional<SplitPartition> recognize_split(const Graph& g);

struct CoTree {
    enum class Kind { leaf, union_node, join_node };
    Kind kind = Kind::leaf;
    int vertex = -1;
    std::vector<CoTree> children;

    int size() const;
};

std::optional<CoTree> recognize_cograph(const Graph& g);
Graph evaluate_cotree(const CoTree& t, int n);

bool is_chordal(const Graph& g);
bool has_asteroidal_triple(const Graph& g);
// Maximal cliques of g when g is an interval graph, nullopt otherwise.
std::optional<std::vector<VertexSet>> recognize_interval(const Graph& g);

std::vector<VertexSet> maximal_cliques(const Graph& g);
int omega(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_simplicial(const Graph& g, int v);
int min_degree(const Graph& g);

enum class CoverMode { exact, approx2 };

VertexSet vertex_cover(const Graph& g, CoverMode mode);
bool is_vertex_cover(const Graph& g, const VertexSet& u);

struct PathDecomposition {
    std::vector<VertexSet> bags;
    int width() const;
};

struct PathwidthResult {
    int width = 0;
    std::vector<int> order;
    PathDecomposition decomposition;
};

constexpr int kPathwidthMaxVertices = 22;
constexpr int kVertexCoverExactMaxVertices = 25;

PathwidthResult pathwidth_exact(const Graph& g);
bool is_valid_path_decomposition(const Graph& g, const PathDecomposition& pd);
// Max boundary size of the prefixes of an ordering.
int vertex_separation(const Graph& g, const std::vector<int>& order);

}  // namespace hunters
