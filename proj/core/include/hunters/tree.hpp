#pragma once

#include <string>
#include <vector>

#include "hunters/game.hpp"
#include "hunters/graph.hpp"

namespace hunters {

struct TreeLabel {
    std::vector<int> entries;
    bool starred = false;

    int mh() const { return entries.front(); }
    // True when m or m* appears anywhere.
    bool contains(int m) const;
    // m in pref(label) or the tail is m*.
    bool has_critical(int m) const;
    std::string str() const;

    friend bool operator==(const TreeLabel&, const TreeLabel&) = default;
};

TreeLabel parse_label(const std::string& text);

struct RootedTree {
    int root = 0;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;

    static RootedTree from_graph(const Graph& g, int root);
    int n() const { return static_cast<int>(parent.size()); }
    // Children before parents.
    std::vector<int> postorder() const;
};

bool is_tree(const Graph& g);
bool is_star(const Graph& g);

// One step of the bottom-up label computation: the label of a vertex from the
// labels of its children.
TreeLabel combine_labels(const std::vector<TreeLabel>& children);
std::vector<TreeLabel> tree_labels(const RootedTree& t);
TreeLabel tree_label(const RootedTree& t, int u);
int tree_mh(const RootedTree& t);
int tree_mh(const Graph& tree);

// Monotone winning strategy with exactly tree_mh hunters.
Strategy tree_monotone_strategy(const Graph& tree);
Strategy tree_monotone_strategy(const RootedTree& t);

}  // namespace hunters
