#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hunters/game.hpp"
#include "hunters/graph.hpp"

namespace hunters {

struct FamilyInstance {
    Graph graph;
    std::optional<Strategy> strategy;
    std::optional<VertexSet> start_set;
    std::vector<std::pair<std::string, std::string>> meta;

    VertexSet start() const { return start_set ? *start_set : graph.all(); }
    std::string meta_value(const std::string& key) const;
};

std::string format_meta(const FamilyInstance& f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph hypercube_graph(int dim);

// Upper limit on vertices times strategy rounds for generated replays.
constexpr std::uint64_t kReplayBudget = 200'000'000;

FamilyInstance gen_spider(int k, int q);
FamilyInstance gen_T(int i, int q);
Graph gen_ternary(int n);
FamilyInstance gen_split_matching(int a);
FamilyInstance gen_cograph_gap(int a);
FamilyInstance subdivide_for_two_hunters(const Graph& tree);

enum class RandomKind { tree, split, cograph, connected, interval, bipartite };

Graph random_instance(RandomKind kind, int n, std::uint64_t seed);
Graph random_tree_from_pruefer(const std::vector<int>& code);

}  // namespace hunters
