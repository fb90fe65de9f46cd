#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hunters/graph.hpp"
#include "hunters/solver.hpp"

namespace hunters {

// Vertices outside the cover u, grouped by their exact neighbourhood.
using NeighborhoodClasses = std::map<std::vector<int>, std::vector<int>>;

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& u);

struct KernelResult {
    bool trivially_yes = false;
    Graph reduced;
    // kept[new id] = old id.
    std::vector<int> kept;
    int t = 0;
    int k = 0;
    std::uint64_t size_bound = 0;
    int removed = 0;
};

// 4^t (t+1) + 2t, saturating at the largest uint64 value.
std::uint64_t kernel_size_bound(int t);

KernelResult kernelize(const Graph& g, int k, const VertexSet& u);
bool fpt_decide(const Graph& g, int k, Mode mode);
std::string format_kernel_map(const KernelResult& r);

}  // namespace hunters
