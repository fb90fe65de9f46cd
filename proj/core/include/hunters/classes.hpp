#pragma once

#include "hunters/graph.hpp"
#include "hunters/solver.hpp"

namespace hunters {

SolveResult split_h(const Graph& g, const SplitPartition& sp);
SolveResult split_mh(const Graph& g, const SplitPartition& sp);
// On split graphs the hunter number equals the pathwidth.
int split_pathwidth_equals_h(const Graph& g, const SplitPartition& sp);

int interval_mh(const Graph& g);

int cograph_mh(const CoTree& t);
// Same value with the join children folded right to left.
int cograph_mh_fold_right(const CoTree& t);

enum class Family { path, cycle, clique, grid, hypercube };

int known_h(Family family, int a, int b = 0);

}  // namespace hunters
