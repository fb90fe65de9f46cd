#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hunters/game.hpp"
#include "hunters/graph.hpp"

namespace hunters {

enum class Mode { h, mh };

constexpr int kSolverMaxVertices = 64;

struct GameState {
    std::uint64_t z = 0;
    std::uint64_t cleared = 0;

    friend bool operator==(const GameState&, const GameState&) = default;
};

struct SearchOutcome {
    bool winning = false;
    Mode mode = Mode::h;
    int k = 0;
    int n = 0;
    // Shots along the discovered winning play, as bit masks.
    std::vector<std::uint64_t> shots;
    std::size_t states = 0;
};

struct Decision {
    bool yes = false;
    std::optional<Strategy> strategy;
    std::size_t states = 0;
};

struct SolveResult {
    int value = 0;
    Strategy strategy;
    bool certificate_checked = false;
};

struct SolveOptions {
    // Start the monotone search at the exact pathwidth when n is small enough.
    bool use_pathwidth_bound = true;
    // Skip moves that enlarge Z in monotone mode with W = V.
    bool prune_growing_z = true;
};

SearchOutcome search(const Graph& g, const VertexSet& w, int k, Mode mode, const SolveOptions& opt = {});
Strategy extract_strategy(const SearchOutcome& outcome);

Decision decide_h(const Graph& g, const VertexSet& w, int k);
Decision decide_mh(const Graph& g, const VertexSet& w, int k, const SolveOptions& opt = {});

SolveResult hunter_number(const Graph& g, const VertexSet& w);
SolveResult monotone_hunter_number(const Graph& g, const VertexSet& w, const SolveOptions& opt = {});

}  // namespace hunters
