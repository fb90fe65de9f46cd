#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hunters/graph.hpp"

namespace hunters {

struct Strategy {
    // Each round is a sorted list of shot vertices.
    std::vector<std::vector<int>> rounds;

    int length() const { return static_cast<int>(rounds.size()); }
    int hunters_used() const;
    void push(std::vector<int> round);
    void append(const Strategy& other);

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

Strategy make_strategy(std::vector<std::vector<int>> rounds);
VertexSet round_set(const Graph& g, const std::vector<int>& round);
// Checks non-empty rounds and ids below n.
void validate_strategy(const Graph& g, const Strategy& s);

struct Trace {
    VertexSet start;
    std::vector<VertexSet> z;

    bool winning() const { return z.back().none(); }
    // First round after which nothing is contaminated, or -1.
    int effective_length() const;
};

struct Violation {
    int vertex;
    int cleared_round;
    int recontaminated_round;
};

struct MonotoneReport {
    bool monotone = true;
    std::optional<Violation> violation;
};

VertexSet advance(const Graph& g, const VertexSet& z, const VertexSet& s);
Trace trace(const Graph& g, const VertexSet& w, const Strategy& strat);
bool is_winning(const Graph& g, const VertexSet& w, const Strategy& strat);
bool is_parsimonious(const Graph& g, const VertexSet& w, const Strategy& strat);

// Rabbit walk r_0..r_l dodging every shot, when the strategy is not winning.
std::optional<std::vector<int>> escape_witness(const Graph& g, const VertexSet& w, const Strategy& strat);
bool is_valid_escape(const Graph& g, const VertexSet& w, const Strategy& strat, const std::vector<int>& walk);

Strategy make_parsimonious(const Graph& g, const VertexSet& w, const Strategy& strat);

// Round i is 1-based.
bool cleared_at(const Graph& g, const VertexSet& w, const Strategy& strat, int v, int i);
MonotoneReport check_monotone(const Graph& g, const VertexSet& w, const Strategy& strat);
bool is_monotone(const Graph& g, const VertexSet& w, const Strategy& strat);

// Strategy for the subgraph induced by h_vertices, in the ids of that subgraph
// (new id i is the i-th smallest member of h_vertices).
Strategy restrict_strategy(const Strategy& strat, const Graph& g, const VertexSet& h_vertices);

Strategy extend_red_to_full(const Graph& g, const Bipartition& bip, const Strategy& strat);

std::string format_strategy(const Strategy& s);
Strategy parse_strategy(const std::string& text);
std::string format_trace(const Trace& t);

}  // namespace hunters
