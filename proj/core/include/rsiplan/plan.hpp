#pragma once

#include <span>
#include <string>
#include <vector>

#include "rsiplan/coloring.hpp"
#include "rsiplan/conflict_graph.hpp"

namespace rsiplan {

// The deployment artifact: every cell mapped to its assigned RSI, drawn from
// an ordered palette of distinct RSIs.
struct PlanEntry {
    std::string cell_id;
    int color = 0;
    int rsi = 0;

    friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

struct Plan {
    std::vector<PlanEntry> entries; // one per vertex, in vertex order
    std::vector<int> palette;
};

// Maps color index i to rsi_palette[i]. Requires a legal coloring, a palette
// of distinct RSIs in [0, 837] covering colors_used; throws otherwise.
Plan make_plan(const ConflictGraph& g, const Coloring& c, std::span<const int> rsi_palette);

// CSV per the coloring export schema: `cell_id,color,rsi`.
std::string plan_to_csv(const Plan& plan);

} // namespace rsiplan
