#pragma once

#include <span>

#include "rsiplan/cell.hpp"
#include "rsiplan/conflict_graph.hpp"

namespace rsiplan {

// Interference cost of an RSI conflict between two cells:
//
//   cost = (align(a->b) + align(b->a)) / (d_km + 0.01)
//   align(x->y) = max(0, cos(initial_bearing(x,y) - bearing_x))
//
// Symmetric, non-negative, strictly decreasing in distance for fixed
// alignments. Throws std::invalid_argument for coincident sites.
double conflict_cost(const Cell& a, const Cell& b);

// Builds the undirected conflict graph: each cell ranks the same-channel
// cells within cfg.radius_km by conflict cost (ties: smaller distance, then
// lexicographic cell_id) and keeps the top cfg.conflict_rank; an edge exists
// when either endpoint selected the other. Vertex indices follow the input
// order of `cells`. Co-sited same-channel cells (zero distance) are ranked
// with both alignments at the maximum, so they conflict first.
ConflictGraph build_conflict_graph(std::span<const Cell> cells, const IngestConfig& cfg);

} // namespace rsiplan
