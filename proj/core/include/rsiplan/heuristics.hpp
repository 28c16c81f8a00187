#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rsiplan/coloring.hpp"
#include "rsiplan/conflict_graph.hpp"

namespace rsiplan {

// A visiting order for sequential coloring; validated to be a permutation of
// 0..n-1 at construction.
class Sequence {
public:
    Sequence(std::vector<int> order, int num_vertices);

    static Sequence identity(int num_vertices);

    std::span<const int> order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }

private:
    std::vector<int> order_;
};

// Sequential coloring core: vertices are processed in the given order and
// each receives the smallest color absent from its already-colored neighbors.
// The result is legal with palette_size == colors_used <= max_degree + 1.
Coloring greedy_color(const ConflictGraph& g, const Sequence& s);

// RS: greedy over a uniformly shuffled vertex order. Deterministic per seed.
Coloring random_sequential(const ConflictGraph& g, std::uint64_t seed);

// CS: per connected component (components in index order), a seeded random
// start, then a breadth-first wavefront so only vertices adjacent to the
// colored set are candidates; discovery within a layer ascends by index.
Coloring connected_sequential(const ConflictGraph& g, std::uint64_t seed);

// IS: repeatedly assign the next color to a greedily built maximal
// independent set of the remaining subgraph (ascending degree, ties by index).
Coloring independent_set_color(const ConflictGraph& g);

// LF: greedy over vertices sorted by degree descending, ties by index.
Coloring largest_first(const ConflictGraph& g);

// DS: repeatedly color the vertex with maximum saturation (distinct colors in
// its neighborhood); ties by more uncolored neighbors, then lower index.
Coloring dsatur(const ConflictGraph& g);

inline constexpr std::string_view kHeuristicNames[] = {"rs", "cs", "is", "lf", "ds"};

bool is_heuristic_name(std::string_view name);

// Dispatch by CLI name; deterministic algorithms ignore the seed.
// Throws std::invalid_argument for unknown names.
Coloring run_heuristic(std::string_view name, const ConflictGraph& g, std::uint64_t seed);

} // namespace rsiplan
