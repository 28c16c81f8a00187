#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsiplan/conflict_graph.hpp"

namespace rsiplan {

// A partial or total assignment vertex -> color index in [0, palette_size).
// Unassigned is an explicit absent value so that a partial result can never
// masquerade as a legal coloring.
class Coloring {
public:
    Coloring() = default;
    Coloring(int num_vertices, int palette_size);

    int num_vertices() const { return static_cast<int>(assignment_.size()); }
    int palette_size() const { return palette_size_; }

    std::optional<int> color(int v) const;
    void assign(int v, int color);
    void clear(int v);

    bool total() const;

    // Same assignment with a larger palette (needed to encode into a QUBO
    // built with more colors). Throws if any assigned color would not fit.
    Coloring with_palette(int palette_size) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    void check_vertex(int v) const;

    std::vector<std::optional<int>> assignment_;
    int palette_size_ = 0;
};

// Number of edges whose endpoints are both assigned and share a color.
int count_conflicts(const ConflictGraph& g, const Coloring& c);

// True iff the assignment is total and conflict-free.
bool is_legal(const ConflictGraph& g, const Coloring& c);

// Number of distinct colors actually assigned.
int colors_used(const Coloring& c);

// CSV export `cell_id,color,rsi`; the rsi column is palette[color] when a
// palette is supplied and empty otherwise.
std::string coloring_to_csv(const ConflictGraph& g, const Coloring& c,
                            std::span<const int> rsi_palette = {});

} // namespace rsiplan
