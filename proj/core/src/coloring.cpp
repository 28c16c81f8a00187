#include "rsiplan/coloring.hpp"

#include <set>
#include <stdexcept>

namespace rsiplan {

Coloring::Coloring(int num_vertices, int palette_size) : palette_size_(palette_size) {
    if (num_vertices < 0 || palette_size < 0) {
        throw std::invalid_argument("Coloring: negative dimensions");
    }
    assignment_.assign(num_vertices, std::nullopt);
}

std::optional<int> Coloring::color(int v) const {
    check_vertex(v);
    return assignment_[v];
}

void Coloring::assign(int v, int color) {
    check_vertex(v);
    if (color < 0 || color >= palette_size_) {
        throw std::invalid_argument("Coloring: color " + std::to_string(color) +
                                    " outside palette of size " + std::to_string(palette_size_));
    }
    assignment_[v] = color;
}

void Coloring::clear(int v) {
    check_vertex(v);
    assignment_[v] = std::nullopt;
}

bool Coloring::total() const {
    for (const auto& c : assignment_) {
        if (!c) return false;
    }
    return true;
}

Coloring Coloring::with_palette(int palette_size) const {
    Coloring out(num_vertices(), palette_size);
    for (int v = 0; v < num_vertices(); ++v) {
        if (assignment_[v]) out.assign(v, *assignment_[v]);
    }
    return out;
}

void Coloring::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) {
        throw std::out_of_range("Coloring: vertex index out of range");
    }
}

int count_conflicts(const ConflictGraph& g, const Coloring& c) {
    if (c.num_vertices() != g.num_vertices()) {
        throw std::invalid_argument("count_conflicts: coloring size mismatch");
    }
    int conflicts = 0;
    for (const WeightedEdge& e : g.edges()) {
        const auto cu = c.color(e.u);
        const auto cv = c.color(e.v);
        if (cu && cv && *cu == *cv) ++conflicts;
    }
    return conflicts;
}

bool is_legal(const ConflictGraph& g, const Coloring& c) {
    if (c.num_vertices() != g.num_vertices()) {
        throw std::invalid_argument("is_legal: coloring size mismatch");
    }
    return c.total() && count_conflicts(g, c) == 0;
}

int colors_used(const Coloring& c) {
    std::set<int> used;
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (const auto col = c.color(v)) used.insert(*col);
    }
    return static_cast<int>(used.size());
}

std::string coloring_to_csv(const ConflictGraph& g, const Coloring& c,
                            std::span<const int> rsi_palette) {
    if (c.num_vertices() != g.num_vertices()) {
        throw std::invalid_argument("coloring_to_csv: coloring size mismatch");
    }
    std::string out = "cell_id,color,rsi\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out += g.label(v);
        out += ',';
        const auto col = c.color(v);
        if (col) {
            out += std::to_string(*col);
            out += ',';
            if (!rsi_palette.empty()) {
                if (*col >= static_cast<int>(rsi_palette.size())) {
                    throw std::invalid_argument("coloring_to_csv: palette smaller than colors used");
                }
                out += std::to_string(rsi_palette[*col]);
            }
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

} // namespace rsiplan
