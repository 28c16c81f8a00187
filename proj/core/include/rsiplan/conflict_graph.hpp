#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsiplan {

struct WeightedEdge {
    int u = 0;
    int v = 0; // canonical form keeps u < v
    double weight = 1.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected graph over dense vertex indices, with a side table of
// cell ids. Immutable after construction; safe to share across threads.
class ConflictGraph {
public:
    ConflictGraph() = default;

    // Edges may be given in either endpoint order; they are canonicalized and
    // sorted. Self-loops, duplicate edges, duplicate labels and negative
    // weights are rejected.
    ConflictGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const { return edges_.size(); }

    // Neighbor indices, sorted ascending.
    std::span<const int> neighbors(int v) const;

    // Number of edges incident to v. Throws std::out_of_range on a bad index.
    int degree(int v) const;

    int max_degree() const;

    bool has_edge(int u, int v) const;

    const std::string& label(int v) const;

    // Edges sorted by (u, v) with u < v.
    const std::vector<WeightedEdge>& edges() const { return edges_; }

private:
    void check_vertex(int v) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<WeightedEdge> edges_;
};

// Convenience constructor for tests and benchmarks: vertices 0..n-1 labeled
// "v0".."v<n-1>", unit weights.
ConflictGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

} // namespace rsiplan
