#include "rsiplan/conflict_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rsiplan {

ConflictGraph::ConflictGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges)
    : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());

    std::unordered_set<std::string_view> unique_labels;
    for (const std::string& label : labels_) {
        if (!unique_labels.insert(label).second) {
            throw std::invalid_argument("ConflictGraph: duplicate label '" + label + "'");
        }
    }

    for (WeightedEdge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("ConflictGraph: self-loop");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::invalid_argument("ConflictGraph: edge endpoint out of range");
        }
        if (e.weight < 0.0) throw std::invalid_argument("ConflictGraph: negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw std::invalid_argument("ConflictGraph: parallel edge");
        }
    }

    adjacency_.assign(n, {});
    for (const WeightedEdge& e : edges) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (std::vector<int>& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    edges_ = std::move(edges);
}

std::span<const int> ConflictGraph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

int ConflictGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

int ConflictGraph::max_degree() const {
    int best = 0;
    for (const std::vector<int>& nbrs : adjacency_) {
        best = std::max(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

bool ConflictGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::vector<int>& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::string& ConflictGraph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

void ConflictGraph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) {
        throw std::out_of_range("ConflictGraph: vertex index " + std::to_string(v) +
                                " out of range [0, " + std::to_string(num_vertices()) + ")");
    }
}

ConflictGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels;
    labels.reserve(num_vertices);
    for (int v = 0; v < num_vertices; ++v) {
        labels.push_back("v" + std::to_string(v));
    }
    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        weighted.push_back(WeightedEdge{u, v, 1.0});
    }
    return ConflictGraph(std::move(labels), std::move(weighted));
}

} // namespace rsiplan
