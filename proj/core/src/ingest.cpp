#include "rsiplan/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace rsiplan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCoincidentKm = 1e-9;
constexpr double kDistanceRegularizerKm = 0.01;

double alignment(const Cell& from, const Cell& to) {
    const double bearing = initial_bearing_deg(from.position(), to.position());
    const double delta = (bearing - from.bearing_deg) * kPi / 180.0;
    return std::max(0.0, std::cos(delta));
}

// Cost with co-sited cells treated as fully aligned; build_conflict_graph
// needs a total ranking while the public conflict_cost rejects d = 0.
double edge_cost(const Cell& a, const Cell& b, double distance_km) {
    const double align_sum =
        distance_km < kCoincidentKm ? 2.0 : alignment(a, b) + alignment(b, a);
    return align_sum / (distance_km + kDistanceRegularizerKm);
}

} // namespace

double conflict_cost(const Cell& a, const Cell& b) {
    const double d = great_circle_km(a.position(), b.position());
    if (d < kCoincidentKm) {
        throw std::invalid_argument("conflict_cost: coincident sites");
    }
    return edge_cost(a, b, d);
}

ConflictGraph build_conflict_graph(std::span<const Cell> cells, const IngestConfig& cfg) {
    if (cells.empty()) throw std::invalid_argument("build_conflict_graph: no cells");
    if (cfg.radius_km <= 0.0) throw std::invalid_argument("build_conflict_graph: radius_km must be positive");
    if (cfg.conflict_rank < 1) throw std::invalid_argument("build_conflict_graph: conflict_rank must be >= 1");

    const int n = static_cast<int>(cells.size());

    struct Candidate {
        double cost;
        double distance_km;
        int index;
    };

    std::map<std::pair<int, int>, double> selected; // (u < v) -> cost
    for (int i = 0; i < n; ++i) {
        std::vector<Candidate> candidates;
        for (int j = 0; j < n; ++j) {
            if (j == i || cells[j].channel != cells[i].channel) continue;
            const double d = great_circle_km(cells[i].position(), cells[j].position());
            if (d > cfg.radius_km) continue;
            const double c = edge_cost(cells[i], cells[j], d);
            candidates.push_back(Candidate{c, d, j});
        }
        std::sort(candidates.begin(), candidates.end(),
                  [&](const Candidate& a, const Candidate& b) {
                      if (a.cost != b.cost) return a.cost > b.cost;
                      if (a.distance_km != b.distance_km) return a.distance_km < b.distance_km;
                      return cells[a.index].cell_id < cells[b.index].cell_id;
                  });
        const std::size_t keep = std::min<std::size_t>(candidates.size(), cfg.conflict_rank);
        for (std::size_t k = 0; k < keep; ++k) {
            const int j = candidates[k].index;
            selected.emplace(std::minmax(i, j), candidates[k].cost);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(cells.size());
    for (const Cell& c : cells) labels.push_back(c.cell_id);

    std::vector<WeightedEdge> edges;
    edges.reserve(selected.size());
    for (const auto& [key, cost] : selected) {
        edges.push_back(WeightedEdge{key.first, key.second, cost});
    }
    return ConflictGraph(std::move(labels), std::move(edges));
}

} // namespace rsiplan
