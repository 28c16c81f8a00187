#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsiplan/cell.hpp"
#include "rsiplan/samplers.hpp"

namespace rsiplan {

struct BenchmarkRecord {
    std::string algorithm;
    int conflict_rank = 0;
    int run_index = 0;
    std::uint64_t seed = 0;
    int colors_used = 0;
    double wall_time_ms = 0.0;
    bool legal = false;
    std::optional<double> energy; // QUBO path only

    friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

struct BenchConfig {
    double radius_km = 5.0;
    std::vector<int> ranks;
    std::vector<std::string> algorithms; // rs|cs|is|lf|ds|sa|tabu|hybrid|exact
    int runs = 1;
    std::uint64_t base_seed = 0;
    SolverParams solver; // QUBO paths
    double penalty_a = 1.0;
    double penalty_b = 1.0;
};

// Per-run seed: base_seed + hash(algorithm, rank, run).
std::uint64_t benchmark_seed(std::uint64_t base_seed, std::string_view algorithm, int rank,
                             int run);

// Sweeps conflict ranks: the graph is built once per rank, then every
// algorithm x run executes with its derived seed. Heuristics color directly;
// QUBO solvers run the descending min-colors search from DSATUR's count.
// Timing wraps the solve call only. Illegal or infeasible results are kept
// and flagged legal=false. Records come back sorted by (algorithm, rank, run).
std::vector<BenchmarkRecord> run_benchmark(std::span<const Cell> cells, const BenchConfig& cfg);

// Header: algorithm,conflict_rank,run,seed,colors,wall_ms,legal,energy
std::string emit_csv(std::span<const BenchmarkRecord> records);
std::vector<BenchmarkRecord> parse_benchmark_csv(std::string_view text);

enum class PlotKind { kColors, kRuntime };

// Self-contained SVG line chart: x = conflict rank, y = mean colors or mean
// wall time over the legal records, one series per algorithm, with legend.
// The runtime plot switches to a log y-axis when max/min > 100. Byte-for-byte
// deterministic in the records. Throws std::invalid_argument when empty.
std::string emit_plot(std::span<const BenchmarkRecord> records, PlotKind kind);

bool is_algorithm_name(std::string_view name);

} // namespace rsiplan
