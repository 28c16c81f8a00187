#include "rsiplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>

#include "rsiplan/heuristics.hpp"
#include "rsiplan/ingest.hpp"
#include "rsiplan/min_colors.hpp"
#include "rsiplan/rng.hpp"
#include "text_format.hpp"

namespace rsiplan {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view kCsvHeader =
    "algorithm,conflict_rank,run,seed,colors,wall_ms,legal,energy";

BenchmarkRecord run_one(const ConflictGraph& g, const std::string& algorithm, int rank,
                        int run, const BenchConfig& cfg) {
    BenchmarkRecord rec;
    rec.algorithm = algorithm;
    rec.conflict_rank = rank;
    rec.run_index = run;
    rec.seed = benchmark_seed(cfg.base_seed, algorithm, rank, run);

    if (is_heuristic_name(algorithm)) {
        const auto start = Clock::now();
        const Coloring c = run_heuristic(algorithm, g, rec.seed);
        rec.wall_time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        rec.colors_used = colors_used(c);
        rec.legal = is_legal(g, c);
        return rec;
    }

    // QUBO path: DSATUR supplies the known-feasible starting palette (untimed).
    // A solver can still miss at that palette size; retry from a slightly
    // larger start before flagging the record as a failure.
    const int c_start = std::max(1, colors_used(dsatur(g)));
    SolverParams params = cfg.solver;
    params.seed = rec.seed;
    const QuboSolver solver = make_solver(algorithm);

    const auto start = Clock::now();
    rec.legal = false;
    for (int bump = 0; bump <= 2; ++bump) {
        try {
            const MinColorsResult result =
                min_colors_search(g, solver, params, c_start + bump, cfg.penalty_a, cfg.penalty_b);
            rec.colors_used = result.num_colors;
            rec.legal = is_legal(g, result.coloring);
            rec.energy = result.final_energy;
            break;
        } catch (const InfeasibleError&) {
            rec.colors_used = 0;
        }
    }
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
}

} // namespace

std::uint64_t benchmark_seed(std::uint64_t base_seed, std::string_view algorithm, int rank,
                             int run) {
    const std::uint64_t h = combine_seed(
        combine_seed(fnv1a64(algorithm), static_cast<std::uint64_t>(rank)),
        static_cast<std::uint64_t>(run));
    return base_seed + h;
}

std::vector<BenchmarkRecord> run_benchmark(std::span<const Cell> cells, const BenchConfig& cfg) {
    if (cells.empty()) throw std::invalid_argument("run_benchmark: zero cells");
    if (cfg.runs < 1) throw std::invalid_argument("run_benchmark: runs must be >= 1");
    if (cfg.ranks.empty()) throw std::invalid_argument("run_benchmark: no conflict ranks");
    for (const std::string& name : cfg.algorithms) {
        if (!is_algorithm_name(name)) {
            throw std::invalid_argument("run_benchmark: unknown algorithm '" + name + "'");
        }
    }
    if (cfg.algorithms.empty()) throw std::invalid_argument("run_benchmark: no algorithms");

    std::vector<BenchmarkRecord> records;
    for (int rank : cfg.ranks) {
        const ConflictGraph g =
            build_conflict_graph(cells, IngestConfig{cfg.radius_km, rank});
        for (const std::string& algorithm : cfg.algorithms) {
            for (int run = 0; run < cfg.runs; ++run) {
                records.push_back(run_one(g, algorithm, rank, run, cfg));
            }
        }
    }
    std::sort(records.begin(), records.end(),
              [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
                  return std::tie(a.algorithm, a.conflict_rank, a.run_index) <
                         std::tie(b.algorithm, b.conflict_rank, b.run_index);
              });
    return records;
}

std::string emit_csv(std::span<const BenchmarkRecord> records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const BenchmarkRecord& r : records) {
        out += r.algorithm;
        out += ',';
        out += std::to_string(r.conflict_rank);
        out += ',';
        out += std::to_string(r.run_index);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.colors_used);
        out += ',';
        out += detail::format_double(r.wall_time_ms);
        out += ',';
        out += r.legal ? "true" : "false";
        out += ',';
        if (r.energy) out += detail::format_double(*r.energy);
        out += '\n';
    }
    return out;
}

std::vector<BenchmarkRecord> parse_benchmark_csv(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || lines[0] != kCsvHeader) {
        throw std::runtime_error("parse_benchmark_csv: bad header");
    }
    std::vector<BenchmarkRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        const auto f = detail::split_fields(lines[i]);
        if (f.size() != 8) {
            throw std::runtime_error("parse_benchmark_csv: bad row on line " + std::to_string(i + 1));
        }
        BenchmarkRecord r;
        r.algorithm = std::string(f[0]);
        std::int64_t rank = 0;
        std::int64_t run = 0;
        std::int64_t colors = 0;
        std::uint64_t seed = 0;
        if (!detail::parse_i64(f[1], rank) || !detail::parse_i64(f[2], run) ||
            !detail::parse_u64(f[3], seed) || !detail::parse_i64(f[4], colors) ||
            !detail::parse_double(f[5], r.wall_time_ms) || (f[6] != "true" && f[6] != "false")) {
            throw std::runtime_error("parse_benchmark_csv: bad field on line " + std::to_string(i + 1));
        }
        r.conflict_rank = static_cast<int>(rank);
        r.run_index = static_cast<int>(run);
        r.seed = seed;
        r.colors_used = static_cast<int>(colors);
        r.legal = f[6] == "true";
        if (!f[7].empty()) {
            double e = 0.0;
            if (!detail::parse_double(f[7], e)) {
                throw std::runtime_error("parse_benchmark_csv: bad energy on line " + std::to_string(i + 1));
            }
            r.energy = e;
        }
        records.push_back(std::move(r));
    }
    return records;
}

bool is_algorithm_name(std::string_view name) {
    return is_heuristic_name(name) || is_solver_name(name);
}

} // namespace rsiplan
