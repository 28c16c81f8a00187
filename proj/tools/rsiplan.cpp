// rsiplan: conflict-graph construction, RSI coloring, and benchmark harness
// over cell-site CSV exports.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsiplan/bench.hpp"
#include "rsiplan/heuristics.hpp"
#include "rsiplan/ingest.hpp"
#include "rsiplan/min_colors.hpp"
#include "rsiplan/plan.hpp"
#include "rsiplan/synthetic.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

// "1..6", "1,3,5" or "4"
std::vector<int> parse_ranks(const std::string& spec) {
    std::vector<int> ranks;
    const auto range_pos = spec.find("..");
    if (range_pos != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, range_pos));
        const int hi = std::stoi(spec.substr(range_pos + 2));
        if (lo < 1 || hi < lo) throw std::runtime_error("bad rank range '" + spec + "'");
        for (int r = lo; r <= hi; ++r) ranks.push_back(r);
        return ranks;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ranks.push_back(std::stoi(item));
    }
    if (ranks.empty()) throw std::runtime_error("no conflict ranks in '" + spec + "'");
    for (int r : ranks) {
        if (r < 1) throw std::runtime_error("conflict rank must be >= 1");
    }
    return ranks;
}

std::vector<std::string> parse_algos(const std::string& spec) {
    std::vector<std::string> algos;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!rsiplan::is_algorithm_name(item)) {
            throw std::runtime_error("unknown algorithm '" + item +
                                     "' (expected rs|cs|is|lf|ds|sa|tabu|hybrid|exact)");
        }
        algos.push_back(item);
    }
    if (algos.empty()) throw std::runtime_error("no algorithms in '" + spec + "'");
    return algos;
}

std::vector<int> parse_palette_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open palette " + path.string());
    std::vector<int> palette;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        int rsi = 0;
        if (ss >> rsi) palette.push_back(rsi);
        std::string rest;
        if (ss >> rest) {
            throw std::runtime_error("palette " + path.string() + " line " +
                                     std::to_string(line_no) + ": trailing junk");
        }
    }
    if (palette.empty()) throw std::runtime_error("palette " + path.string() + " is empty");
    return palette;
}

struct SolverOptions {
    double penalty_a = 1.0;
    double penalty_b = 1.0;
    rsiplan::SolverParams params;
    std::optional<double> beta_min;
    std::optional<double> beta_max;
    std::optional<int> tenure;

    void attach(CLI::App* cmd) {
        cmd->add_option("--penalty-a", penalty_a, "One-hot penalty weight A (QUBO algorithms)");
        cmd->add_option("--penalty-b", penalty_b, "Edge penalty weight B (QUBO algorithms)");
        cmd->add_option("--num-reads", params.num_reads, "Independent solver restarts");
        cmd->add_option("--sweeps", params.sweeps, "Sweeps (SA) / moves (tabu) per read");
        cmd->add_option("--tabu-tenure", tenure, "Tabu tenure (default min(20, max(4, M/4)))");
        cmd->add_option("--beta-min", beta_min, "Annealing schedule start (default auto)");
        cmd->add_option("--beta-max", beta_max, "Annealing schedule end (default auto)");
        cmd->add_option("--max-iters", params.max_iters, "Hybrid: max rounds");
        cmd->add_option("--convergence-iters", params.convergence_iters,
                        "Hybrid: non-improving rounds before termination");
        cmd->add_option("--max-subproblem-size", params.max_subproblem_size,
                        "Hybrid: variables in the clamped subproblem branch");
    }

    rsiplan::SolverParams resolve(std::uint64_t seed) const {
        rsiplan::SolverParams p = params;
        p.seed = seed;
        if (beta_min && beta_max) p.beta_range = std::pair(*beta_min, *beta_max);
        else if (beta_min || beta_max) throw std::runtime_error("--beta-min and --beta-max must be given together");
        if (tenure) p.tabu_tenure = tenure;
        return p;
    }
};

int cmd_synth(const std::string& out_file, const rsiplan::SynthConfig& cfg, std::uint64_t seed) {
    const auto cells = rsiplan::generate_synthetic_cells(cfg, seed);
    write_file(out_file, rsiplan::cells_to_csv(cells));
    std::cout << "wrote " << cells.size() << " cells to " << out_file << "\n";
    return 0;
}

int cmd_color(const std::string& cells_file, int rank, double radius, const std::string& algo,
              std::uint64_t seed, std::optional<int> colors_opt,
              const std::string& palette_file, const std::string& out_dir,
              const std::string& dump_qubo, const SolverOptions& opts) {
    const auto cells = rsiplan::parse_cells(read_file(cells_file));
    const auto graph = rsiplan::build_conflict_graph(cells, rsiplan::IngestConfig{radius, rank});

    rsiplan::Coloring coloring;
    double wall_ms = 0.0;
    if (rsiplan::is_heuristic_name(algo)) {
        if (!dump_qubo.empty()) {
            throw std::runtime_error("--dump-qubo needs a QUBO algorithm (sa|tabu|hybrid|exact)");
        }
        const auto start = Clock::now();
        coloring = rsiplan::run_heuristic(algo, graph, seed);
        wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (colors_opt && rsiplan::colors_used(coloring) > *colors_opt) {
            std::cerr << "error: " << algo << " used " << rsiplan::colors_used(coloring)
                      << " colors, more than --colors " << *colors_opt << "\n";
            return 1;
        }
    } else {
        const int c_start =
            colors_opt ? *colors_opt : std::max(1, rsiplan::colors_used(rsiplan::dsatur(graph)));
        if (!dump_qubo.empty()) {
            write_file(dump_qubo,
                       rsiplan::build_qubo(graph, c_start, opts.penalty_a, opts.penalty_b).to_text());
        }
        const auto solver = rsiplan::make_solver(algo);
        const auto start = Clock::now();
        const auto result = rsiplan::min_colors_search(graph, solver, opts.resolve(seed), c_start,
                                                       opts.penalty_a, opts.penalty_b);
        wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        coloring = result.coloring;
    }

    std::vector<int> palette;
    if (!palette_file.empty()) {
        palette = parse_palette_file(palette_file);
    } else {
        for (int i = 0; i < coloring.palette_size(); ++i) palette.push_back(i);
    }

    const bool legal = rsiplan::is_legal(graph, coloring);
    fs::create_directories(out_dir);
    const fs::path plan_path = fs::path(out_dir) / "plan.csv";
    if (legal) {
        const auto plan = rsiplan::make_plan(graph, coloring, palette);
        write_file(plan_path, rsiplan::plan_to_csv(plan));
    }

    std::cout << "algorithm: " << algo << "\n"
              << "cells: " << graph.num_vertices() << ", edges: " << graph.num_edges() << "\n"
              << "colors used: " << rsiplan::colors_used(coloring) << "\n"
              << "legal: " << (legal ? "true" : "false") << "\n"
              << "solve wall ms: " << wall_ms << "\n";
    if (legal) std::cout << "plan: " << plan_path.string() << "\n";
    return legal ? 0 : 1;
}

int cmd_bench(const std::string& cells_file, const std::string& ranks_spec, double radius,
              const std::string& algos_spec, int runs, std::uint64_t seed,
              const std::string& out_dir, const SolverOptions& opts) {
    const auto cells = rsiplan::parse_cells(read_file(cells_file));

    rsiplan::BenchConfig cfg;
    cfg.radius_km = radius;
    cfg.ranks = parse_ranks(ranks_spec);
    cfg.algorithms = parse_algos(algos_spec);
    cfg.runs = runs;
    cfg.base_seed = seed;
    cfg.solver = opts.resolve(seed); // per-record seeds are derived in run_benchmark
    cfg.penalty_a = opts.penalty_a;
    cfg.penalty_b = opts.penalty_b;

    const auto records = rsiplan::run_benchmark(cells, cfg);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "records.csv", rsiplan::emit_csv(records));
    write_file(fs::path(out_dir) / "colors.svg",
               rsiplan::emit_plot(records, rsiplan::PlotKind::kColors));
    write_file(fs::path(out_dir) / "runtime.svg",
               rsiplan::emit_plot(records, rsiplan::PlotKind::kRuntime));

    int failures = 0;
    for (const auto& r : records) {
        if (!r.legal) ++failures;
    }
    std::cout << records.size() << " records (" << failures << " failures) -> " << out_dir
              << "/records.csv, colors.svg, runtime.svg\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PRACH root sequence index planning via graph coloring and QUBO annealing"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a synthetic cell-site CSV");
    rsiplan::SynthConfig synth_cfg;
    std::uint64_t synth_seed = 0;
    std::string synth_out;
    synth->add_option("--num-cells", synth_cfg.num_cells, "Number of cells")->required();
    synth->add_option("--disk-km", synth_cfg.disk_radius_km, "Site disk radius in km");
    synth->add_option("--sectors", synth_cfg.sectors_per_site, "Sectors per site");
    synth->add_option("--channel", synth_cfg.channel, "Frequency channel number");
    synth->add_option("--seed", synth_seed, "Generator seed");
    synth->add_option("--out", synth_out, "Output CSV file")->required();

    // color
    auto* color = app.add_subcommand("color", "Color one conflict graph and emit an RSI plan");
    std::string color_cells, color_algo, color_palette, color_out, color_dump_qubo;
    int color_rank = 1;
    double color_radius = 5.0;
    std::uint64_t color_seed = 0;
    std::optional<int> color_colors;
    SolverOptions color_opts;
    color->add_option("--cells", color_cells, "Cell-site CSV")->required();
    color->add_option("--rank", color_rank, "Conflict rank")->required();
    color->add_option("--radius", color_radius, "Candidate-search radius in km");
    color->add_option("--algo", color_algo, "rs|cs|is|lf|ds|sa|tabu|hybrid|exact")->required();
    color->add_option("--seed", color_seed, "Solver seed");
    color->add_option("--colors", color_colors,
                      "Cap for heuristics; starting palette size for QUBO algorithms "
                      "(default: DSATUR's count)");
    color->add_option("--palette", color_palette, "File of RSIs, one per line");
    color->add_option("--out", color_out, "Output directory")->required();
    color->add_option("--dump-qubo", color_dump_qubo,
                      "Write the starting-palette QUBO in text form (QUBO algorithms)");
    color_opts.attach(color);

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep conflict ranks over several algorithms");
    std::string bench_cells, bench_ranks, bench_algos, bench_out;
    double bench_radius = 5.0;
    int bench_runs = 1;
    std::uint64_t bench_seed = 0;
    SolverOptions bench_opts;
    bench->add_option("--cells", bench_cells, "Cell-site CSV")->required();
    bench->add_option("--ranks", bench_ranks, "Conflict ranks, e.g. 1..6 or 2,4")->required();
    bench->add_option("--radius", bench_radius, "Candidate-search radius in km");
    bench->add_option("--algos", bench_algos, "Comma-separated algorithm names")->required();
    bench->add_option("--runs", bench_runs, "Runs per algorithm and rank");
    bench->add_option("--seed", bench_seed, "Base seed");
    bench->add_option("--out", bench_out, "Output directory")->required();
    bench_opts.attach(bench);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return cmd_synth(synth_out, synth_cfg, synth_seed);
        if (color->parsed()) {
            if (!rsiplan::is_algorithm_name(color_algo)) {
                throw std::runtime_error("unknown algorithm '" + color_algo +
                                         "' (expected rs|cs|is|lf|ds|sa|tabu|hybrid|exact)");
            }
            return cmd_color(color_cells, color_rank, color_radius, color_algo, color_seed,
                             color_colors, color_palette, color_out, color_dump_qubo, color_opts);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_cells, bench_ranks, bench_radius, bench_algos, bench_runs,
                             bench_seed, bench_out, bench_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
