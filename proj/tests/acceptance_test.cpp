// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Workloads are fully deterministic in the seeds fixed here;
// only wall-clock measurements vary between runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "rsiplan/bench.hpp"
#include "rsiplan/heuristics.hpp"
#include "rsiplan/ingest.hpp"
#include "rsiplan/min_colors.hpp"
#include "rsiplan/plan.hpp"
#include "rsiplan/qubo.hpp"
#include "rsiplan/rng.hpp"
#include "rsiplan/samplers.hpp"
#include "rsiplan/synthetic.hpp"
#include "test_util.hpp"

using namespace rsiplan;
using Clock = std::chrono::steady_clock;

namespace {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// criteria 1, 2 and 8 share the legality workload

struct LegalityOutcome {
    int heuristic_failures = 0;
    int heuristic_runs = 0;
    int bound_violations = 0;
    int qubo_failures = 0;
    int qubo_runs = 0;
    double seconds = 0.0;
    std::vector<BenchmarkRecord> records;
};

LegalityOutcome run_legality_suite() {
    const auto start = Clock::now();
    LegalityOutcome out;
    const double densities[] = {0.05, 0.2, 0.5};

    // leg A: the five heuristics on 1000 random G(n, p), n up to 200
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t graph_seed = combine_seed(0xA11A, i);
        const int n = 4 + static_cast<int>(Rng(graph_seed).next_below(197)); // 4..200
        const double p = densities[i % 3];
        const ConflictGraph g = testutil::random_gnp(n, p, graph_seed);
        const int bound = g.max_degree() + 1;
        for (std::string_view name : kHeuristicNames) {
            const std::uint64_t seed = combine_seed(combine_seed(0x5EED, i), fnv1a64(name));
            const auto t0 = Clock::now();
            const Coloring c = run_heuristic(name, g, seed);
            const double wall = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            const bool legal = is_legal(g, c);
            ++out.heuristic_runs;
            if (!legal) ++out.heuristic_failures;
            if (colors_used(c) > bound) ++out.bound_violations;

            BenchmarkRecord rec;
            rec.algorithm = std::string(name);
            rec.conflict_rank = i; // instance index doubles as the sweep key
            rec.run_index = 0;
            rec.seed = seed;
            rec.colors_used = colors_used(c);
            rec.wall_time_ms = wall;
            rec.legal = legal;
            out.records.push_back(std::move(rec));
        }
    }

    // leg B: the QUBO solvers must reach a zero-energy legal assignment on
    // 1000 random instances sized so exact ground states are verifiable
    SolverParams params;
    params.num_reads = 10;
    params.sweeps = 250;
    const std::string_view solvers[] = {"sa", "tabu", "hybrid"};
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t graph_seed = combine_seed(0xB0B0, i);
        const int n = 4 + static_cast<int>(Rng(graph_seed).next_below(13)); // 4..16
        const double p = densities[i % 3];
        const ConflictGraph g = testutil::random_gnp(n, p, graph_seed);
        const int num_colors = std::max(1, colors_used(dsatur(g))); // known feasible
        const Qubo q = build_qubo(g, num_colors);
        for (std::string_view name : solvers) {
            params.seed = combine_seed(combine_seed(0x50F7, i), fnv1a64(name));
            const auto t0 = Clock::now();
            const SampleSet set = run_solver(name, q, params);
            const double wall = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            const bool solved =
                set.best().energy <= 1e-9 && is_legal(g, decode(set.best().x, q));
            ++out.qubo_runs;
            if (!solved) ++out.qubo_failures;

            BenchmarkRecord rec;
            rec.algorithm = std::string(name);
            rec.conflict_rank = i;
            rec.run_index = 0;
            rec.seed = params.seed;
            rec.colors_used = num_colors;
            rec.wall_time_ms = wall;
            rec.legal = solved;
            rec.energy = set.best().energy;
            out.records.push_back(std::move(rec));
        }
    }

    std::sort(out.records.begin(), out.records.end(),
              [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
                  return std::tie(a.algorithm, a.conflict_rank, a.run_index) <
                         std::tie(b.algorithm, b.conflict_rank, b.run_index);
              });
    out.seconds = seconds_since(start);
    return out;
}

CriterionResult criterion1(const LegalityOutcome& outcome) {
    CriterionResult r;
    r.id = 1;
    r.label = "legality suite, zero failures in <= 5 min";
    r.seconds = outcome.seconds;
    r.pass = outcome.heuristic_failures == 0 && outcome.qubo_failures == 0 &&
             outcome.seconds <= 300.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "heuristics %d/%d legal on G(n<=200,p); sa/tabu/hybrid %d/%d zero-energy on "
                  "G(n<=16,p); %.1fs",
                  outcome.heuristic_runs - outcome.heuristic_failures, outcome.heuristic_runs,
                  outcome.qubo_runs - outcome.qubo_failures, outcome.qubo_runs, outcome.seconds);
    r.detail = buf;
    return r;
}

CriterionResult criterion2(const LegalityOutcome& outcome) {
    CriterionResult r;
    r.id = 2;
    r.label = "greedy bound colors <= max_degree + 1";
    r.pass = outcome.bound_violations == 0;
    r.detail = std::to_string(outcome.bound_violations) + " violations in " +
               std::to_string(outcome.heuristic_runs) + " heuristic runs";
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult criterion3() {
    const auto start = Clock::now();
    CriterionResult r;
    r.id = 3;
    r.label = "QUBO zero-energy iff legal coloring, exhaustive |V|<=5, C<=3";

    int checked = 0;
    int mismatches = 0;
    for (int n = 1; n <= 5; ++n) {
        const int max_edges = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
        }
        for (int mask = 0; mask < (1 << max_edges); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < max_edges; ++e) {
                if (mask & (1 << e)) edges.push_back(all_pairs[e]);
            }
            const ConflictGraph g = make_graph(n, edges);
            for (int colors = 1; colors <= 3; ++colors) {
                const Qubo q = build_qubo(g, colors);
                const SampleSet ground = brute_force(q, 1);
                const bool zero_reachable = std::abs(ground.best().energy) <= 1e-9;
                const bool exists = testutil::exists_legal_coloring(g, colors);
                ++checked;
                if (zero_reachable != exists) ++mismatches;
                if (zero_reachable && !is_legal(g, decode(ground.best().x, q))) ++mismatches;
            }
        }
    }

    r.seconds = seconds_since(start);
    r.pass = mismatches == 0 && r.seconds <= 120.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d graph/palette cases, %d mismatches, %.1fs", checked,
                  mismatches, r.seconds);
    r.detail = buf;
    return r;
}

CriterionResult criterion4() {
    const auto start = Clock::now();
    CriterionResult r;
    r.id = 4;
    r.label = "solver quality vs brute force on 200 random QUBOs (M<=16)";

    int hybrid_matches = 0;
    int sa_matches = 0;
    const int instances = 200;
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t seed = combine_seed(0xC4C4, i);
        const int m = 4 + static_cast<int>(Rng(seed).next_below(13)); // 4..16
        const Qubo q = testutil::random_qubo(m, seed);
        const double optimum = brute_force(q, 1).best().energy;

        SolverParams params; // defaults
        params.seed = combine_seed(seed, 1);
        if (std::abs(hybrid_solve(q, params).best().energy - optimum) <= 1e-9) ++hybrid_matches;
        params.seed = combine_seed(seed, 2);
        if (std::abs(simulated_anneal(q, params).best().energy - optimum) <= 1e-9) ++sa_matches;
    }

    r.seconds = seconds_since(start);
    const double hybrid_rate = 100.0 * hybrid_matches / instances;
    const double sa_rate = 100.0 * sa_matches / instances;
    r.pass = hybrid_rate >= 99.0 && sa_rate >= 95.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "hybrid %.1f%% (need >=99%%), sa %.1f%% (need >=95%%), %.1fs",
                  hybrid_rate, sa_rate, r.seconds);
    r.detail = buf;
    return r;
}

// ---------------------------------------------------------------------------
// criteria 5 and 7 share the 200-cell hybrid pipeline

struct RankOutcome {
    int rank = 0;
    int ds_colors = 0;
    double ds_ms = 0.0;
    int qubo_colors = 0;
    double hybrid_ms = 0.0;
    bool plan_ok = false;
    bool within_budget = false;
};

std::vector<RankOutcome> run_paper_parameter_pipeline() {
    SynthConfig synth;
    synth.num_cells = 200;
    synth.disk_radius_km = 8.0;
    const auto cells = generate_synthetic_cells(synth, 20250808);

    std::vector<RankOutcome> outcomes;
    for (int rank = 1; rank <= 6; ++rank) {
        RankOutcome o;
        o.rank = rank;
        const ConflictGraph g = build_conflict_graph(cells, IngestConfig{5.0, rank});

        auto t0 = Clock::now();
        const Coloring ds = dsatur(g);
        o.ds_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        o.ds_colors = colors_used(ds);

        SolverParams params; // max_iters=100, convergence_iters=3, max_subproblem_size=50
        params.sweeps = 4000; // per-round branch budget; not pinned by the recommended values
        params.seed = combine_seed(0xACC5, rank);

        t0 = Clock::now();
        // on an infeasible-at-start miss, re-run from a larger palette as the
        // min_colors_search contract prescribes
        for (int bump = 0; bump <= 2 && !o.plan_ok; ++bump) {
            try {
                const MinColorsResult result = min_colors_search(
                    g, make_solver("hybrid"), params, std::max(1, o.ds_colors + bump));
                o.qubo_colors = result.num_colors;

                std::vector<int> palette;
                for (int i = 0; i < result.coloring.palette_size(); ++i) palette.push_back(i);
                const Plan plan = make_plan(g, result.coloring, palette);
                o.plan_ok = plan.entries.size() == static_cast<std::size_t>(g.num_vertices());
            } catch (const InfeasibleError&) {
                o.plan_ok = false;
            }
        }
        o.hybrid_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        o.within_budget = o.hybrid_ms <= 60000.0;
        outcomes.push_back(o);
    }
    return outcomes;
}

CriterionResult criterion5(const std::vector<RankOutcome>& outcomes) {
    CriterionResult r;
    r.id = 5;
    r.label = "paper-parameter hybrid plans 200 cells at ranks 1-6, <= 60 s per rank";
    r.pass = true;
    std::string detail;
    double total_ms = 0.0;
    for (const RankOutcome& o : outcomes) {
        if (!o.plan_ok || !o.within_budget) r.pass = false;
        total_ms += o.hybrid_ms;
        if (!detail.empty()) detail += ", ";
        detail += "r" + std::to_string(o.rank) + ":" +
                  (o.plan_ok ? std::to_string(o.qubo_colors) + "c" : "FAIL");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1fs total)", total_ms / 1000.0);
    r.detail = detail + buf;
    r.seconds = total_ms / 1000.0;
    return r;
}

CriterionResult criterion6() {
    const auto start = Clock::now();
    CriterionResult r;
    r.id = 6;
    r.label = "coloring trend: ds best; rs and is need more colors than cs";

    const std::string_view names[] = {"rs", "cs", "is", "lf", "ds"};
    double sums[5] = {0, 0, 0, 0, 0};
    const int instances = 30;
    const int random_runs = 5; // rs and cs are averaged per instance

    for (int i = 0; i < instances; ++i) {
        SynthConfig synth;
        synth.num_cells = 120;
        synth.disk_radius_km = 6.0;
        const auto cells = generate_synthetic_cells(synth, 9000 + i);
        const ConflictGraph g = build_conflict_graph(cells, IngestConfig{5.0, 4 + i % 3});
        for (std::size_t a = 0; a < 5; ++a) {
            if (names[a] == "rs" || names[a] == "cs") {
                double acc = 0.0;
                for (int run = 0; run < random_runs; ++run) {
                    acc += colors_used(
                        run_heuristic(names[a], g, combine_seed(combine_seed(0x6A6A, i), run)));
                }
                sums[a] += acc / random_runs;
            } else {
                sums[a] += colors_used(run_heuristic(names[a], g, 0));
            }
        }
    }

    const double mean_rs = sums[0] / instances;
    const double mean_cs = sums[1] / instances;
    const double mean_is = sums[2] / instances;
    const double mean_lf = sums[3] / instances;
    const double mean_ds = sums[4] / instances;

    const double eps = 1e-9;
    r.pass = mean_ds <= mean_rs + eps && mean_ds <= mean_cs + eps && mean_ds <= mean_is + eps &&
             mean_ds <= mean_lf + eps && mean_rs >= mean_cs - eps && mean_is >= mean_cs - eps;
    r.seconds = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "mean colors: ds %.2f, cs %.2f, lf %.2f, rs %.2f, is %.2f",
                  mean_ds, mean_cs, mean_lf, mean_rs, mean_is);
    r.detail = buf;
    return r;
}

CriterionResult criterion7(const std::vector<RankOutcome>& outcomes) {
    CriterionResult r;
    r.id = 7;
    r.label = "DSATUR at least 10x faster than hybrid; colors within QUBO's final C";
    double ds_total = 0.0;
    double hybrid_total = 0.0;
    bool colors_ok = true;
    for (const RankOutcome& o : outcomes) {
        ds_total += o.ds_ms;
        hybrid_total += o.hybrid_ms;
        if (!o.plan_ok || o.ds_colors > o.qubo_colors) colors_ok = false;
    }
    r.pass = colors_ok && ds_total * 10.0 <= hybrid_total;
    char buf[128];
    std::snprintf(buf, sizeof buf, "ds %.2f ms vs hybrid %.2f ms (%.0fx); colors %s", ds_total,
                  hybrid_total, ds_total > 0 ? hybrid_total / ds_total : 0.0,
                  colors_ok ? "ok" : "exceeded");
    r.detail = buf;
    return r;
}

CriterionResult criterion8(const LegalityOutcome& first) {
    const auto start = Clock::now();
    CriterionResult r;
    r.id = 8;
    r.label = "bit-reproducibility: criterion-1 suite re-run, CSV bytes identical";

    const LegalityOutcome second = run_legality_suite();

    auto masked_csv = [](const LegalityOutcome& o) {
        std::vector<BenchmarkRecord> records = o.records;
        for (BenchmarkRecord& rec : records) rec.wall_time_ms = 0.0; // measurements only
        return emit_csv(records);
    };
    const std::string csv_a = masked_csv(first);
    const std::string csv_b = masked_csv(second);

    r.pass = csv_a == csv_b && !csv_a.empty();
    r.seconds = seconds_since(start);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu-byte CSVs %s (timing column masked), %.1fs",
                  csv_a.size(), r.pass ? "identical" : "DIFFER", r.seconds);
    r.detail = buf;
    return r;
}

} // namespace

int main() {
    std::vector<CriterionResult> results;

    const LegalityOutcome legality = run_legality_suite();
    results.push_back(criterion1(legality));
    results.push_back(criterion2(legality));
    results.push_back(criterion3());
    results.push_back(criterion4());
    const std::vector<RankOutcome> pipeline = run_paper_parameter_pipeline();
    results.push_back(criterion5(pipeline));
    results.push_back(criterion6());
    results.push_back(criterion7(pipeline));
    results.push_back(criterion8(legality));

    int failures = 0;
    for (const CriterionResult& r : results) {
        if (!r.pass) ++failures;
        std::printf("[%s] criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.label.c_str(), r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
