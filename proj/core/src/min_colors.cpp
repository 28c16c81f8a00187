#include "rsiplan/min_colors.hpp"

#include <optional>
#include <string>

namespace rsiplan {

namespace {

constexpr double kZeroEnergyTol = 1e-9;

} // namespace

MinColorsResult min_colors_search(const ConflictGraph& g, const QuboSolver& solver,
                                  const SolverParams& params, int c_start,
                                  double penalty_a, double penalty_b) {
    MinColorsResult result;
    if (g.num_vertices() == 0) {
        result.coloring = Coloring(0, 0);
        return result;
    }
    if (c_start < 1) throw std::invalid_argument("min_colors_search: c_start must be >= 1");

    auto try_colors = [&](int num_colors) -> std::optional<Coloring> {
        const Qubo q = build_qubo(g, num_colors, penalty_a, penalty_b);
        const SampleSet samples = solver(q, params);
        ++result.qubo_solves;
        result.solver_wall_ms += samples.wall_time_ms;
        if (samples.samples.empty() || samples.best().energy > kZeroEnergyTol) {
            return std::nullopt;
        }
        Coloring c = decode(samples.best().x, q);
        if (!is_legal(g, c)) return std::nullopt; // zero energy implies legal; keep the check cheap
        result.final_energy = samples.best().energy;
        return c;
    };

    auto first = try_colors(c_start);
    if (!first) {
        throw InfeasibleError("min_colors_search: infeasible at start, no zero-energy sample at C=" +
                              std::to_string(c_start));
    }
    result.num_colors = c_start;
    result.coloring = std::move(*first);

    for (int c = c_start - 1; c >= 1; --c) {
        auto next = try_colors(c);
        if (!next) break;
        result.num_colors = c;
        result.coloring = std::move(*next);
    }
    return result;
}

QuboSolver make_solver(std::string_view name) {
    if (name == "sa") {
        return [](const Qubo& q, const SolverParams& p) { return simulated_anneal(q, p); };
    }
    if (name == "tabu") {
        return [](const Qubo& q, const SolverParams& p) { return tabu_search(q, p); };
    }
    if (name == "hybrid") {
        return [](const Qubo& q, const SolverParams& p) { return hybrid_solve(q, p); };
    }
    if (name == "exact") {
        return [](const Qubo& q, const SolverParams&) { return brute_force(q); };
    }
    throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

} // namespace rsiplan
