#pragma once

#include <functional>
#include <stdexcept>
#include <string_view>

#include "rsiplan/coloring.hpp"
#include "rsiplan/conflict_graph.hpp"
#include "rsiplan/samplers.hpp"

namespace rsiplan {

using QuboSolver = std::function<SampleSet(const Qubo&, const SolverParams&)>;

// Thrown when the solver finds no zero-energy sample at the starting palette
// size; the caller should supply a larger start.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MinColorsResult {
    int num_colors = 0;
    Coloring coloring;
    int qubo_solves = 0;
    double solver_wall_ms = 0.0; // summed sampler wall time
    double final_energy = 0.0;   // best energy at the returned palette size
};

// Descending feasibility search for a small legal palette: solve the fixed-C
// coloring QUBO at c_start (must be a known-feasible size, e.g. DSATUR's
// colors_used), then decrement C while the solver keeps finding zero-energy
// samples. Returns the smallest C that succeeded and its legal coloring.
// Throws InfeasibleError when c_start itself fails.
MinColorsResult min_colors_search(const ConflictGraph& g, const QuboSolver& solver,
                                  const SolverParams& params, int c_start,
                                  double penalty_a = 1.0, double penalty_b = 1.0);

// Solver handle by CLI name (`sa|tabu|hybrid|exact`).
QuboSolver make_solver(std::string_view name);

} // namespace rsiplan
