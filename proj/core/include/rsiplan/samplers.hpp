#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsiplan/qubo.hpp"

namespace rsiplan {

struct SolverParams {
    std::uint64_t seed = 0;
    int num_reads = 50;  // independent restarts
    int sweeps = 1000;   // per read
    std::optional<std::pair<double, double>> beta_range; // (beta_min, beta_max); auto when absent
    std::optional<int> tabu_tenure;                      // auto: min(20, max(4, M/4))
    // hybrid defaults follow the recommended Kerberos settings
    int max_iters = 100;
    int convergence_iters = 3;
    int max_subproblem_size = 50;
};

struct Sample {
    BitVector x;
    double energy = 0.0;
    int occurrences = 1;

    friend bool operator==(const Sample&, const Sample&) = default;
};

// Solver output: samples sorted by energy ascending (ties by bit pattern),
// energies re-verified against Qubo::energy at record time.
struct SampleSet {
    std::vector<Sample> samples;
    std::string solver;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
    int iterations = 0;
    // hybrid only: incumbent energy after each round, index 0 = initial state
    std::vector<double> round_energies;

    const Sample& best() const;
};

// Auto beta schedule endpoints: beta_min = ln 2 / dE_max, beta_max =
// ln 100 / dE_min, with dE bounds taken from coefficient magnitudes.
std::pair<double, double> default_beta_range(const Qubo& q);

int default_tabu_tenure(int num_vars);

// Single-flip Metropolis with a geometric beta schedule; num_reads
// independent restarts, best-of-read recorded. Deterministic per seed.
SampleSet simulated_anneal(const Qubo& q, const SolverParams& p);

// Steepest-descent single-flip search with a recency tabu list and
// best-so-far aspiration; random restart per read. Deterministic per seed.
SampleSet tabu_search(const Qubo& q, const SolverParams& p);

// Exhaustive enumeration (Gray-code order). Refuses num_vars > 24. Keeps the
// keep_best lowest-energy states (0 = keep everything).
SampleSet brute_force(const Qubo& q, std::size_t keep_best = 256);

// The k variables with the largest |local field| under x, ordered by field
// magnitude descending, ties by index.
std::vector<int> select_subproblem(const Qubo& q, const BitVector& x, int k);

// Subproblem over `vars` with all other variables clamped to their value in
// x: for any assignment y of the subproblem variables,
// sub.energy(y) == q.energy(merge_subsolution(x, vars, y)).
struct SubQubo {
    Qubo sub;
    std::vector<int> vars;
};
SubQubo clamp_subproblem(const Qubo& q, const BitVector& x, std::span<const int> vars);

BitVector extract_subsolution(const BitVector& x, std::span<const int> vars);
BitVector merge_subsolution(const BitVector& x, std::span<const int> vars,
                            const BitVector& sub_x);

// Kerberos-style decomposition solver: up to max_iters rounds of three
// branches from the incumbent (tabu, re-annealing, and a clamped subproblem
// of max_subproblem_size high-impact variables solved exactly when <= 20
// variables, else by intensified annealing). The incumbent takes the best
// strictly-improving branch per round; terminates after convergence_iters
// rounds without improvement. Deterministic per seed; branches are
// independent given the incumbent snapshot.
SampleSet hybrid_solve(const Qubo& q, const SolverParams& p,
                       const std::optional<BitVector>& initial = std::nullopt);

inline constexpr std::string_view kSolverNames[] = {"sa", "tabu", "hybrid", "exact"};

bool is_solver_name(std::string_view name);

SampleSet run_solver(std::string_view name, const Qubo& q, const SolverParams& p);

} // namespace rsiplan
