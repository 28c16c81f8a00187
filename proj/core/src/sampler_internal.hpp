#pragma once

// Shared single-flip machinery for the annealing-style solvers. A FlipState
// keeps the bit vector, its energy, and all local fields so a flip costs
// O(couplings of the flipped variable).

#include <utility>
#include <vector>

#include "rsiplan/qubo.hpp"
#include "rsiplan/rng.hpp"
#include "rsiplan/samplers.hpp"

namespace rsiplan::detail {

struct FlipState {
    BitVector x;
    std::vector<double> field; // local_field per variable
    double energy = 0.0;
};

FlipState make_state(const Qubo& q, BitVector x);

inline double flip_delta(const FlipState& s, int i) {
    return s.x[i] ? -s.field[i] : s.field[i];
}

void apply_flip(FlipState& s, int i, const Qubo& q);

BitVector random_bits(int n, Rng& rng);

// One annealing run from `start` over `sweeps` sweeps with a geometric beta
// schedule. The returned best includes the start state, so the result is
// never worse than the input. Energy is re-evaluated exactly at the end.
std::pair<BitVector, double> sa_run(const Qubo& q, BitVector start, int sweeps,
                                    double beta_min, double beta_max, Rng rng);

// One tabu run from `start` for `iters` steepest-descent moves with recency
// tenure and aspiration against the best seen. Ties between equally good
// moves break by scan order from a per-move rotated origin drawn from `rng`,
// so runs from the same start still diverge under different seeds.
std::pair<BitVector, double> tabu_run(const Qubo& q, BitVector start, int iters, int tenure,
                                      Rng rng);

// Dedup identical bit vectors (summing occurrences), recompute exact
// energies, sort by (energy, bits).
void finalize_samples(std::vector<Sample>& samples, const Qubo& q);

void validate_params(const SolverParams& p);

} // namespace rsiplan::detail
