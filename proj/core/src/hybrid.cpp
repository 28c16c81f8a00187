#include <chrono>
#include <stdexcept>

#include "rsiplan/samplers.hpp"
#include "sampler_internal.hpp"

namespace rsiplan {

namespace {

using Clock = std::chrono::steady_clock;

// Largest subproblem still solved by exhaustive enumeration.
constexpr int kExactSubproblemLimit = 20;

std::uint64_t branch_seed(std::uint64_t seed, int branch_id, int round) {
    return combine_seed(combine_seed(seed, static_cast<std::uint64_t>(branch_id)),
                        static_cast<std::uint64_t>(round));
}

struct BranchResult {
    BitVector x;
    double energy = 0.0;
};

// Subproblem branch: clamp everything outside the high-impact variables and
// solve the rest exactly (small) or by intensified annealing. The incumbent
// restriction is always a candidate, so the merged result cannot be worse.
BranchResult subproblem_branch(const Qubo& q, const BitVector& incumbent,
                               const SolverParams& p, std::uint64_t seed) {
    const int k = std::min(p.max_subproblem_size, q.num_vars());
    const std::vector<int> vars = select_subproblem(q, incumbent, k);
    const SubQubo sub = clamp_subproblem(q, incumbent, vars);

    BitVector best_sub = extract_subsolution(incumbent, vars);
    double best_energy = sub.sub.energy(best_sub);

    if (k <= kExactSubproblemLimit) {
        const SampleSet exact = brute_force(sub.sub, 1);
        if (exact.best().energy < best_energy) {
            best_sub = exact.best().x;
            best_energy = exact.best().energy;
        }
    } else {
        Rng rng(seed);
        const auto [beta_min, beta_max] =
            p.beta_range ? *p.beta_range : default_beta_range(sub.sub);
        const int reads = 4;
        for (int read = 0; read < reads; ++read) {
            BitVector start = read == 0 ? best_sub : detail::random_bits(k, rng);
            auto [x, energy] =
                detail::sa_run(sub.sub, std::move(start), 2 * p.sweeps, beta_min, beta_max,
                               Rng(combine_seed(seed, read)));
            if (energy < best_energy) {
                best_sub = std::move(x);
                best_energy = energy;
            }
        }
    }

    BranchResult out;
    out.x = merge_subsolution(incumbent, vars, best_sub);
    out.energy = q.energy(out.x);
    return out;
}

} // namespace

SampleSet hybrid_solve(const Qubo& q, const SolverParams& p,
                       const std::optional<BitVector>& initial) {
    detail::validate_params(p);
    const auto start = Clock::now();
    const int m = q.num_vars();

    BitVector incumbent;
    if (initial) {
        if (static_cast<int>(initial->size()) != m) {
            throw std::invalid_argument("hybrid_solve: initial state length mismatch");
        }
        incumbent = *initial;
    } else {
        Rng rng(combine_seed(p.seed, 0x68796272ull)); // "hybr"
        incumbent = detail::random_bits(m, rng);
    }
    double incumbent_energy = q.energy(incumbent);

    SampleSet out;
    out.solver = "hybrid";
    out.seed = p.seed;
    out.round_energies.push_back(incumbent_energy);
    out.samples.push_back(Sample{incumbent, incumbent_energy, 1});

    const int tenure = p.tabu_tenure.value_or(default_tabu_tenure(m));
    const auto [beta_min, beta_max] = p.beta_range ? *p.beta_range : default_beta_range(q);

    int rounds = 0;
    int stale_rounds = 0;
    for (int round = 1; round <= p.max_iters; ++round) {
        ++rounds;

        // Branches are independent given the incumbent snapshot; a parallel
        // schedule would produce the same incumbent sequence.
        auto [tabu_x, tabu_energy] =
            detail::tabu_run(q, incumbent, p.sweeps, tenure, Rng(branch_seed(p.seed, 1, round)));
        auto [sa_x, sa_energy] =
            detail::sa_run(q, incumbent, p.sweeps, beta_min, beta_max,
                           Rng(branch_seed(p.seed, 2, round)));
        BranchResult sub = subproblem_branch(q, incumbent, p, branch_seed(p.seed, 3, round));

        BitVector* best_x = &tabu_x;
        double best_energy = tabu_energy;
        if (sa_energy < best_energy) {
            best_x = &sa_x;
            best_energy = sa_energy;
        }
        if (sub.energy < best_energy) {
            best_x = &sub.x;
            best_energy = sub.energy;
        }

        if (best_energy < incumbent_energy) {
            incumbent = std::move(*best_x);
            incumbent_energy = best_energy;
            stale_rounds = 0;
            out.samples.push_back(Sample{incumbent, incumbent_energy, 1});
        } else {
            ++stale_rounds;
        }
        out.round_energies.push_back(incumbent_energy);

        if (stale_rounds >= p.convergence_iters) break;
    }

    detail::finalize_samples(out.samples, q);
    out.iterations = rounds;
    out.wall_time_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
}

} // namespace rsiplan
