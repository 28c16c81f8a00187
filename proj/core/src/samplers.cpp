#include "rsiplan/samplers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "sampler_internal.hpp"

namespace rsiplan {

namespace detail {

FlipState make_state(const Qubo& q, BitVector x) {
    FlipState s;
    s.energy = q.energy(x);
    s.x = std::move(x);
    s.field.resize(q.num_vars());
    for (int i = 0; i < q.num_vars(); ++i) {
        s.field[i] = q.local_field(i, s.x);
    }
    return s;
}

void apply_flip(FlipState& s, int i, const Qubo& q) {
    const double delta = flip_delta(s, i);
    s.x[i] ^= 1;
    s.energy += delta;
    const double sign = s.x[i] ? 1.0 : -1.0;
    for (const auto& [j, c] : q.couplings(i)) {
        s.field[j] += sign * c;
    }
}

BitVector random_bits(int n, Rng& rng) {
    BitVector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.next_bool() ? 1 : 0;
    return x;
}

std::pair<BitVector, double> sa_run(const Qubo& q, BitVector start, int sweeps,
                                    double beta_min, double beta_max, Rng rng) {
    const int m = q.num_vars();
    FlipState state = make_state(q, std::move(start));
    BitVector best = state.x;
    double best_energy = state.energy;

    const double log_ratio = std::log(beta_max / beta_min);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const double t = sweeps > 1 ? static_cast<double>(sweep) / (sweeps - 1) : 1.0;
        const double beta = beta_min * std::exp(log_ratio * t);
        for (int i = 0; i < m; ++i) {
            const double delta = flip_delta(state, i);
            if (delta <= 0.0 || rng.next_double() < std::exp(-beta * delta)) {
                apply_flip(state, i, q);
                if (state.energy < best_energy) {
                    best_energy = state.energy;
                    best = state.x;
                }
            }
        }
    }
    const double exact = q.energy(best);
    return {std::move(best), exact};
}

std::pair<BitVector, double> tabu_run(const Qubo& q, BitVector start, int iters, int tenure,
                                      Rng rng) {
    const int m = q.num_vars();
    FlipState state = make_state(q, std::move(start));
    BitVector best = state.x;
    double best_energy = state.energy;

    std::vector<long long> tabu_expiry(m, -1);
    for (long long it = 0; it < iters && m > 0; ++it) {
        const int origin = static_cast<int>(rng.next_below(m));
        int move = -1;
        double move_delta = 0.0;
        for (int step = 0; step < m; ++step) {
            const int i = origin + step < m ? origin + step : origin + step - m;
            const double delta = flip_delta(state, i);
            const bool admissible =
                tabu_expiry[i] <= it || state.energy + delta < best_energy - 1e-12;
            if (admissible && (move < 0 || delta < move_delta)) {
                move = i;
                move_delta = delta;
            }
        }
        if (move < 0) break; // every move tabu and none aspirates
        apply_flip(state, move, q);
        tabu_expiry[move] = it + tenure + 1;
        if (state.energy < best_energy) {
            best_energy = state.energy;
            best = state.x;
        }
    }
    const double exact = q.energy(best);
    return {std::move(best), exact};
}

void finalize_samples(std::vector<Sample>& samples, const Qubo& q) {
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.x < b.x; });
    std::vector<Sample> merged;
    for (Sample& s : samples) {
        if (!merged.empty() && merged.back().x == s.x) {
            merged.back().occurrences += s.occurrences;
        } else {
            s.energy = q.energy(s.x);
            merged.push_back(std::move(s));
        }
    }
    std::sort(merged.begin(), merged.end(), [](const Sample& a, const Sample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.x < b.x;
    });
    samples = std::move(merged);
}

void validate_params(const SolverParams& p) {
    if (p.num_reads < 1) throw std::invalid_argument("SolverParams: num_reads must be >= 1");
    if (p.sweeps < 1) throw std::invalid_argument("SolverParams: sweeps must be >= 1");
    if (p.beta_range) {
        const auto& [lo, hi] = *p.beta_range;
        if (!(lo > 0.0) || !(lo < hi)) {
            throw std::invalid_argument("SolverParams: need 0 < beta_min < beta_max");
        }
    }
    if (p.tabu_tenure && *p.tabu_tenure < 1) {
        throw std::invalid_argument("SolverParams: tabu_tenure must be >= 1");
    }
    if (p.max_iters < 1) throw std::invalid_argument("SolverParams: max_iters must be >= 1");
    if (p.convergence_iters < 1) {
        throw std::invalid_argument("SolverParams: convergence_iters must be >= 1");
    }
    if (p.max_subproblem_size < 1) {
        throw std::invalid_argument("SolverParams: max_subproblem_size must be >= 1");
    }
}

} // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int total_iterations(const SolverParams& p) {
    const long long total = 1LL * p.num_reads * p.sweeps;
    return total > std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                                   : static_cast<int>(total);
}

} // namespace

const Sample& SampleSet::best() const {
    if (samples.empty()) throw std::logic_error("SampleSet::best: no samples");
    return samples.front();
}

std::pair<double, double> default_beta_range(const Qubo& q) {
    // dE_max: largest possible single-flip change (per-variable magnitude sum).
    // dE_min: smallest resolvable change (smallest nonzero coefficient).
    double max_gap = 0.0;
    double min_coeff = 0.0;
    auto note_coeff = [&](double c) {
        const double mag = std::abs(c);
        if (mag <= 0.0) return;
        min_coeff = min_coeff == 0.0 ? mag : std::min(min_coeff, mag);
    };
    for (int i = 0; i < q.num_vars(); ++i) {
        double gap = std::abs(q.linear(i));
        note_coeff(q.linear(i));
        for (const auto& [j, c] : q.couplings(i)) {
            gap += std::abs(c);
            note_coeff(c);
        }
        max_gap = std::max(max_gap, gap);
    }
    if (max_gap <= 0.0) return {0.1, 10.0}; // constant energy landscape
    return {std::log(2.0) / max_gap, std::log(100.0) / min_coeff};
}

int default_tabu_tenure(int num_vars) {
    return std::min(20, std::max(4, num_vars / 4));
}

SampleSet simulated_anneal(const Qubo& q, const SolverParams& p) {
    detail::validate_params(p);
    const auto [beta_min, beta_max] = p.beta_range ? *p.beta_range : default_beta_range(q);
    const auto start = Clock::now();

    SampleSet out;
    out.solver = "sa";
    out.seed = p.seed;
    for (int read = 0; read < p.num_reads; ++read) {
        Rng rng(combine_seed(p.seed, read));
        auto [x, energy] = detail::sa_run(q, detail::random_bits(q.num_vars(), rng),
                                          p.sweeps, beta_min, beta_max, rng);
        out.samples.push_back(Sample{std::move(x), energy, 1});
    }
    detail::finalize_samples(out.samples, q);
    out.iterations = total_iterations(p);
    out.wall_time_ms = elapsed_ms(start);
    return out;
}

SampleSet tabu_search(const Qubo& q, const SolverParams& p) {
    detail::validate_params(p);
    const int tenure = p.tabu_tenure.value_or(default_tabu_tenure(q.num_vars()));
    const auto start = Clock::now();

    SampleSet out;
    out.solver = "tabu";
    out.seed = p.seed;
    for (int read = 0; read < p.num_reads; ++read) {
        Rng rng(combine_seed(p.seed, read));
        auto [x, energy] =
            detail::tabu_run(q, detail::random_bits(q.num_vars(), rng), p.sweeps, tenure, rng);
        out.samples.push_back(Sample{std::move(x), energy, 1});
    }
    detail::finalize_samples(out.samples, q);
    out.iterations = total_iterations(p);
    out.wall_time_ms = elapsed_ms(start);
    return out;
}

SampleSet brute_force(const Qubo& q, std::size_t keep_best) {
    const int m = q.num_vars();
    if (m > 24) {
        throw std::invalid_argument("brute_force: refusing " + std::to_string(m) +
                                    " variables (limit 24)");
    }
    const auto start = Clock::now();
    const std::uint64_t total = 1ull << m;
    const std::size_t keep = keep_best == 0 ? total : keep_best;

    using Entry = std::pair<double, BitVector>;
    std::priority_queue<Entry> worst_on_top;

    detail::FlipState state = detail::make_state(q, BitVector(m, 0));
    for (std::uint64_t code = 0;; ++code) {
        const Entry entry(state.energy, state.x);
        if (worst_on_top.size() < keep) {
            worst_on_top.push(entry);
        } else if (entry < worst_on_top.top()) {
            worst_on_top.pop();
            worst_on_top.push(entry);
        }
        if (code + 1 == total) break;
        // Gray-code order: step k flips the lowest set bit position of k+1.
        const int bit = std::countr_zero(code + 1);
        detail::apply_flip(state, bit, q);
    }

    SampleSet out;
    out.solver = "exact";
    out.seed = 0;
    while (!worst_on_top.empty()) {
        const Entry& e = worst_on_top.top();
        out.samples.push_back(Sample{e.second, e.first, 1});
        worst_on_top.pop();
    }
    detail::finalize_samples(out.samples, q);
    out.iterations = static_cast<int>(total);
    out.wall_time_ms = elapsed_ms(start);
    return out;
}

std::vector<int> select_subproblem(const Qubo& q, const BitVector& x, int k) {
    if (k < 0 || k > q.num_vars()) {
        throw std::invalid_argument("select_subproblem: k out of range");
    }
    std::vector<std::pair<double, int>> fields;
    fields.reserve(q.num_vars());
    for (int i = 0; i < q.num_vars(); ++i) {
        fields.emplace_back(std::abs(q.local_field(i, x)), i);
    }
    std::sort(fields.begin(), fields.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> vars;
    vars.reserve(k);
    for (int i = 0; i < k; ++i) vars.push_back(fields[i].second);
    return vars;
}

SubQubo clamp_subproblem(const Qubo& q, const BitVector& x, std::span<const int> vars) {
    if (static_cast<int>(x.size()) != q.num_vars()) {
        throw std::invalid_argument("clamp_subproblem: vector length mismatch");
    }
    std::unordered_map<int, int> sub_index;
    for (int a = 0; a < static_cast<int>(vars.size()); ++a) {
        const int v = vars[a];
        if (v < 0 || v >= q.num_vars()) {
            throw std::invalid_argument("clamp_subproblem: variable out of range");
        }
        if (!sub_index.emplace(v, a).second) {
            throw std::invalid_argument("clamp_subproblem: duplicate variable");
        }
    }

    // zeroing the free variables leaves exactly the clamped-background energy
    BitVector background = x;
    for (int v : vars) background[v] = 0;

    SubQubo out;
    out.vars.assign(vars.begin(), vars.end());
    out.sub = Qubo(static_cast<int>(vars.size()));
    out.sub.set_offset(q.energy(background));
    for (int a = 0; a < static_cast<int>(vars.size()); ++a) {
        out.sub.add_linear(a, q.local_field(vars[a], background));
        for (const auto& [j, c] : q.couplings(vars[a])) {
            const auto it = sub_index.find(j);
            if (it != sub_index.end() && a < it->second) {
                out.sub.add_quadratic(a, it->second, c);
            }
        }
    }
    return out;
}

BitVector extract_subsolution(const BitVector& x, std::span<const int> vars) {
    BitVector sub(vars.size());
    for (std::size_t a = 0; a < vars.size(); ++a) sub[a] = x[vars[a]];
    return sub;
}

BitVector merge_subsolution(const BitVector& x, std::span<const int> vars,
                            const BitVector& sub_x) {
    if (sub_x.size() != vars.size()) {
        throw std::invalid_argument("merge_subsolution: size mismatch");
    }
    BitVector merged = x;
    for (std::size_t a = 0; a < vars.size(); ++a) merged[vars[a]] = sub_x[a];
    return merged;
}

bool is_solver_name(std::string_view name) {
    for (std::string_view known : kSolverNames) {
        if (name == known) return true;
    }
    return false;
}

SampleSet run_solver(std::string_view name, const Qubo& q, const SolverParams& p) {
    if (name == "sa") return simulated_anneal(q, p);
    if (name == "tabu") return tabu_search(q, p);
    if (name == "hybrid") return hybrid_solve(q, p);
    if (name == "exact") return brute_force(q);
    throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

} // namespace rsiplan
