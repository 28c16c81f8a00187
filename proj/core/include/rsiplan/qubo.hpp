#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsiplan/coloring.hpp"
#include "rsiplan/conflict_graph.hpp"

namespace rsiplan {

using BitVector = std::vector<std::uint8_t>;

struct QuadraticTerm {
    int i = 0;
    int j = 0; // i < j
    double coeff = 0.0;

    friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

// Sparse symmetric quadratic form over binary variables:
//
//   E(x) = offset + sum_i linear[i]*x_i + sum_{i<j} quadratic[i,j]*x_i*x_j
//
// Graph-coloring instances built by build_qubo additionally carry the
// (vertex, color) <-> variable mapping var = vertex * num_colors + color.
class Qubo {
public:
    Qubo() = default;
    explicit Qubo(int num_vars);

    int num_vars() const { return num_vars_; }

    void add_linear(int i, double coeff);
    void add_quadratic(int i, int j, double coeff);
    void set_offset(double offset) { offset_ = offset; }

    double linear(int i) const;
    double offset() const { return offset_; }
    std::size_t num_quadratic() const { return num_quadratic_; }

    // Coupled variables of i as (j, coeff) pairs, unordered.
    const std::vector<std::pair<int, double>>& couplings(int i) const;

    // All quadratic terms in canonical (i, j) ascending order.
    std::vector<QuadraticTerm> quadratic_terms() const;

    // Throws std::invalid_argument when |x| != num_vars.
    double energy(const BitVector& x) const;

    // linear[i] + sum_j quadratic[i,j] * x_j
    double local_field(int i, const BitVector& x) const;

    // --- graph-coloring variable map (set by build_qubo) ---
    bool has_color_map() const { return num_colors_ > 0; }
    int num_vertices() const { return num_vertices_; }
    int num_colors() const { return num_colors_; }
    int variable(int vertex, int color) const;
    double penalty_a() const { return penalty_a_; }
    double penalty_b() const { return penalty_b_; }

    // Text form for cross-checks against external samplers: first line
    // `M offset`, then one `i i coeff` line per linear term and one
    // `i j coeff` (i < j) line per quadratic term.
    std::string to_text() const;
    static Qubo from_text(std::string_view text);

private:
    friend Qubo build_qubo(const ConflictGraph&, int, double, double);

    int num_vars_ = 0;
    int num_vertices_ = 0;
    int num_colors_ = 0;
    double penalty_a_ = 0.0;
    double penalty_b_ = 0.0;
    double offset_ = 0.0;
    std::size_t num_quadratic_ = 0;
    std::vector<double> linear_;
    std::vector<std::vector<std::pair<int, double>>> couplings_;
};

// Encodes legal C-coloring search as energy minimization:
//
//   H(x) = A * sum_v (1 - sum_c x_{v,c})^2  +  B * sum_{(u,v) in E} sum_c x_{u,c} x_{v,c}
//
// expanded to linear -A per variable, +2A between same-vertex color pairs,
// +B between same-color endpoints of each edge, offset A*|V|. Ground-state
// energy is 0 iff a legal num_colors-coloring exists.
Qubo build_qubo(const ConflictGraph& g, int num_colors, double penalty_a = 1.0,
                double penalty_b = 1.0);

// Total coloring (palette == q.num_colors()) -> one-hot bit vector.
BitVector encode(const Coloring& c, const Qubo& q);

// Bit vector -> coloring; a vertex row with zero or several set bits decodes
// to unassigned rather than being masked.
Coloring decode(const BitVector& x, const Qubo& q);

} // namespace rsiplan
