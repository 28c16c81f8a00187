#include "rsiplan/qubo.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rsiplan/min_colors.hpp"
#include "rsiplan/rng.hpp"
#include "rsiplan/samplers.hpp"
#include "test_util.hpp"

using namespace rsiplan;

namespace {

TEST(BuildQubo, TriangleStructure) {
    const auto k3 = testutil::complete_graph(3);
    const Qubo q = build_qubo(k3, 3, 1.0, 1.0);
    EXPECT_EQ(q.num_vars(), 9);
    EXPECT_DOUBLE_EQ(q.offset(), 3.0);
    EXPECT_EQ(q.num_vertices(), 3);
    EXPECT_EQ(q.num_colors(), 3);

    for (int i = 0; i < 9; ++i) EXPECT_DOUBLE_EQ(q.linear(i), -1.0);

    const auto terms = q.quadratic_terms();
    ASSERT_EQ(terms.size(), 18u); // 9 one-hot pairs + 3 edges * 3 colors
    int same_vertex = 0;
    int edge_pairs = 0;
    for (const QuadraticTerm& t : terms) {
        if (t.i / 3 == t.j / 3) {
            EXPECT_DOUBLE_EQ(t.coeff, 2.0);
            ++same_vertex;
        } else {
            EXPECT_EQ(t.i % 3, t.j % 3); // same color across an edge
            EXPECT_DOUBLE_EQ(t.coeff, 1.0);
            ++edge_pairs;
        }
    }
    EXPECT_EQ(same_vertex, 9);
    EXPECT_EQ(edge_pairs, 9);
}

TEST(BuildQubo, RejectsBadArguments) {
    const auto k3 = testutil::complete_graph(3);
    EXPECT_THROW(build_qubo(k3, 0), std::invalid_argument);
    EXPECT_THROW(build_qubo(k3, 2, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(build_qubo(k3, 2, 1.0, -2.0), std::invalid_argument);
}

TEST(Energy, AllZerosIsOffset) {
    for (double a : {1.0, 0.5, 3.25}) {
        const auto g = testutil::random_gnp(6, 0.4, 3);
        const Qubo q = build_qubo(g, 2, a, 1.0);
        EXPECT_DOUBLE_EQ(q.energy(BitVector(q.num_vars(), 0)), a * 6);
    }
}

TEST(Energy, LegalOneHotColoringIsZero) {
    const auto k3 = testutil::complete_graph(3);
    const Qubo q = build_qubo(k3, 3, 1.0, 1.0);
    Coloring c(3, 3);
    c.assign(0, 0);
    c.assign(1, 1);
    c.assign(2, 2);
    EXPECT_NEAR(q.energy(encode(c, q)), 0.0, 1e-12);
}

TEST(Energy, SingleVectorViolationCostsB) {
    for (double b : {1.0, 2.5}) {
        const auto k3 = testutil::complete_graph(3);
        const Qubo q = build_qubo(k3, 3, 1.0, b);
        Coloring c(3, 3);
        c.assign(0, 0);
        c.assign(1, 0); // one conflicting edge
        c.assign(2, 1);
        EXPECT_NEAR(q.energy(encode(c, q)), b, 1e-12);
    }
}

TEST(Energy, LengthMismatchThrows) {
    const Qubo q = build_qubo(testutil::complete_graph(2), 2);
    EXPECT_THROW(q.energy(BitVector(3, 0)), std::invalid_argument);
}

TEST(Energy, EdgelessSingleColorAllOnesIsZero) {
    const auto g = make_graph(4, {});
    const Qubo q = build_qubo(g, 1);
    EXPECT_NEAR(q.energy(BitVector(4, 1)), 0.0, 1e-12);
}

TEST(Expansion, MatchesDirectHamiltonianOnRandomInstances) {
    Rng rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + static_cast<int>(rng.next_below(8));
        const double p = rng.next_double();
        const auto g = testutil::random_gnp(n, p, rng.next_u64());
        const int colors = 1 + static_cast<int>(rng.next_below(4));
        const double a = 0.1 + rng.next_double() * 3.0;
        const double b = 0.1 + rng.next_double() * 3.0;
        const Qubo q = build_qubo(g, colors, a, b);
        const BitVector x = testutil::random_bits(q.num_vars(), rng.next_u64());
        EXPECT_NEAR(q.energy(x), testutil::direct_hamiltonian(g, colors, a, b, x), 1e-9);
    }
}

TEST(Encode, TriangleOneHotPositions) {
    const auto k3 = testutil::complete_graph(3);
    const Qubo q = build_qubo(k3, 3);
    Coloring c(3, 3);
    c.assign(0, 0);
    c.assign(1, 1);
    c.assign(2, 2);
    const BitVector x = encode(c, q);
    for (int i = 0; i < 9; ++i) {
        EXPECT_EQ(x[i], (i == 0 || i == 4 || i == 8) ? 1 : 0);
    }
    EXPECT_EQ(decode(x, q), c);
}

TEST(Encode, SingleVertex) {
    const auto g = make_graph(1, {});
    const Qubo q = build_qubo(g, 1);
    Coloring c(1, 1);
    c.assign(0, 0);
    EXPECT_EQ(encode(c, q), BitVector{1});
}

TEST(Encode, RejectsPartialAndMismatched) {
    const auto g = make_graph(2, {});
    const Qubo q = build_qubo(g, 2);
    EXPECT_THROW(encode(Coloring(2, 2), q), std::invalid_argument); // partial
    Coloring wrong_palette(2, 3);
    wrong_palette.assign(0, 0);
    wrong_palette.assign(1, 0);
    EXPECT_THROW(encode(wrong_palette, q), std::invalid_argument);
}

TEST(Decode, ViolationsSurfaceAsUnassigned) {
    const auto g = make_graph(2, {});
    const Qubo q = build_qubo(g, 2);
    // vertex 0: one-hot -> assigned; vertex 1: two bits -> unassigned
    const Coloring both = decode(BitVector{0, 1, 1, 1}, q);
    EXPECT_EQ(both.color(0), std::optional<int>(1));
    EXPECT_FALSE(both.color(1).has_value());
    // zero row -> unassigned
    const Coloring none = decode(BitVector{0, 0, 0, 1}, q);
    EXPECT_FALSE(none.color(0).has_value());
    EXPECT_THROW(decode(BitVector{1}, q), std::invalid_argument);
}

TEST(VarMap, RowMajorLayout) {
    const auto g = make_graph(3, {});
    const Qubo q = build_qubo(g, 4);
    for (int v = 0; v < 3; ++v) {
        for (int c = 0; c < 4; ++c) {
            EXPECT_EQ(q.variable(v, c), v * 4 + c);
        }
    }
    EXPECT_THROW(q.variable(3, 0), std::invalid_argument);
    EXPECT_THROW(q.variable(0, 4), std::invalid_argument);
    EXPECT_FALSE(Qubo(3).has_color_map());
}

TEST(OneHotViolations, CostAtLeastMinPenalty) {
    const double a = 0.7;
    const double b = 2.0;
    const auto g = testutil::random_gnp(5, 0.5, 12);
    const Qubo q = build_qubo(g, 3, a, b);

    Coloring legal(5, 3);
    // greedy legal coloring by hand: try colors in order
    for (int v = 0; v < 5; ++v) {
        for (int c = 0; c < 3; ++c) {
            legal.assign(v, c);
            if (count_conflicts(g, legal) == 0) break;
        }
    }
    if (is_legal(g, legal)) {
        BitVector x = encode(legal, q);
        // drop one vertex's bit: exactly the A*(1-0)^2 penalty remains
        x[q.variable(0, *legal.color(0))] = 0;
        EXPECT_NEAR(q.energy(x), a, 1e-12);
        EXPECT_GE(q.energy(x), std::min(a, b) - 1e-12);

        // double-set a row: (1-2)^2 * A plus possibly edge terms
        x = encode(legal, q);
        x[q.variable(0, (*legal.color(0) + 1) % 3)] = 1;
        EXPECT_GE(q.energy(x), std::min(a, b) - 1e-12);
    }
}

TEST(ZeroEnergyEquivalence, ExhaustiveOnTinyGraphs) {
    // all labeled graphs with up to 4 vertices, palettes up to 3
    for (int n = 1; n <= 4; ++n) {
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
            const auto g = make_graph(n, edges);
            for (int colors = 1; colors <= 3; ++colors) {
                const Qubo q = build_qubo(g, colors);
                const SampleSet ground = brute_force(q, 1);
                const bool zero_reachable = std::abs(ground.best().energy) <= 1e-9;
                EXPECT_EQ(zero_reachable, testutil::exists_legal_coloring(g, colors))
                    << "n=" << n << " mask=" << mask << " C=" << colors;
                if (zero_reachable) {
                    const Coloring c = decode(ground.best().x, q);
                    EXPECT_TRUE(is_legal(g, c));
                }
            }
        }
    }
}

TEST(TextFormat, RoundTrip) {
    const Qubo q = testutil::random_qubo(8, 555);
    const Qubo parsed = Qubo::from_text(q.to_text());
    EXPECT_EQ(parsed.num_vars(), q.num_vars());
    EXPECT_DOUBLE_EQ(parsed.offset(), q.offset());
    for (int i = 0; i < q.num_vars(); ++i) {
        EXPECT_DOUBLE_EQ(parsed.linear(i), q.linear(i));
    }
    EXPECT_EQ(parsed.quadratic_terms(), q.quadratic_terms());
}

TEST(TextFormat, HeaderAndErrors) {
    const auto k3 = testutil::complete_graph(3);
    const Qubo q = build_qubo(k3, 3);
    const std::string text = q.to_text();
    EXPECT_EQ(text.substr(0, text.find('\n')), "9 3");

    EXPECT_THROW(Qubo::from_text(""), std::runtime_error);
    EXPECT_THROW(Qubo::from_text("x y\n"), std::runtime_error);
    EXPECT_THROW(Qubo::from_text("2 0\n1 0 1.5\n"), std::runtime_error);  // i > j
    EXPECT_THROW(Qubo::from_text("2 0\n0 1 1\n0 1 2\n"), std::runtime_error); // duplicate
    EXPECT_THROW(Qubo::from_text("2 0\n0 2 1\n"), std::runtime_error);    // out of range
}

TEST(MinColors, ExactSolverFindsChromaticNumber) {
    const SolverParams params;
    const QuboSolver exact = make_solver("exact");

    const auto k3 = testutil::complete_graph(3);
    const auto r3 = min_colors_search(k3, exact, params, 3);
    EXPECT_EQ(r3.num_colors, 3);
    EXPECT_TRUE(is_legal(k3, r3.coloring));

    const auto p3 = testutil::path_graph(3);
    const auto r2 = min_colors_search(p3, exact, params, 3);
    EXPECT_EQ(r2.num_colors, 2);
    EXPECT_TRUE(is_legal(p3, r2.coloring));
    EXPECT_EQ(r2.qubo_solves, 3); // C=3 ok, C=2 ok, C=1 fails

    const auto edgeless = make_graph(5, {});
    const auto r1 = min_colors_search(edgeless, exact, params, 2);
    EXPECT_EQ(r1.num_colors, 1);

    EXPECT_THROW(min_colors_search(k3, exact, params, 2), InfeasibleError);
    EXPECT_THROW(min_colors_search(k3, exact, params, 0), std::invalid_argument);
}

TEST(MinColors, EmptyGraph) {
    const auto empty = make_graph(0, {});
    const auto r = min_colors_search(empty, make_solver("exact"), SolverParams{}, 1);
    EXPECT_EQ(r.num_colors, 0);
    EXPECT_EQ(r.qubo_solves, 0);
}

} // namespace
