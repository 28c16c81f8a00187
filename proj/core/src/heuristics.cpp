#include "rsiplan/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rsiplan/rng.hpp"

namespace rsiplan {

namespace {

// Shared state for incremental sequential coloring.
struct GreedyState {
    explicit GreedyState(int n) : colors(n, -1), mark(n + 1, -1) {}

    // Smallest color not present among v's colored neighbors.
    int smallest_free(const ConflictGraph& g, int v) {
        for (int u : g.neighbors(v)) {
            if (colors[u] >= 0) mark[colors[u]] = v;
        }
        int c = 0;
        while (mark[c] == v) ++c;
        return c;
    }

    void set(int v, int c) {
        colors[v] = c;
        max_color = std::max(max_color, c);
    }

    Coloring finish() const {
        const int n = static_cast<int>(colors.size());
        Coloring out(n, n == 0 ? 0 : max_color + 1);
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0) out.assign(v, colors[v]);
        }
        return out;
    }

    std::vector<int> colors;
    std::vector<int> mark; // mark[c] == v means color c is blocked for v
    int max_color = 0;
};

} // namespace

Sequence::Sequence(std::vector<int> order, int num_vertices) : order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != num_vertices) {
        throw std::invalid_argument("Sequence: length " + std::to_string(order_.size()) +
                                    " does not cover " + std::to_string(num_vertices) + " vertices");
    }
    std::vector<char> seen(num_vertices, 0);
    for (int v : order_) {
        if (v < 0 || v >= num_vertices || seen[v]) {
            throw std::invalid_argument("Sequence: not a permutation");
        }
        seen[v] = 1;
    }
}

Sequence Sequence::identity(int num_vertices) {
    std::vector<int> order(num_vertices);
    std::iota(order.begin(), order.end(), 0);
    return Sequence(std::move(order), num_vertices);
}

Coloring greedy_color(const ConflictGraph& g, const Sequence& s) {
    if (s.size() != g.num_vertices()) {
        throw std::invalid_argument("greedy_color: sequence does not match graph");
    }
    GreedyState state(g.num_vertices());
    for (int v : s.order()) {
        state.set(v, state.smallest_free(g, v));
    }
    return state.finish();
}

Coloring random_sequential(const ConflictGraph& g, std::uint64_t seed) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    return greedy_color(g, Sequence(std::move(order), g.num_vertices()));
}

Coloring connected_sequential(const ConflictGraph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    GreedyState state(n);
    Rng rng(seed);

    std::vector<char> visited(n, 0);
    std::vector<char> queued(n, 0);
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;

        // collect the component so the start can be drawn uniformly from it
        std::vector<int> component{root};
        visited[root] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (int u : g.neighbors(component[head])) {
                if (!visited[u]) {
                    visited[u] = 1;
                    component.push_back(u);
                }
            }
        }

        // breadth-first wavefront: every vertex after the start is adjacent
        // to an already-colored one; sorted adjacency makes discovery within
        // a layer ascend by index
        const int start = component[rng.next_below(component.size())];
        std::vector<int> queue{start};
        queued[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            state.set(v, state.smallest_free(g, v));
            for (int u : g.neighbors(v)) {
                if (!queued[u]) {
                    queued[u] = 1;
                    queue.push_back(u);
                }
            }
        }
    }
    return state.finish();
}

Coloring independent_set_color(const ConflictGraph& g) {
    const int n = g.num_vertices();
    GreedyState state(n);

    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> sub_degree(n, 0);
    std::vector<char> removed(n, 0);

    int color = 0;
    while (!remaining.empty()) {
        for (int v : remaining) {
            int d = 0;
            for (int u : g.neighbors(v)) {
                if (!removed[u]) ++d;
            }
            sub_degree[v] = d;
        }
        std::vector<int> order = remaining;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (sub_degree[a] != sub_degree[b]) return sub_degree[a] < sub_degree[b];
            return a < b;
        });

        std::vector<char> in_set(n, 0);
        std::vector<int> independent;
        for (int v : order) {
            bool blocked = false;
            for (int u : g.neighbors(v)) {
                if (in_set[u]) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                in_set[v] = 1;
                independent.push_back(v);
            }
        }

        for (int v : independent) {
            state.set(v, color);
            removed[v] = 1;
        }
        std::erase_if(remaining, [&](int v) { return removed[v]; });
        ++color;
    }
    return state.finish();
}

Coloring largest_first(const ConflictGraph& g) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return greedy_color(g, Sequence(std::move(order), g.num_vertices()));
}

Coloring dsatur(const ConflictGraph& g) {
    const int n = g.num_vertices();
    GreedyState state(n);

    // seen[v][c]: color c already present in v's neighborhood
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    std::vector<int> saturation(n, 0);
    std::vector<int> uncolored_deg(n);
    for (int v = 0; v < n; ++v) uncolored_deg[v] = g.degree(v);

    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (state.colors[v] >= 0) continue;
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && uncolored_deg[v] > uncolored_deg[pick])) {
                pick = v;
            }
        }
        const int c = state.smallest_free(g, pick);
        state.set(pick, c);
        for (int u : g.neighbors(pick)) {
            --uncolored_deg[u];
            if (!seen[u][c]) {
                seen[u][c] = 1;
                ++saturation[u];
            }
        }
    }
    return state.finish();
}

bool is_heuristic_name(std::string_view name) {
    for (std::string_view known : kHeuristicNames) {
        if (name == known) return true;
    }
    return false;
}

Coloring run_heuristic(std::string_view name, const ConflictGraph& g, std::uint64_t seed) {
    if (name == "rs") return random_sequential(g, seed);
    if (name == "cs") return connected_sequential(g, seed);
    if (name == "is") return independent_set_color(g);
    if (name == "lf") return largest_first(g);
    if (name == "ds") return dsatur(g);
    throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
}

} // namespace rsiplan
