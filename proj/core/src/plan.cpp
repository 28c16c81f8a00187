#include "rsiplan/plan.hpp"

#include <set>
#include <stdexcept>

#include "rsiplan/cell.hpp"

namespace rsiplan {

Plan make_plan(const ConflictGraph& g, const Coloring& c, std::span<const int> rsi_palette) {
    if (!is_legal(g, c)) {
        throw std::invalid_argument("make_plan: coloring is not legal");
    }
    if (colors_used(c) > static_cast<int>(rsi_palette.size())) {
        throw std::invalid_argument("make_plan: palette of " + std::to_string(rsi_palette.size()) +
                                    " RSIs smaller than " + std::to_string(colors_used(c)) +
                                    " colors used");
    }
    std::set<int> distinct;
    for (int rsi : rsi_palette) {
        if (rsi < 0 || rsi > kMaxRsi) {
            throw std::invalid_argument("make_plan: RSI " + std::to_string(rsi) +
                                        " outside [0, 837]");
        }
        if (!distinct.insert(rsi).second) {
            throw std::invalid_argument("make_plan: duplicate RSI " + std::to_string(rsi) +
                                        " in palette");
        }
    }

    Plan plan;
    plan.palette.assign(rsi_palette.begin(), rsi_palette.end());
    plan.entries.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int color = *c.color(v);
        if (color >= static_cast<int>(rsi_palette.size())) {
            throw std::invalid_argument("make_plan: color index beyond palette");
        }
        plan.entries.push_back(PlanEntry{g.label(v), color, rsi_palette[color]});
    }
    return plan;
}

std::string plan_to_csv(const Plan& plan) {
    std::string out = "cell_id,color,rsi\n";
    for (const PlanEntry& e : plan.entries) {
        out += e.cell_id;
        out += ',';
        out += std::to_string(e.color);
        out += ',';
        out += std::to_string(e.rsi);
        out += '\n';
    }
    return out;
}

} // namespace rsiplan
