#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "rsiplan/bench.hpp"

namespace rsiplan {

namespace {

// chart geometry
constexpr double kWidth = 680.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 64.0;
constexpr double kRight = kWidth - 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = kHeight - 48.0;

constexpr const char* kSeriesColors[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Series {
    std::string name;
    std::vector<std::pair<int, double>> points; // (rank, mean)
};

} // namespace

std::string emit_plot(std::span<const BenchmarkRecord> records, PlotKind kind) {
    if (records.empty()) throw std::invalid_argument("emit_plot: no records");

    // mean per (algorithm, rank) over legal records
    std::map<std::string, std::map<int, std::pair<double, int>>> sums;
    for (const BenchmarkRecord& r : records) {
        if (!r.legal) continue;
        const double y = kind == PlotKind::kColors ? static_cast<double>(r.colors_used)
                                                   : r.wall_time_ms;
        auto& [sum, count] = sums[r.algorithm][r.conflict_rank];
        sum += y;
        count += 1;
    }
    if (sums.empty()) throw std::invalid_argument("emit_plot: no legal records");

    std::vector<Series> series;
    std::vector<int> ranks;
    double y_min = 0.0;
    double y_max = 0.0;
    bool first_value = true;
    for (const auto& [name, by_rank] : sums) {
        Series s;
        s.name = name;
        for (const auto& [rank, acc] : by_rank) {
            const double mean = acc.first / acc.second;
            s.points.emplace_back(rank, mean);
            ranks.push_back(rank);
            if (first_value) {
                y_min = y_max = mean;
                first_value = false;
            } else {
                y_min = std::min(y_min, mean);
                y_max = std::max(y_max, mean);
            }
        }
        series.push_back(std::move(s));
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

    // declared rule: runtime switches to log axis when the spread passes 100x
    const bool log_scale =
        kind == PlotKind::kRuntime && y_min > 0.0 && y_max / y_min > 100.0;

    const int x_lo = ranks.front();
    const int x_hi = ranks.back();
    auto x_pos = [&](int rank) {
        if (x_lo == x_hi) return (kLeft + kRight) / 2.0;
        return kLeft + (kRight - kLeft) * (rank - x_lo) / static_cast<double>(x_hi - x_lo);
    };

    double lo = y_min;
    double hi = y_max;
    if (log_scale) {
        lo = std::log10(y_min);
        hi = std::log10(y_max);
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        const double pad = (hi - lo) * 0.08;
        lo -= pad;
        hi += pad;
    }
    auto y_pos = [&](double value) {
        const double v = log_scale ? std::log10(std::max(value, 1e-12)) : value;
        return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string title = kind == PlotKind::kColors
                                  ? "Colors used vs conflict rank"
                                  : "Solve time (ms) vs conflict rank";
    svg += "<text x=\"" + num((kLeft + kRight) / 2.0) +
           "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" +
           title + (log_scale ? " [log scale]" : "") + "</text>\n";

    // axes
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";

    for (int rank : ranks) {
        const double x = x_pos(rank);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(kBottom + 4) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               std::to_string(rank) + "</text>\n";
    }
    svg += "<text x=\"" + num((kLeft + kRight) / 2.0) + "\" y=\"" + num(kHeight - 10) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">conflict rank</text>\n";

    const int y_ticks = 5;
    for (int t = 0; t <= y_ticks; ++t) {
        const double v = lo + (hi - lo) * t / y_ticks;
        const double value = log_scale ? std::pow(10.0, v) : v;
        const double y = kBottom - (kBottom - kTop) * t / y_ticks;
        svg += "<line x1=\"" + num(kLeft - 4) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
               "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kRight) +
               "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               short_num(value) + "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kSeriesColors[i % (sizeof kSeriesColors / sizeof *kSeriesColors)];
        std::string points;
        for (const auto& [rank, mean] : series[i].points) {
            if (!points.empty()) points += ' ';
            points += num(x_pos(rank)) + "," + num(y_pos(mean));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        for (const auto& [rank, mean] : series[i].points) {
            svg += "<circle cx=\"" + num(x_pos(rank)) + "\" cy=\"" + num(y_pos(mean)) +
                   "\" r=\"3\" fill=\"" + std::string(color) + "\"/>\n";
        }
    }

    // legend
    const double legend_x = kRight + 16.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kSeriesColors[i % (sizeof kSeriesColors / sizeof *kSeriesColors)];
        const double y = kTop + 18.0 * i;
        svg += "<line x1=\"" + num(legend_x) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(legend_x + 22) + "\" y2=\"" + num(y) + "\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(legend_x + 28) + "\" y=\"" + num(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + series[i].name + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace rsiplan
