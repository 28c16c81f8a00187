#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsiplan/geo.hpp"

namespace rsiplan {

// 3GPP defines 838 Zadoff-Chu root sequences, so valid RSIs are 0..837.
inline constexpr int kRootSequenceCount = 838;
inline constexpr int kMaxRsi = kRootSequenceCount - 1;

// One radio cell as exported from configuration/inventory management.
struct Cell {
    std::string cell_id;
    double latitude = 0.0;     // degrees, [-90, 90]
    double longitude = 0.0;    // degrees, [-180, 180]
    double bearing_deg = 0.0;  // antenna azimuth, [0, 360) clockwise from north
    std::uint32_t channel = 0; // frequency channel number (EARFCN-like)
    std::optional<int> rsi;    // currently configured root sequence index

    GeoPoint position() const { return GeoPoint{latitude, longitude}; }
};

struct IngestConfig {
    double radius_km = 5.0; // candidate-search radius
    int conflict_rank = 1;  // top-cost neighbors kept per cell
};

// Parses the cell-site CSV (`cell_id,lat,lon,bearing_deg,channel,rsi`, header
// required, `rsi` may be empty). Bearings are normalized to [0, 360).
// Throws std::runtime_error naming the offending line on malformed rows,
// out-of-range values, or duplicate cell ids.
std::vector<Cell> parse_cells(std::string_view csv_text);

std::string cells_to_csv(std::span<const Cell> cells);

} // namespace rsiplan
