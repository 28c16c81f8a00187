#pragma once

#include <cstdint>
#include <vector>

#include "rsiplan/cell.hpp"

namespace rsiplan {

// Desk-scale stand-in for a commercial network export: sites placed uniformly
// in a disk, each carrying sectors_per_site co-sited cells with evenly spread
// bearings (0/120/240 for three sectors), all on one channel.
struct SynthConfig {
    int num_cells = 200;
    double disk_radius_km = 8.0;
    int sectors_per_site = 3;
    std::uint32_t channel = 1300;
    double center_lat_deg = 60.17;
    double center_lon_deg = 24.94;
};

std::vector<Cell> generate_synthetic_cells(const SynthConfig& cfg, std::uint64_t seed);

} // namespace rsiplan
