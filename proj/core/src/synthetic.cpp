#include "rsiplan/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rsiplan/geo.hpp"
#include "rsiplan/rng.hpp"

namespace rsiplan {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

std::vector<Cell> generate_synthetic_cells(const SynthConfig& cfg, std::uint64_t seed) {
    if (cfg.num_cells < 1) throw std::invalid_argument("generate_synthetic_cells: num_cells must be >= 1");
    if (cfg.disk_radius_km <= 0.0) throw std::invalid_argument("generate_synthetic_cells: disk_radius_km must be positive");
    if (cfg.sectors_per_site < 1) throw std::invalid_argument("generate_synthetic_cells: sectors_per_site must be >= 1");

    const double deg_per_km_lat = 180.0 / (kPi * kEarthRadiusKm);
    const double deg_per_km_lon =
        deg_per_km_lat / std::cos(cfg.center_lat_deg * kPi / 180.0);

    Rng rng(seed);
    std::vector<Cell> cells;
    cells.reserve(cfg.num_cells);

    int site = 0;
    while (static_cast<int>(cells.size()) < cfg.num_cells) {
        ++site;
        // uniform over the disk area
        const double r = cfg.disk_radius_km * std::sqrt(rng.next_double());
        const double theta = 2.0 * kPi * rng.next_double();
        const double north_km = r * std::cos(theta);
        const double east_km = r * std::sin(theta);
        const double lat = cfg.center_lat_deg + north_km * deg_per_km_lat;
        const double lon = cfg.center_lon_deg + east_km * deg_per_km_lon;

        for (int s = 0; s < cfg.sectors_per_site && static_cast<int>(cells.size()) < cfg.num_cells; ++s) {
            char id[16];
            std::snprintf(id, sizeof id, "s%04d%c", site, static_cast<char>('a' + s));
            Cell cell;
            cell.cell_id = id;
            cell.latitude = lat;
            cell.longitude = lon;
            cell.bearing_deg = s * 360.0 / cfg.sectors_per_site;
            cell.channel = cfg.channel;
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace rsiplan
