#pragma once

namespace rsiplan {

struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

inline constexpr double kEarthRadiusKm = 6371.0;

// Haversine distance in kilometers on a sphere of radius kEarthRadiusKm.
double great_circle_km(GeoPoint a, GeoPoint b);

// Initial great-circle bearing from `from` towards `to`, degrees clockwise
// from true north in [0, 360). Throws std::invalid_argument for coincident
// points (bearing undefined).
double initial_bearing_deg(GeoPoint from, GeoPoint to);

// Maps any angle in degrees onto [0, 360).
double normalize_bearing_deg(double deg);

} // namespace rsiplan
