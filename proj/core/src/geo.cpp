#include "rsiplan/geo.hpp"

#include <cmath>
#include <stdexcept>

namespace rsiplan {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Points closer than this are treated as coincident (~1 micron).
constexpr double kCoincidentKm = 1e-9;

} // namespace

double great_circle_km(GeoPoint a, GeoPoint b) {
    const double phi1 = deg2rad(a.lat_deg);
    const double phi2 = deg2rad(b.lat_deg);
    const double dphi = deg2rad(b.lat_deg - a.lat_deg);
    const double dlambda = deg2rad(b.lon_deg - a.lon_deg);

    const double s1 = std::sin(dphi / 2.0);
    const double s2 = std::sin(dlambda / 2.0);
    double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
    if (h > 1.0) h = 1.0; // rounding guard for antipodal points
    return kEarthRadiusKm * 2.0 * std::asin(std::sqrt(h));
}

double initial_bearing_deg(GeoPoint from, GeoPoint to) {
    if (great_circle_km(from, to) < kCoincidentKm) {
        throw std::invalid_argument("initial_bearing_deg: coincident points have no bearing");
    }
    const double phi1 = deg2rad(from.lat_deg);
    const double phi2 = deg2rad(to.lat_deg);
    const double dlambda = deg2rad(to.lon_deg - from.lon_deg);

    const double y = std::sin(dlambda) * std::cos(phi2);
    const double x = std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
    return normalize_bearing_deg(rad2deg(std::atan2(y, x)));
}

double normalize_bearing_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    if (r >= 360.0) r = 0.0; // fmod can land exactly on 360 after the add
    return r;
}

} // namespace rsiplan
