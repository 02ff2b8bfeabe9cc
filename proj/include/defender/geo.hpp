#pragma once

#include <cmath>

namespace defender {

inline constexpr double kEarthRadiusKm = 6371.0088;  // mean Earth radius

inline double deg2rad(double d) { return d * (3.14159265358979323846 / 180.0); }

/// Great-circle distance in km between two (lat, lon) points in degrees.
inline double haversine_km(double lat1, double lon1, double lat2, double lon2) {
    const double phi1 = deg2rad(lat1), phi2 = deg2rad(lat2);
    const double dphi = phi2 - phi1;
    const double dlam = deg2rad(lon2 - lon1);
    const double sp = std::sin(dphi / 2.0), sl = std::sin(dlam / 2.0);
    double a = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
    if (a > 1.0) a = 1.0;
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(a));
}

struct LatLon {
    double lat = 0.0;
    double lon = 0.0;
};

}  // namespace defender
