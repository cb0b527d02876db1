#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace evnet {

// mean Earth radius, km
inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr double kPi = 3.14159265358979323846;

struct GeoPoint {
    double lat = 0.0; // degrees, [-90, 90]
    double lon = 0.0; // degrees, [-180, 180]

    GeoPoint() = default;
    GeoPoint(double lat_deg, double lon_deg) : lat(lat_deg), lon(lon_deg) {
        if (!(lat >= -90.0 && lat <= 90.0))
            throw std::invalid_argument("GeoPoint: latitude out of [-90, 90]");
        if (!(lon >= -180.0 && lon <= 180.0))
            throw std::invalid_argument("GeoPoint: longitude out of [-180, 180]");
    }

    friend bool operator==(const GeoPoint& a, const GeoPoint& b) {
        return a.lat == b.lat && a.lon == b.lon;
    }
};

inline double deg2rad(double d) { return d * (kPi / 180.0); }

// Haversine great-circle distance on the mean-radius sphere.
inline double geodesic_km(const GeoPoint& a, const GeoPoint& b) {
    double dlat = deg2rad(b.lat - a.lat);
    double dlon = deg2rad(b.lon - a.lon);
    double slat = std::sin(dlat / 2.0);
    double slon = std::sin(dlon / 2.0);
    double h = slat * slat + slon * slon * std::cos(deg2rad(a.lat)) * std::cos(deg2rad(b.lat));
    if (h > 1.0) h = 1.0;
    if (h < 0.0) h = 0.0;
    return 2.0 * kEarthRadiusKm * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

// Component-wise arithmetic mean of coordinates in degrees. Adequate at
// province scale; callers must not feed points straddling the antimeridian.
inline GeoPoint centroid(std::span<const GeoPoint> points) {
    if (points.empty()) throw std::invalid_argument("centroid: empty point set");
    double lat = 0.0, lon = 0.0;
    for (const auto& p : points) {
        lat += p.lat;
        lon += p.lon;
    }
    double n = static_cast<double>(points.size());
    return GeoPoint(lat / n, lon / n);
}

inline GeoPoint centroid(const std::vector<GeoPoint>& points) {
    return centroid(std::span<const GeoPoint>(points.data(), points.size()));
}

} // namespace evnet
