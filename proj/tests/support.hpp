#pragma once

#include <cmath>
#include <random>

#include "gt/fuchsian.hpp"
#include "gt/isometry.hpp"

namespace gt::testing {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 r(20240611);
    return r;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline Vec2 disk_point(double radius = 0.8)
{
    double r = radius * std::sqrt(uniform(0.0, 1.0));
    double a = uniform(0.0, 2.0 * M_PI);
    return Vec2(r * std::cos(a), r * std::sin(a));
}

inline Vec3 ideal_point(double angle) { return Vec3(1.0, std::cos(angle), std::sin(angle)); }

inline SpacelikeGeodesicH2 random_axis()
{
    double a = uniform(0.0, 2.0 * M_PI);
    double b = a + uniform(0.3, 2.0 * M_PI - 0.3);
    return SpacelikeGeodesicH2::from_endpoints(ideal_point(a), ideal_point(b));
}

// Oriented geodesic at distance at most dmax from the origin.
inline SpacelikeGeodesicH2 near_axis(double dmax)
{
    double d = uniform(-dmax, dmax), a = uniform(0.0, 2.0 * M_PI);
    return SpacelikeGeodesicH2(Vec3(std::sinh(d), std::cosh(d) * std::cos(a), std::cosh(d) * std::sin(a)));
}

inline Mat3 boost_x(double s)
{
    Mat3 m = Mat3::Identity();
    m(0, 0) = m(1, 1) = std::cosh(s);
    m(0, 1) = m(1, 0) = std::sinh(s);
    return m;
}

inline Mat3 turn(double a)
{
    Mat3 m = Mat3::Identity();
    m(1, 1) = m(2, 2) = std::cos(a);
    m(1, 2) = -std::sin(a);
    m(2, 1) = std::sin(a);
    return m;
}

inline Mat3 random_lorentz(double size = 1.0)
{
    return turn(uniform(0, 2 * M_PI)) * boost_x(uniform(-size, size)) * turn(uniform(0, 2 * M_PI));
}

inline Vec3 random_minkowski(double size = 1.0)
{
    return Vec3(uniform(-size, size), uniform(-size, size), uniform(-size, size));
}

inline std::string random_word(int max_len)
{
    static const char letters[] = "ABab";
    int len = std::uniform_int_distribution<int>(1, max_len)(rng());
    std::string w;
    for (int i = 0; i < len; ++i) w += letters[std::uniform_int_distribution<int>(0, 3)(rng())];
    return reduce_word(w);
}

inline double rel_diff(const Mat4& a, const Mat4& b)
{
    return max_abs(a - b) / std::max(1.0, std::max(max_abs(a), max_abs(b)));
}

}  // namespace gt::testing
