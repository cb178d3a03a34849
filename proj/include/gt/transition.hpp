#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gt/bending.hpp"

namespace gt {

// Default t-grid: ±1e-1, ±1e-2, ±1e-3, ±1e-4.
std::vector<double> default_grid();

// Hyp for t > 0, AdS for t < 0.
Geometry side_geometry(double t);

// Values of the conjugated family tau_t m(t) tau_t^-1, sorted by |t| ascending.
struct TransitionFamily {
    std::string label;
    std::vector<double> grid;
    std::vector<Mat4> values;
};

TransitionFamily make_family(const std::string& label, std::vector<double> grid,
                             const std::function<Mat4(double)>& unscaled);

// The bent holonomy of `word` with weights scaled by t, on the fixed base of ctx.
TransitionFamily holonomy_family(const BendingContext& base, const std::string& word,
                                 const std::vector<double>& grid = default_grid());

// Rotations of angle a*t about a fixed axis.
TransitionFamily rotation_family(const SpacelikeGeodesicH2& axis, double a,
                                 const std::vector<double>& grid = default_grid());

// Bottom-right entry scaled to 1 when nonzero, otherwise unit Frobenius norm.
Mat4 projective_normalize(const Mat4& m);
double projective_gap(const Mat4& a, const Mat4& b);

// Slope of log r against log|t|; infinity when fewer than two residuals sit
// above the roundoff floor.
double fit_order(const std::vector<double>& t, const std::vector<double>& r, double floor = 1e-13);

// Polynomial extrapolation to 0 through all samples (nodes t, values m).
Mat4 neville_at_zero(const std::vector<double>& t, const std::vector<Mat4>& m);

struct ConvergenceReport {
    std::string label;
    std::vector<double> grid;
    std::vector<double> residuals;  // against the limit of the sample's own side
    Mat4 limit_pos = Mat4::Identity();
    Mat4 limit_neg = Mat4::Identity();
    double order_pos = std::numeric_limits<double>::infinity();
    double order_neg = std::numeric_limits<double>::infinity();
    double two_sided_gap = 0.0;
    bool even_pos = false;  // extrapolated in t^2
    bool even_neg = false;

    Mat4 limit() const { return 0.5 * (limit_pos + limit_neg); }
};

ConvergenceReport extrapolate_limit(const TransitionFamily& f);

// Distances of every family member to a fixed target, projectively normalized.
std::vector<double> residuals_against(const TransitionFamily& f, const Mat4& target);

struct PleatedReport {
    std::vector<double> grid;
    std::vector<double> max_residuals;  // over samples, per grid value
    std::vector<int> worst_sample;
    double order_pos = 0.0;
    double order_neg = 0.0;
};

// Chart distance between tau_t of the bent surface at scale t and the HP bent surface.
PleatedReport pleated_surface_convergence(const BendingContext& base, const std::vector<Vec2>& samples,
                                          const std::vector<double>& grid = default_grid());

double width_bound(double norm);
double width_linear_bound(double t, double c);

// [cosh(d) x + sinh(d) v] for the unit lift x and a unit spacelike tangent v.
ProjectivePoint ideal_geodesic_point(Geometry g, const ProjectivePoint& x, const Vec4& v, double d);

// Unit tangent at x of the ray towards the ideal point p.
Vec4 tangent_toward_ideal(Geometry g, const ProjectivePoint& x, const Vec4& p);

struct ReflectionLimitReport {
    std::vector<double> grid;
    std::vector<double> residuals;  // against the HP reflection in the limit plane
    double order_pos = 0.0;
    double order_neg = 0.0;
    Mat4 limit = Mat4::Identity();  // extrapolated
    double limit_error = 0.0;
};

// planes(t) must carry the side geometry of t; p0 is a spacelike HP plane.
ReflectionLimitReport reflection_limit_check(const std::function<Plane(double)>& planes, const Plane& p0,
                                             const std::vector<double>& grid = default_grid());

}  // namespace gt
