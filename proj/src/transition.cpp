#include "gt/transition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gt {

std::vector<double> default_grid()
{
    std::vector<double> g;
    for (double t : {1e-4, 1e-3, 1e-2, 1e-1}) {
        g.push_back(-t);
        g.push_back(t);
    }
    return g;
}

Geometry side_geometry(double t) { return t > 0.0 ? Geometry::Hyp : Geometry::AdS; }

TransitionFamily make_family(const std::string& label, std::vector<double> grid,
                             const std::function<Mat4(double)>& unscaled)
{
    for (double t : grid)
        if (t == 0.0 || !std::isfinite(t)) throw Error(ErrorCode::InsufficientGrid, "grid values must be finite and nonzero");
    std::stable_sort(grid.begin(), grid.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    TransitionFamily f;
    f.label = label;
    f.grid = grid;
    f.values.reserve(grid.size());
    for (double t : grid) f.values.push_back(rescale_conjugate(t, unscaled(t)));
    return f;
}

TransitionFamily holonomy_family(const BendingContext& base, const std::string& word, const std::vector<double>& grid)
{
    return make_family(word, grid, [&](double t) { return bent_holonomy(base.with(side_geometry(t), t), word).m; });
}

TransitionFamily rotation_family(const SpacelikeGeodesicH2& axis, double a, const std::vector<double>& grid)
{
    return make_family("rotation", grid, [&](double t) { return rotation(side_geometry(t), axis, a * t).m; });
}

Mat4 projective_normalize(const Mat4& m)
{
    if (std::abs(m(3, 3)) > 1e-12) return m / m(3, 3);
    double n = m.norm();
    if (n == 0.0) throw Error(ErrorCode::ZeroVector, "zero matrix");
    return m / n;
}

double projective_gap(const Mat4& a, const Mat4& b) { return max_abs(projective_normalize(a) - projective_normalize(b)); }

double fit_order(const std::vector<double>& t, const std::vector<double>& r, double floor)
{
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.size() && i < r.size(); ++i)
        if (r[i] > floor) {
            lx.push_back(std::log(std::abs(t[i])));
            ly.push_back(std::log(r[i]));
        }
    if (lx.size() < 2) return std::numeric_limits<double>::infinity();
    double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
    double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (sxx == 0.0) return std::numeric_limits<double>::infinity();
    return sxy / sxx;
}

Mat4 neville_at_zero(const std::vector<double>& t, const std::vector<Mat4>& m)
{
    std::size_t n = t.size();
    if (n == 0 || m.size() != n) throw Error(ErrorCode::InsufficientGrid, "empty extrapolation table");
    std::vector<Mat4> p(m.begin(), m.end());
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i) {
            double a = t[i], b = t[i + k];
            p[i] = (b * p[i] - a * p[i + 1]) / (b - a);
        }
    return p[0];
}

namespace {

struct Side {
    std::vector<double> t;  // |grid value|, increasing
    std::vector<Mat4> m;
    std::vector<std::size_t> idx;
};

// Order of the leading correction, read off successive differences.
double difference_order(const Side& s, double floor)
{
    std::vector<double> t, d;
    for (std::size_t k = 0; k + 1 < s.t.size(); ++k) {
        t.push_back(s.t[k + 1]);
        d.push_back(max_abs(s.m[k + 1] - s.m[k]));
    }
    return fit_order(t, d, floor);
}

// Even families (no odd term measured) are interpolated in t^2.
Mat4 side_limit(const Side& s, bool& even)
{
    double scale = 1.0;
    for (const auto& m : s.m) scale = std::max(scale, max_abs(m));
    even = difference_order(s, 1e-13 * scale) > 1.5;
    if (!even) return neville_at_zero(s.t, s.m);
    std::vector<double> sq;
    for (double t : s.t) sq.push_back(t * t);
    return neville_at_zero(sq, s.m);
}

Side split(const TransitionFamily& f, bool positive)
{
    Side s;
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        if ((f.grid[i] > 0.0) == positive) {
            s.t.push_back(std::abs(f.grid[i]));
            s.m.push_back(projective_normalize(f.values[i]));
            s.idx.push_back(i);
        }
    return s;
}

}  // namespace

ConvergenceReport extrapolate_limit(const TransitionFamily& f)
{
    Side pos = split(f, true), neg = split(f, false);
    if (pos.t.size() < 3 || neg.t.size() < 3)
        throw Error(ErrorCode::InsufficientGrid, "at least three grid values per side are required");
    ConvergenceReport r;
    r.label = f.label;
    r.grid = f.grid;
    r.residuals.assign(f.grid.size(), 0.0);
    r.limit_pos = side_limit(pos, r.even_pos);
    r.limit_neg = side_limit(neg, r.even_neg);
    double scale = std::max(1.0, max_abs(r.limit_pos));
    for (Side* s : {&pos, &neg}) {
        const Mat4& lim = s == &pos ? r.limit_pos : r.limit_neg;
        std::vector<double> res;
        for (std::size_t k = 0; k < s->t.size(); ++k) {
            double d = max_abs(s->m[k] - lim);
            r.residuals[s->idx[k]] = d;
            res.push_back(d);
        }
        double order = fit_order(s->t, res, 1e-13 * scale);
        (s == &pos ? r.order_pos : r.order_neg) = order;
    }
    r.two_sided_gap = max_abs(r.limit_pos - r.limit_neg);
    return r;
}

std::vector<double> residuals_against(const TransitionFamily& f, const Mat4& target)
{
    std::vector<double> out;
    for (const auto& m : f.values) out.push_back(projective_gap(m, target));
    return out;
}

PleatedReport pleated_surface_convergence(const BendingContext& base, const std::vector<Vec2>& samples,
                                          const std::vector<double>& grid)
{
    std::vector<double> g = grid;
    std::stable_sort(g.begin(), g.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    BendingContext hp = base.with(Geometry::HP, 1.0);
    std::vector<Vec3> limit;
    for (const auto& x : samples) limit.push_back(affine_chart(bending_map(hp, x).rep));

    PleatedReport rep;
    rep.grid = g;
    for (double t : g) {
        if (t == 0.0) throw Error(ErrorCode::InsufficientGrid, "grid values must be nonzero");
        BendingContext c = base.with(side_geometry(t), t);
        Mat4 tau = rescaling_matrix(t);
        double worst = 0.0;
        int wi = -1;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            Vec4 p = tau * bending_map(c, samples[i]).rep;
            double d = (affine_chart(p) - limit[i]).norm();
            if (d > worst || wi < 0) {
                worst = d;
                wi = static_cast<int>(i);
            }
        }
        rep.max_residuals.push_back(worst);
        rep.worst_sample.push_back(wi);
    }
    std::vector<double> tp, rp, tn, rn;
    for (std::size_t i = 0; i < g.size(); ++i) {
        (g[i] > 0 ? tp : tn).push_back(g[i]);
        (g[i] > 0 ? rp : rn).push_back(rep.max_residuals[i]);
    }
    rep.order_pos = fit_order(tp, rp);
    rep.order_neg = fit_order(tn, rn);
    return rep;
}

double width_bound(double norm)
{
    if (!(norm >= 0.0)) throw Error(ErrorCode::ConfigError, "norm must be nonnegative");
    return std::atan(std::sinh(norm / 2.0));
}

double width_linear_bound(double t, double c) { return c * std::abs(t); }

ProjectivePoint ideal_geodesic_point(Geometry g, const ProjectivePoint& x, const Vec4& v, double d)
{
    Vec4 xt = unit_lift(g, x.rep);
    double vv = form_eval(g, v);
    double scale = std::max(1.0, v.norm() * xt.norm());
    if (std::abs(vv - 1.0) > 1e-9 || std::abs(form_pair(g, xt, v)) > 1e-9 * scale)
        throw Error(ErrorCode::BadTangent, "tangent must be unit spacelike and orthogonal to the point");
    return ProjectivePoint(Vec4(std::cosh(d) * xt + std::sinh(d) * v));
}

Vec4 tangent_toward_ideal(Geometry g, const ProjectivePoint& x, const Vec4& p)
{
    Vec4 xt = unit_lift(g, x.rep);
    double c = -form_pair(g, xt, p);
    if (std::abs(form_eval(g, p)) > 1e-9 * p.squaredNorm() || !(c > 0.0))
        throw Error(ErrorCode::BadTangent, "target is not an ideal point seen from x");
    return p / c - xt;
}

ReflectionLimitReport reflection_limit_check(const std::function<Plane(double)>& planes, const Plane& p0,
                                             const std::vector<double>& grid)
{
    if (p0.tag != Geometry::HP) throw Error(ErrorCode::TagMismatch, "limit plane must be a half-pipe plane");
    Mat4 target = reflection(p0).m;
    TransitionFamily f = make_family("reflection", grid, [&](double t) {
        Plane p = planes(t);
        if (p.tag != side_geometry(t)) throw Error(ErrorCode::TagMismatch, "plane family has the wrong side geometry");
        return reflection(p).m;
    });
    ConvergenceReport c = extrapolate_limit(f);
    ReflectionLimitReport r;
    r.grid = f.grid;
    r.residuals = residuals_against(f, target);
    std::vector<double> tp, rp, tn, rn;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        (f.grid[i] > 0 ? tp : tn).push_back(f.grid[i]);
        (f.grid[i] > 0 ? rp : rn).push_back(r.residuals[i]);
    }
    r.order_pos = fit_order(tp, rp);
    r.order_neg = fit_order(tn, rn);
    r.limit = c.limit();
    r.limit_error = std::max(projective_gap(c.limit_pos, target), projective_gap(c.limit_neg, target));
    return r;
}

}  // namespace gt
