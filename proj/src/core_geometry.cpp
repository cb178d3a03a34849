#include "gt/core_geometry.hpp"

#include <cmath>

namespace gt {

const char* to_string(Geometry g)
{
    switch (g) {
    case Geometry::Hyp: return "Hyp";
    case Geometry::AdS: return "AdS";
    case Geometry::HP: return "HP";
    }
    return "?";
}

Geometry geometry_from_string(const std::string& s)
{
    if (s == "Hyp" || s == "H3") return Geometry::Hyp;
    if (s == "AdS" || s == "AdS3") return Geometry::AdS;
    if (s == "HP" || s == "HP3") return Geometry::HP;
    throw Error(ErrorCode::ConfigError, "unknown geometry '" + s + "'");
}

double form_sign(Geometry g)
{
    switch (g) {
    case Geometry::Hyp: return 1.0;
    case Geometry::AdS: return -1.0;
    case Geometry::HP: return 0.0;
    }
    return 0.0;
}

Mat4 form_matrix(Geometry g) { return Vec4(-1.0, 1.0, 1.0, form_sign(g)).asDiagonal(); }

double form_eval(Geometry g, const Vec4& x)
{
    return -x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + form_sign(g) * x(3) * x(3);
}

double form_pair(Geometry g, const Vec4& x, const Vec4& y)
{
    return -x(0) * y(0) + x(1) * y(1) + x(2) * y(2) + form_sign(g) * x(3) * y(3);
}

Vec4 unit_lift(Geometry g, const Vec4& x)
{
    double q = (g == Geometry::HP) ? mink(x.head<3>(), x.head<3>()) : form_eval(g, x);
    if (!(q < 0.0)) throw Error(ErrorCode::NotInSpace, "point is not interior");
    Vec4 y = x / std::sqrt(-q);
    if (y(0) < 0.0 || (y(0) == 0.0 && y(3) < 0.0)) y = -y;
    return y;
}

static Vec4 euclid_normalized(const Vec4& a)
{
    double n = a.norm();
    if (n == 0.0) throw Error(ErrorCode::ZeroVector, "zero representative");
    return a / n;
}

double projective_distance(const Vec4& a, const Vec4& b)
{
    Vec4 u = euclid_normalized(a);
    Vec4 v = euclid_normalized(b);
    double w = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) w = std::max(w, std::abs(u(i) * v(j) - u(j) * v(i)));
    return w;
}

bool projectively_equal(const Vec4& a, const Vec4& b, double tol) { return projective_distance(a, b) < tol; }

Membership contains(Geometry g, const ProjectivePoint& p)
{
    Vec4 u = euclid_normalized(p.rep);
    double q = form_eval(g, u);
    if (q < -kEpsGeom) return Membership::Interior;
    if (q > kEpsGeom) return Membership::Exterior;
    return Membership::Boundary;
}

KleinCoords klein_hp(const ProjectivePoint& p)
{
    if (contains(Geometry::HP, p) != Membership::Interior || p.rep(0) == 0.0)
        throw Error(ErrorCode::NotInSpace, "not an interior point of HP");
    const Vec4& x = p.rep;
    return {Vec2(x(1) / x(0), x(2) / x(0)), x(3) / x(0)};
}

ProjectivePoint klein_hp_inverse(const Vec2& z, double h)
{
    if (z.squaredNorm() >= 1.0) throw Error(ErrorCode::NotInSpace, "outside the unit disk");
    return ProjectivePoint(1.0, z(0), z(1), h);
}

Vec3 affine_chart(const Vec4& x)
{
    if (x(0) == 0.0) throw Error(ErrorCode::NotInSpace, "point at infinity of the affine chart");
    return x.tail<3>() / x(0);
}

double hp_height(const ProjectivePoint& p)
{
    Vec3 x = p.rep.head<3>();
    double q = mink(x, x);
    if (!(q < 0.0)) throw Error(ErrorCode::DegenerateDirection, "fiber direction is not timelike");
    double l = p.rep(3) / std::sqrt(-q);
    return x(0) < 0.0 ? -l : l;
}

Plane::Plane(const Vec4& n, Geometry g) : normal(n), tag(g)
{
    double s = n.norm();
    if (s == 0.0) throw Error(ErrorCode::ZeroVector, "zero plane normal");
    normal /= s;
    for (int i = 3; i >= 0; --i) {
        if (std::abs(normal(i)) > 1e-15) {
            if (normal(i) < 0.0) normal = -normal;
            break;
        }
    }
}

bool Plane::contains(const Vec4& x, double tol) const
{
    return std::abs(normal.dot(x)) <= tol * x.norm();
}

Plane base_plane(Geometry g) { return Plane(Vec4(0, 0, 0, 1), g); }

MinkowskiPlane dual_plane_of_hp_point(const ProjectivePoint& p)
{
    Vec4 u = unit_lift(Geometry::HP, p.rep);
    return {u.head<3>(), u(3)};
}

ProjectivePoint hp_point_of_dual_plane(const MinkowskiPlane& m)
{
    Vec4 r;
    r << m.x, m.t;
    return ProjectivePoint(unit_lift(Geometry::HP, r));
}

// P_y = {[x,t] : <x,y> = t}; as a covector this is (J y, -1).
Plane hp_point_of_minkowski_point(const Vec3& y)
{
    Vec4 n;
    n << minkowski_j() * y, -1.0;
    return Plane(n, Geometry::HP);
}

Vec3 minkowski_point_of_hp_plane(const Plane& p)
{
    const Vec4& n = p.normal;
    if (std::abs(n(3)) < 1e-14) throw Error(ErrorCode::DegenerateHPPlane, "plane contains a fiber");
    return -(minkowski_j() * n.head<3>()) / n(3);
}

double angle_between_planes(const Plane& p, const Plane& q)
{
    if (p.tag != q.tag) throw Error(ErrorCode::TagMismatch, "planes of different geometries");
    if (p.tag == Geometry::HP) {
        Vec3 d = minkowski_point_of_hp_plane(p) - minkowski_point_of_hp_plane(q);
        double s = mink(d, d);
        if (s < -kEpsGeom) throw Error(ErrorCode::HPNotSpacelikeDifference, "dual points differ by a timelike vector");
        return std::sqrt(std::max(s, 0.0));
    }
    // The form is its own inverse, so covectors pair with the same matrix.
    Geometry g = p.tag;
    double pq = form_pair(g, p.normal, q.normal);
    double pp = form_pair(g, p.normal, p.normal);
    double qq = form_pair(g, q.normal, q.normal);
    if (pp == 0.0 || qq == 0.0) throw Error(ErrorCode::DegeneratePlane, "lightlike plane");
    double c = std::abs(pq) / std::sqrt(std::abs(pp * qq));
    if (g == Geometry::Hyp) {
        if (c > 1.0 + 1e-12) throw Error(ErrorCode::NonIntersecting, "planes do not meet in H3");
        return std::acos(std::min(c, 1.0));
    }
    if (c < 1.0 - 1e-12) throw Error(ErrorCode::NonIntersecting, "planes do not meet along a spacelike line");
    return std::acosh(std::max(c, 1.0));
}

Vec2 radial_project(const Vec3& x) { return Vec2(x(1) / x(0), x(2) / x(0)); }

Vec3 radial_lift(const Vec2& z)
{
    double d = 1.0 - z.squaredNorm();
    if (!(d > 0.0)) throw Error(ErrorCode::NotInSpace, "outside the unit disk");
    return Vec3(1.0, z(0), z(1)) / std::sqrt(d);
}

SpacelikeGeodesicH2::SpacelikeGeodesicH2(const Vec3& e) : eta(e)
{
    double n = mink(e, e);
    if (!(n > 0.0)) throw Error(ErrorCode::BadAxisType, "geodesic normal is not spacelike");
    eta /= std::sqrt(n);
}

SpacelikeGeodesicH2 SpacelikeGeodesicH2::from_endpoints(const Vec3& from, const Vec3& to)
{
    return SpacelikeGeodesicH2(mink_cross(from, to));
}

double SpacelikeGeodesicH2::side(const Vec2& z) const { return mink(eta, radial_lift(z)); }

HoroSide horoball_classify(const Horoball& h, const ProjectivePoint& x)
{
    Vec4 u = unit_lift(h.tag, x.rep);
    double s = form_pair(h.tag, u, h.p);
    double scale = std::max(1.0, std::abs(h.a));
    if (std::abs(s - h.a) <= kEpsGeom * scale) return HoroSide::OnHorosphere;
    return s > h.a ? HoroSide::Inside : HoroSide::Outside;
}

}  // namespace gt
