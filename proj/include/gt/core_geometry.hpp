#pragma once

#include "gt/error.hpp"
#include "gt/linalg.hpp"

namespace gt {

// Which of the three projective models a vector is tested against.
// The form is -x0^2 + x1^2 + x2^2 + s*x3^2 with s = 1, -1, 0.
enum class Geometry { Hyp, AdS, HP };

const char* to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

double form_sign(Geometry g);
Mat4 form_matrix(Geometry g);

double form_eval(Geometry g, const Vec4& x);
double form_pair(Geometry g, const Vec4& x, const Vec4& y);

struct ProjectivePoint {
    Vec4 rep;

    ProjectivePoint() : rep(Vec4(1, 0, 0, 0)) {}
    explicit ProjectivePoint(const Vec4& v) : rep(v) {}
    ProjectivePoint(double a, double b, double c, double d) : rep(a, b, c, d) {}
};

// Unit lift: q = -1 (HP: -x0^2+x1^2+x2^2 = -1) and x0 > 0 when x0 != 0.
Vec4 unit_lift(Geometry g, const Vec4& x);

// Projective equality via the wedge of the Euclidean-normalized reps.
bool projectively_equal(const Vec4& a, const Vec4& b, double tol = kEpsGeom);
double projective_distance(const Vec4& a, const Vec4& b);

enum class Membership { Interior, Boundary, Exterior };

Membership contains(Geometry g, const ProjectivePoint& p);

struct KleinCoords {
    Vec2 z;
    double h;
};

KleinCoords klein_hp(const ProjectivePoint& p);
ProjectivePoint klein_hp_inverse(const Vec2& z, double h);

// Affine chart x0 = 1 for any of the three models.
Vec3 affine_chart(const Vec4& x);

double hp_height(const ProjectivePoint& p);

// A plane {x : normal . x = 0}; the normal lives in dual coordinates.
struct Plane {
    Vec4 normal;
    Geometry tag = Geometry::Hyp;

    Plane() : normal(0, 0, 0, 1) {}
    Plane(const Vec4& n, Geometry g);

    bool contains(const Vec4& x, double tol = kEpsGeom) const;
};

Plane base_plane(Geometry g);

// {y in R^{1,2} : <x, y> = t}
struct MinkowskiPlane {
    Vec3 x;
    double t;
};

MinkowskiPlane dual_plane_of_hp_point(const ProjectivePoint& p);
ProjectivePoint hp_point_of_dual_plane(const MinkowskiPlane& m);
Plane hp_point_of_minkowski_point(const Vec3& y);
Vec3 minkowski_point_of_hp_plane(const Plane& p);

double angle_between_planes(const Plane& p, const Plane& q);

Vec2 radial_project(const Vec3& x);
Vec3 radial_lift(const Vec2& z);

// Oriented spacelike geodesic of H^2: {z : <eta,(1,z)> = 0}; eta is the unit
// normal pointing to the left of the orientation.
struct SpacelikeGeodesicH2 {
    Vec3 eta;

    SpacelikeGeodesicH2() : eta(0, 0, 1) {}
    explicit SpacelikeGeodesicH2(const Vec3& e);

    static SpacelikeGeodesicH2 from_endpoints(const Vec3& from, const Vec3& to);
    SpacelikeGeodesicH2 reversed() const { return SpacelikeGeodesicH2(-eta); }
    // Signed sinh of the distance from a disk point, positive on the left.
    double side(const Vec2& z) const;
};

struct Horoball {
    Vec4 p;
    double a;
    Geometry tag;
};

enum class HoroSide { Inside, OnHorosphere, Outside };

HoroSide horoball_classify(const Horoball& h, const ProjectivePoint& x);

}  // namespace gt
