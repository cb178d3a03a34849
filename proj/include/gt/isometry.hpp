#pragma once

#include "gt/core_geometry.hpp"

namespace gt {

struct Isometry {
    Mat4 m = Mat4::Identity();
    Geometry tag = Geometry::Hyp;

    Isometry() = default;
    Isometry(const Mat4& mat, Geometry g) : m(mat), tag(g) {}

    static Isometry identity(Geometry g) { return Isometry(Mat4::Identity(), g); }
};

Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
ProjectivePoint apply(const Isometry& g, const ProjectivePoint& p);
Plane apply_plane(const Isometry& g, const Plane& p);

// Hyp/AdS: max|m^T J m - J|. HP: deviation from the block shape and of the
// linear part from O(1,2).
double group_residual(const Isometry& g);

// H^2 isometry embedded as block-diag(A, 1).
inline Isometry embed_h2(const Mat3& a, Geometry g) { return Isometry(block_diag(a), g); }

// A in SO_0(1,2) with A * eta = (0,0,1); it carries the geodesic to the
// standard one {[cosh s, sinh s, 0]} oriented by increasing s.
Mat3 standard_transporter(const SpacelikeGeodesicH2& axis);

Isometry rotation(Geometry g, const SpacelikeGeodesicH2& axis, double theta);
double rotation_angle(const Isometry& g, const SpacelikeGeodesicH2& axis);

Isometry reflection(const Plane& p);

Mat4 rescaling_matrix(double t);
Mat4 rescale_conjugate(double t, const Mat4& m);
inline Mat4 rescale_conjugate(double t, const Isometry& g) { return rescale_conjugate(t, g.m); }

struct MinkowskiIsometry {
    Mat3 a = Mat3::Identity();
    Vec3 v = Vec3::Zero();

    Vec3 operator()(const Vec3& y) const { return a * y + v; }
};

MinkowskiIsometry compose(const MinkowskiIsometry& g, const MinkowskiIsometry& h);
Isometry minkowski_to_hp(const MinkowskiIsometry& mi);
MinkowskiIsometry hp_to_minkowski(const Isometry& g);

// Action on the Klein model D^2 x R, evaluated through the closed formulas
// for Is(A,0) and Is(Id,v) rather than the 4x4 matrix.
KleinCoords hp_klein_action(const Isometry& g, const Vec2& z, double h);

// B with B(x) = target and B(P) = {x3 = 0}; Hyp and AdS only.
Isometry normalize_plane_point(const ProjectivePoint& x, const Plane& p, const ProjectivePoint& target, Geometry g);

enum class IsometryClass { Elliptic, Parabolic, Hyperbolic, Other };

const char* to_string(IsometryClass c);

IsometryClass classify_isometry(const Isometry& g, double parabolic_tol = 1e-7);

}  // namespace gt
