#include "gt/isometry.hpp"

#include <cmath>
#include <numbers>

namespace gt {

namespace {

void check_tags(const Isometry& g, const Isometry& h)
{
    if (g.tag != h.tag) throw Error(ErrorCode::TagMismatch, "isometries of different geometries");
}

// Pure boost in SO_0(1,2) taking the unit timelike vector u to (1,0,0).
Mat3 boost_to_origin(const Vec3& u)
{
    double g = u(0);
    Vec2 w(u(1), u(2));
    Mat3 m;
    m(0, 0) = g;
    m.block<1, 2>(0, 1) = -w.transpose();
    m.block<2, 1>(1, 0) = -w;
    m.block<2, 2>(1, 1) = Eigen::Matrix2d::Identity() + w * w.transpose() / (1.0 + g);
    return m;
}

Mat3 rotation_about_origin(double phi)
{
    Mat3 m = Mat3::Identity();
    m(1, 1) = std::cos(phi);
    m(1, 2) = -std::sin(phi);
    m(2, 1) = std::sin(phi);
    m(2, 2) = std::cos(phi);
    return m;
}

Mat4 standard_rotation(Geometry g, double theta)
{
    Mat4 m = Mat4::Identity();
    switch (g) {
    case Geometry::Hyp:
        m(2, 2) = std::cos(theta);
        m(2, 3) = std::sin(theta);
        m(3, 2) = -std::sin(theta);
        m(3, 3) = std::cos(theta);
        break;
    case Geometry::AdS:
        m(2, 2) = std::cosh(theta);
        m(2, 3) = std::sinh(theta);
        m(3, 2) = std::sinh(theta);
        m(3, 3) = std::cosh(theta);
        break;
    case Geometry::HP:
        m(3, 2) = -theta;
        break;
    }
    return m;
}

Mat3 lorentz_inverse(const Mat3& a) { return minkowski_j() * a.transpose() * minkowski_j(); }

}  // namespace

Isometry compose(const Isometry& g, const Isometry& h)
{
    check_tags(g, h);
    return Isometry(g.m * h.m, g.tag);
}

Isometry inverse(const Isometry& g)
{
    if (g.tag == Geometry::HP) {
        Mat3 ai = lorentz_inverse(g.m.topLeftCorner<3, 3>());
        Mat4 r = Mat4::Identity();
        r.topLeftCorner<3, 3>() = ai;
        r.block<1, 3>(3, 0) = -g.m.block<1, 3>(3, 0) * ai / g.m(3, 3);
        r(3, 3) = 1.0 / g.m(3, 3);
        return Isometry(r, g.tag);
    }
    Mat4 j = form_matrix(g.tag);
    return Isometry(j * g.m.transpose() * j, g.tag);
}

ProjectivePoint apply(const Isometry& g, const ProjectivePoint& p) { return ProjectivePoint(g.m * p.rep); }

Plane apply_plane(const Isometry& g, const Plane& p)
{
    if (g.tag != p.tag) throw Error(ErrorCode::TagMismatch, "plane and isometry of different geometries");
    Vec4 n = inverse(g).m.transpose() * p.normal;
    return Plane(n, g.tag);
}

double group_residual(const Isometry& g)
{
    if (g.tag == Geometry::HP) {
        Mat3 a = g.m.topLeftCorner<3, 3>();
        double r = max_abs(a.transpose() * minkowski_j() * a - minkowski_j());
        r = std::max(r, g.m.block<3, 1>(0, 3).cwiseAbs().maxCoeff());
        return std::max(r, std::abs(g.m(3, 3) - 1.0));
    }
    Mat4 j = form_matrix(g.tag);
    return max_abs(g.m.transpose() * j * g.m - j);
}

Mat3 standard_transporter(const SpacelikeGeodesicH2& axis)
{
    const Vec3& e = axis.eta;
    double r = std::hypot(e(1), e(2));
    Mat3 rot = rotation_about_origin(std::numbers::pi / 2 - std::atan2(e(2), e(1)));
    Mat3 boost = Mat3::Identity();
    boost(0, 0) = r;
    boost(0, 2) = -e(0);
    boost(2, 0) = -e(0);
    boost(2, 2) = r;
    return boost * rot;
}

Isometry rotation(Geometry g, const SpacelikeGeodesicH2& axis, double theta)
{
    Mat3 a = standard_transporter(axis);
    Mat4 phi = block_diag(a);
    Mat4 phi_inv = block_diag(lorentz_inverse(a));
    return Isometry(phi_inv * standard_rotation(g, theta) * phi, g);
}

double rotation_angle(const Isometry& g, const SpacelikeGeodesicH2& axis)
{
    Mat3 a = standard_transporter(axis);
    Mat4 h = block_diag(a) * g.m * block_diag(lorentz_inverse(a));
    double scale = std::max(1.0, max_abs(g.m)) * std::max(1.0, max_abs(a) * max_abs(a));
    double tol = 1e-9 * scale;
    Mat4 off = h - Mat4::Identity();
    off.block<2, 2>(2, 2).setZero();
    if (max_abs(off) > tol) throw Error(ErrorCode::NotARotationAboutAxis, "isometry moves the axis");
    switch (g.tag) {
    case Geometry::Hyp: {
        double th = std::atan2(h(2, 3), h(2, 2));
        if (th >= std::numbers::pi) th -= 2 * std::numbers::pi;
        return th;
    }
    case Geometry::AdS:
        if (h(2, 2) <= 0.0) throw Error(ErrorCode::NotARotationAboutAxis, "not in the identity component");
        return std::asinh(h(2, 3));
    case Geometry::HP:
        if (std::abs(h(2, 2) - 1.0) > tol || std::abs(h(2, 3)) > tol || std::abs(h(3, 3) - 1.0) > tol)
            throw Error(ErrorCode::NotARotationAboutAxis, "not a half-pipe rotation");
        return -h(3, 2);
    }
    return 0.0;
}

Isometry reflection(const Plane& p)
{
    const Vec4& al = p.normal;
    if (p.tag == Geometry::HP) {
        if (std::abs(al(3)) < 1e-14) throw Error(ErrorCode::DegenerateHPPlane, "plane contains a fiber");
        Vec3 c = al.head<3>() / al(3);
        Mat4 r = Mat4::Identity();
        r.block<1, 3>(3, 0) = -2.0 * c.transpose();
        r(3, 3) = -1.0;
        return Isometry(r, Geometry::HP);
    }
    Mat4 j = form_matrix(p.tag);
    double n = al.dot(j * al);
    if (std::abs(n) < 1e-14) throw Error(ErrorCode::DegeneratePlane, "lightlike plane");
    if (p.tag == Geometry::AdS && n > 0.0) throw Error(ErrorCode::DegeneratePlane, "AdS plane is not spacelike");
    return Isometry(Mat4::Identity() - 2.0 * j * al * al.transpose() / n, p.tag);
}

Mat4 rescaling_matrix(double t) { return Vec4(1.0, 1.0, 1.0, 1.0 / std::abs(t)).asDiagonal(); }

Mat4 rescale_conjugate(double t, const Mat4& m)
{
    double s = std::abs(t);
    Mat4 r = m;
    r.block<1, 3>(3, 0) /= s;
    r.block<3, 1>(0, 3) *= s;
    return r;
}

MinkowskiIsometry compose(const MinkowskiIsometry& g, const MinkowskiIsometry& h)
{
    return {g.a * h.a, g.a * h.v + g.v};
}

Isometry minkowski_to_hp(const MinkowskiIsometry& mi)
{
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = mi.a;
    m.block<1, 3>(3, 0) = mi.v.transpose() * minkowski_j() * mi.a;
    return Isometry(m, Geometry::HP);
}

MinkowskiIsometry hp_to_minkowski(const Isometry& g)
{
    MinkowskiIsometry mi;
    mi.a = g.m.topLeftCorner<3, 3>();
    Vec3 w = g.m.block<1, 3>(3, 0).transpose() / g.m(3, 3);
    mi.a /= g.m(3, 3);
    mi.v = mi.a * minkowski_j() * w;
    return mi;
}

KleinCoords hp_klein_action(const Isometry& g, const Vec2& z, double h)
{
    MinkowskiIsometry mi = hp_to_minkowski(g);
    Vec3 e0(1.0, 0.0, 0.0);
    Vec3 az = mi.a * Vec3(1.0, z(0), z(1));
    double denom = -mink(az, e0);
    Vec2 z1(az(1) / denom, az(2) / denom);
    double h1 = h / denom;
    h1 += mink(mi.v, Vec3(1.0, z1(0), z1(1)));
    return {z1, h1};
}

Isometry normalize_plane_point(const ProjectivePoint& x, const Plane& p, const ProjectivePoint& target, Geometry g)
{
    if (g == Geometry::HP) throw Error(ErrorCode::TagMismatch, "normalization is defined for Hyp and AdS");
    Plane pg(p.normal, g);
    double ang = angle_between_planes(pg, base_plane(g));
    if (ang > std::numbers::pi / 4) throw Error(ErrorCode::PlaneTooFar, "plane is too far from {x3=0}");

    Vec4 tl = unit_lift(Geometry::HP, target.rep);
    if (std::abs(tl(3)) > kEpsGeom) throw Error(ErrorCode::NotInSpace, "target must lie on {x3=0}");
    Isometry tmap = embed_h2(boost_to_origin(tl.head<3>()), g);
    Isometry tinv = inverse(tmap);

    Vec4 xp = tmap.m * unit_lift(g, x.rep);
    Plane pp = apply_plane(tmap, pg);

    Vec3 v = xp.head<3>();
    double q = mink(v, v);
    if (!(q < 0.0)) throw Error(ErrorCode::NotInSpace, "point is too far from {x3=0}");
    double s = std::sqrt(-q);
    Isometry b1 = embed_h2(boost_to_origin(v / s), g);

    Mat4 m2 = Mat4::Identity();
    if (g == Geometry::Hyp) {
        double d = std::atanh(xp(3) / s);
        m2(0, 0) = std::cosh(d);
        m2(0, 3) = -std::sinh(d);
        m2(3, 0) = -std::sinh(d);
        m2(3, 3) = std::cosh(d);
    } else {
        double d = std::atan2(xp(3), s);
        m2(0, 0) = std::cos(d);
        m2(0, 3) = std::sin(d);
        m2(3, 0) = -std::sin(d);
        m2(3, 3) = std::cos(d);
    }
    Isometry b2(m2, g);
    Isometry b21 = compose(b2, b1);

    Vec4 c = apply_plane(b21, pp).normal;
    Mat3 r3 = Mat3::Identity();
    if (std::hypot(c(1), c(2)) > 1e-15) {
        double beta = std::numbers::pi / 2 - std::atan2(c(2), c(1));
        while (beta > std::numbers::pi / 2) beta -= std::numbers::pi;
        while (beta < -std::numbers::pi / 2) beta += std::numbers::pi;
        r3 = rotation_about_origin(beta);
    }
    Isometry b3 = embed_h2(r3, g);
    Isometry b321 = compose(b3, b21);

    Vec4 c3 = apply_plane(b321, pp).normal;
    double alpha = (g == Geometry::Hyp) ? std::atan2(c3(2), c3(3)) : -std::atanh(c3(2) / c3(3));
    Isometry b4(standard_rotation(g, -alpha), g);

    Isometry bp = compose(b4, b321);
    return compose(tinv, compose(bp, tmap));
}

const char* to_string(IsometryClass c)
{
    switch (c) {
    case IsometryClass::Elliptic: return "elliptic";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Hyperbolic: return "hyperbolic";
    case IsometryClass::Other: return "other";
    }
    return "?";
}

IsometryClass classify_isometry(const Isometry& g, double parabolic_tol)
{
    Mat4 m = g.m;
    if (std::abs(m(3, 3)) > 1e-14 && g.tag == Geometry::HP) m /= m(3, 3);
    double scale = std::max(1.0, max_abs(m));
    Mat4 d = m - Mat4::Identity();
    if (max_abs(d) < kEpsGeom * scale) return IsometryClass::Other;

    // Unipotent test through traces, which are far better conditioned than
    // eigenvalues of a Jordan block.
    double tr1 = m.trace();
    double tr2 = (m * m).trace();
    double dn = max_abs(d);
    double cube = max_abs(d * d * d) / std::max(1.0, dn * dn * dn);
    double s2 = scale * scale;
    if (std::abs(tr1 - 4.0) < parabolic_tol * s2 && std::abs(tr2 - 4.0) < parabolic_tol * s2 * s2 && cube < parabolic_tol)
        return IsometryClass::Parabolic;

    // A fixed interior point makes it elliptic.
    Eigen::JacobiSVD<Mat4> svd(d, Eigen::ComputeFullV);
    Eigen::Vector4d sv = svd.singularValues();
    Mat4 form = (g.tag == Geometry::HP) ? Mat4(Vec4(-1, 1, 1, 0).asDiagonal()) : form_matrix(g.tag);
    std::vector<Vec4> ker;
    for (int i = 0; i < 4; ++i)
        if (sv(i) < 1e-9 * scale) ker.push_back(svd.matrixV().col(i));
    if (!ker.empty()) {
        Eigen::MatrixXd gram(ker.size(), ker.size());
        for (size_t i = 0; i < ker.size(); ++i)
            for (size_t j = 0; j < ker.size(); ++j) gram(i, j) = ker[i].dot(form * ker[j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
        if (es.eigenvalues().minCoeff() < -1e-9) return IsometryClass::Elliptic;
    }

    Eigen::EigenSolver<Mat4> es(m);
    double rho = es.eigenvalues().cwiseAbs().maxCoeff();
    if (rho > 1.0 + 1e-9) return IsometryClass::Hyperbolic;
    return IsometryClass::Other;
}

}  // namespace gt
