#include "doctest.h"

#include "gt/core_geometry.hpp"
#include "gt/error.hpp"
#include "support.hpp"

using namespace gt;
using namespace gt::testing;

TEST_CASE("form_eval matches the diagonal forms")
{
    CHECK(form_eval(Geometry::Hyp, Vec4(1, 0, 0, 0)) == -1.0);
    CHECK(form_eval(Geometry::AdS, Vec4(0, 0, 0, 1)) == -1.0);
    CHECK(form_eval(Geometry::HP, Vec4(0, 0, 0, 1)) == 0.0);
    for (int i = 0; i < 50; ++i) {
        Vec4 x(uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2));
        double base = -x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
        CHECK(form_eval(Geometry::Hyp, x) == doctest::Approx(base + x(3) * x(3)).epsilon(1e-15));
        CHECK(form_eval(Geometry::AdS, x) == doctest::Approx(base - x(3) * x(3)).epsilon(1e-15));
        CHECK(form_eval(Geometry::HP, x) == doctest::Approx(base).epsilon(1e-15));
    }
}

TEST_CASE("membership classification")
{
    CHECK(contains(Geometry::Hyp, ProjectivePoint(1, 0, 0, 0)) == Membership::Interior);
    CHECK(contains(Geometry::Hyp, ProjectivePoint(1, 1, 0, 0)) == Membership::Boundary);
    CHECK(contains(Geometry::Hyp, ProjectivePoint(0, 1, 0, 0)) == Membership::Exterior);
    CHECK(contains(Geometry::HP, ProjectivePoint(1, 0, 0, 5)) == Membership::Interior);
    CHECK(contains(Geometry::AdS, ProjectivePoint(0, 0, 0, 1)) == Membership::Interior);
    CHECK_THROWS_AS(contains(Geometry::Hyp, ProjectivePoint(0, 0, 0, 0)), Error);
}

TEST_CASE("unit lift and projective equality")
{
    Vec4 x = unit_lift(Geometry::Hyp, Vec4(-2, 0, 0, 0));
    CHECK(x(0) == doctest::Approx(1.0));
    CHECK(projectively_equal(Vec4(1, 2, 3, 4), Vec4(-2, -4, -6, -8)));
    CHECK_FALSE(projectively_equal(Vec4(1, 2, 3, 4), Vec4(1, 2, 3, 4.001)));
    Vec4 h = unit_lift(Geometry::HP, Vec4(3, 0, 0, 7));
    CHECK(form_eval(Geometry::HP, h) == doctest::Approx(-1.0));
}

TEST_CASE("Klein model of HP")
{
    KleinCoords k = klein_hp(ProjectivePoint(1, 0, 0, 0));
    CHECK(k.z.norm() == 0.0);
    CHECK(k.h == 0.0);
    k = klein_hp(ProjectivePoint(2, 0, 0, 1));
    CHECK(k.z.norm() == 0.0);
    CHECK(k.h == doctest::Approx(0.5));
    for (int i = 0; i < 100; ++i) {
        Vec2 z = disk_point(0.95);
        double h = uniform(-3, 3);
        KleinCoords back = klein_hp(klein_hp_inverse(z, h));
        CHECK((back.z - z).norm() < 1e-14);
        CHECK(std::abs(back.h - h) < 1e-14);
    }
    CHECK_THROWS_AS(klein_hp(ProjectivePoint(0, 1, 0, 0)), Error);
}

TEST_CASE("hp_height")
{
    CHECK(hp_height(ProjectivePoint(1, 0, 0, 3)) == doctest::Approx(3.0));
    CHECK(hp_height(ProjectivePoint(2, 0, 0, 3)) == doctest::Approx(1.5));
    CHECK(hp_height(ProjectivePoint(1, 0, 0, 0)) == 0.0);
    CHECK(hp_height(ProjectivePoint(-2, 0, 0, -3)) == doctest::Approx(1.5));
    CHECK_THROWS_AS(hp_height(ProjectivePoint(1, 1, 0, 3)), Error);
}

TEST_CASE("HP duality with Minkowski space")
{
    Plane p0 = hp_point_of_minkowski_point(Vec3::Zero());
    CHECK(p0.contains(Vec4(1, 0.3, -0.2, 0)));
    CHECK_FALSE(p0.contains(Vec4(1, 0.3, -0.2, 0.1)));

    // y = (0,1,0): graph of z -> z1
    Plane p1 = hp_point_of_minkowski_point(Vec3(0, 1, 0));
    for (int i = 0; i < 20; ++i) {
        Vec2 z = disk_point();
        CHECK(p1.contains(Vec4(1, z(0), z(1), z(0)), 1e-12));
    }
    for (int i = 0; i < 20; ++i) {
        Vec3 y = random_minkowski(2.0);
        Vec3 back = minkowski_point_of_hp_plane(hp_point_of_minkowski_point(y));
        CHECK((back - y).norm() < 1e-12);
        ProjectivePoint p(1.0, 0.2, -0.1, uniform(-1, 1));
        MinkowskiPlane mp = dual_plane_of_hp_point(p);
        CHECK(projectively_equal(hp_point_of_dual_plane(mp).rep, p.rep));
    }
}

TEST_CASE("angles between planes")
{
    Plane h0 = base_plane(Geometry::Hyp);
    CHECK(angle_between_planes(h0, h0) == doctest::Approx(0.0));
    double th = M_PI / 6;
    Plane h1(Vec4(0, 0, std::tan(th), 1), Geometry::Hyp);
    CHECK(angle_between_planes(h0, h1) == doctest::Approx(th).epsilon(1e-12));
    CHECK(angle_between_planes(h1, h0) == doctest::Approx(th).epsilon(1e-12));

    Plane q0 = hp_point_of_minkowski_point(Vec3(0, 0, 0));
    Plane q1 = hp_point_of_minkowski_point(Vec3(0, 1, 0));
    CHECK(angle_between_planes(q0, q1) == doctest::Approx(1.0));
    Plane q2 = hp_point_of_minkowski_point(Vec3(1, 0, 0));
    CHECK_THROWS_AS(angle_between_planes(q0, q2), Error);

    // AdS planes {x3 = 0} and the boost of it by s in the (x2, x3) block meet at angle s.
    double s = 0.7;
    Plane a1(Vec4(0, 0, -std::tanh(s), 1), Geometry::AdS);
    CHECK(angle_between_planes(base_plane(Geometry::AdS), a1) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("radial projection")
{
    CHECK(radial_project(Vec3(1, 0, 0)).norm() == 0.0);
    Vec2 z = radial_project(Vec3(std::cosh(1.0), std::sinh(1.0), 0));
    CHECK(z(0) == doctest::Approx(std::tanh(1.0)));
    for (int i = 0; i < 50; ++i) {
        Vec2 w = disk_point(0.99);
        CHECK((radial_project(radial_lift(w)) - w).norm() < 1e-14);
        Vec3 x = radial_lift(w);
        CHECK(mink(x, x) == doctest::Approx(-1.0));
    }
}

TEST_CASE("spacelike geodesics")
{
    SpacelikeGeodesicH2 g = SpacelikeGeodesicH2::from_endpoints(Vec3(1, -1, 0), Vec3(1, 1, 0));
    CHECK(mink(g.eta, g.eta) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((g.eta - Vec3(0, 0, 1)).norm() < 1e-12);  // the point (0, 0.5) is on the left of +x1
    CHECK(g.side(Vec2(0, 0.5)) > 0.0);
    CHECK(g.side(Vec2(0.3, 0)) == doctest::Approx(0.0));
    CHECK(g.reversed().side(Vec2(0, 0.5)) < 0.0);
    CHECK_THROWS_AS(SpacelikeGeodesicH2(Vec3(1, 0, 0)), Error);
}

TEST_CASE("horoballs")
{
    Horoball h{Vec4(1, 1, 0, 0), -1.0, Geometry::Hyp};
    CHECK(horoball_classify(h, ProjectivePoint(1, 0, 0, 0)) == HoroSide::OnHorosphere);
    for (double s : {0.1, 0.5, 2.0}) {
        CHECK(horoball_classify(h, ProjectivePoint(std::cosh(s), -std::sinh(s), 0, 0)) == HoroSide::Outside);
        CHECK(horoball_classify(h, ProjectivePoint(std::cosh(s), std::sinh(s), 0, 0)) == HoroSide::Inside);
    }
    Horoball deep{Vec4(1, 1, 0, 0), -1e12, Geometry::Hyp};
    for (int i = 0; i < 20; ++i) {
        Vec2 z = disk_point(0.9);
        CHECK(horoball_classify(deep, ProjectivePoint(1, z(0), z(1), 0)) == HoroSide::Inside);
    }
}
