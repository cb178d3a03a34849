// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gt/doubling.hpp"
#include "gt/error.hpp"
#include "gt/transition.hpp"
#include "support.hpp"

using namespace gt;
using namespace gt::testing;

namespace {

// Pinned tolerances and budgets.
constexpr double kGroupTol = 1e-11;
constexpr double kRotLimitTol = 1e-8;
constexpr double kMinOrder = 0.9;
constexpr double kReflLimitTol = 1e-8;
constexpr double kHomTol = 1e-9;
constexpr double kCocycleTol = 1e-9;
constexpr double kHolonomyTol = 1e-6;
constexpr double kPleatedRatio = 0.2;
constexpr double kGraphTol = 1e-10;
constexpr double kConcavityTol = 1e-12;
constexpr double kConeTol = 1e-9;
constexpr double kSlopeTol = 1e-8;
constexpr double kConeLimitTol = 1e-6;
constexpr double kSymTol = 1e-6;
constexpr double kGradTol = 1e-7;
constexpr double kSeedTol = 1e-5;
constexpr double kCuspTol = 1e-8;

const WeightedMulticurve kLambdaA{{{"A", 1.0}}};
const WeightedMulticurve kMuB{{{"B", 1.0}}};

struct Outcome {
    bool pass = false;
    std::string detail;
};

char buf[512];

template <class... T>
std::string str(const char* f, T... args)
{
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

BendingContext torus_context(Geometry g, double t, double weight = 1.0)
{
    static FuchsianGroup grp = build_punctured_torus({3, 3, 3});
    WeightedMulticurve mc = kLambdaA.scaled(weight);
    LeafEnumerator en(grp, mc);
    return BendingContext::make(grp, mc, default_base_point(en), +1, g, t);
}

Vec2 generic_point(const BendingContext& ctx, double radius)
{
    for (;;) {
        Vec2 z = disk_point(radius);
        try {
            ctx.leaves->crossings(ctx.x0, z);
            return z;
        } catch (const Error&) {
        }
    }
}

// A generic point moved by a random word of length at most max_len, so that
// segments from the base point cross lifted leaves beyond the nearest one.
Vec2 far_point(const BendingContext& ctx, int max_len = 3)
{
    for (;;) {
        Vec2 z = act_on_disk(ctx, random_word(max_len), generic_point(ctx, 0.7));
        try {
            ctx.leaves->crossings(ctx.x0, z);
            return z;
        } catch (const Error&) {
        }
    }
}

std::vector<std::pair<Geometry, double>> sides(double t)
{
    return {{Geometry::Hyp, t}, {Geometry::AdS, -t}, {Geometry::HP, t}};
}

// --- 1 ---------------------------------------------------------------------

Isometry random_constructor(Geometry g)
{
    double pick = uniform(0.0, 3.0);
    if (pick < 1.0) return rotation(g, near_axis(0.5), uniform(-0.3, 0.3));
    if (pick < 2.0) return embed_h2(turn(uniform(0.0, 2.0 * M_PI)), g);
    // a reflection in a plane tilted by s moves points like a rotation by 2s
    Isometry tilt = rotation(g, near_axis(0.5), uniform(-0.15, 0.15));
    return reflection(apply_plane(tilt, base_plane(g)));
}

double hp_shape_residual(const Mat4& m)
{
    Mat3 a = m.topLeftCorner<3, 3>();
    double r = max_abs(a.transpose() * minkowski_j() * a - minkowski_j());
    r = std::max(r, m.block<3, 1>(0, 3).cwiseAbs().maxCoeff());
    return std::max(r, std::abs(std::abs(m(3, 3)) - 1.0));
}

Outcome group_preservation()
{
    double worst[3] = {0, 0, 0};
    for (int gi = 0; gi < 3; ++gi) {
        Geometry g = static_cast<Geometry>(gi);
        for (int i = 0; i < 10000; ++i) {
            int len = std::uniform_int_distribution<int>(1, 64)(rng());
            Isometry acc = Isometry::identity(g);
            for (int k = 0; k < len; ++k) acc = compose(acc, random_constructor(g));
            double r;
            if (g == Geometry::HP) {
                r = hp_shape_residual(acc.m);
            } else {
                Mat4 j = form_matrix(g);
                r = max_abs(acc.m.transpose() * j * acc.m - j);
            }
            worst[gi] = std::max(worst[gi], r);
        }
    }
    bool ok = worst[0] < kGroupTol && worst[1] < kGroupTol && worst[2] < kGroupTol;
    return {ok, str("worst residual Hyp %.2e AdS %.2e HP-shape %.2e (tol %.0e)", worst[0], worst[1], worst[2], kGroupTol)};
}

// --- 2 ---------------------------------------------------------------------

// HP rotation by a about the geodesic with unit normal eta, in closed form.
Mat4 hp_rotation_closed_form(const SpacelikeGeodesicH2& l, double a)
{
    Mat4 m = Mat4::Identity();
    m.block<1, 3>(3, 0) = -a * (minkowski_j() * l.eta).transpose();
    return m;
}

std::pair<double, double> side_orders(const std::vector<double>& grid, const std::vector<double>& res)
{
    std::vector<double> tp, rp, tn, rn;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        (grid[i] > 0 ? tp : tn).push_back(std::abs(grid[i]));
        (grid[i] > 0 ? rp : rn).push_back(res[i]);
    }
    return {fit_order(tp, rp), fit_order(tn, rn)};
}

Outcome rotation_transition()
{
    double worst_gap = 0, min_order = 1e9;
    for (int i = 0; i < 100; ++i) {
        SpacelikeGeodesicH2 l = random_axis();
        double a = uniform(-2.0, 2.0);
        if (std::abs(a) < 0.05) a = 0.5;
        TransitionFamily f = rotation_family(l, a);
        Mat4 target = hp_rotation_closed_form(l, a);
        auto [op, on] = side_orders(f.grid, residuals_against(f, target));
        min_order = std::min({min_order, op, on});
        ConvergenceReport r = extrapolate_limit(f);
        worst_gap = std::max({worst_gap, projective_gap(r.limit_pos, target), projective_gap(r.limit_neg, target)});
    }
    bool ok = min_order >= kMinOrder && worst_gap < kRotLimitTol;
    return {ok, str("min order %.3f (>= %.1f), worst limit gap %.2e (tol %.0e)", min_order, kMinOrder, worst_gap, kRotLimitTol)};
}

// --- 3 ---------------------------------------------------------------------

Outcome reflection_transition()
{
    double worst = 0, min_order = 1e9;
    for (int i = 0; i < 50; ++i) {
        Vec3 a0 = random_minkowski(1.0);
        Vec4 n0;
        n0 << a0, 1.0;
        ReflectionLimitReport r = reflection_limit_check(
            [&](double t) {
                Vec4 n;
                n << std::abs(t) * a0, 1.0;
                return Plane(n, side_geometry(t));
            },
            Plane(n0, Geometry::HP));
        Mat4 expect = Mat4::Identity();
        expect.block<1, 3>(3, 0) = -2.0 * a0.transpose();
        expect(3, 3) = -1.0;
        worst = std::max(worst, projective_gap(r.limit, expect));
        min_order = std::min({min_order, r.order_pos, r.order_neg});
    }
    bool ok = worst < kReflLimitTol;
    return {ok, str("worst limit gap %.2e (tol %.0e), min order %.3f", worst, kReflLimitTol, min_order)};
}

// --- 4 ---------------------------------------------------------------------

Outcome representation()
{
    const char letters[] = "ABab";
    double worst = 0;
    int pairs = 0;
    for (double t : {0.2, 0.05})
        for (auto [g, s] : sides(t)) {
            BendingContext c = torus_context(g, s);
            for (int i = 0; i < 200; ++i) {
                // the product uv has length at most 4
                int lu = std::uniform_int_distribution<int>(1, 3)(rng());
                int lv = std::uniform_int_distribution<int>(1, 4 - lu)(rng());
                std::string u, v;
                for (int k = 0; k < lu; ++k) u += letters[std::uniform_int_distribution<int>(0, 3)(rng())];
                for (int k = 0; k < lv; ++k) v += letters[std::uniform_int_distribution<int>(0, 3)(rng())];
                Mat4 lhs = bent_holonomy(c, reduce_word(u + v)).m;
                Mat4 rhs = compose(bent_holonomy(c, u), bent_holonomy(c, v)).m;
                worst = std::max(worst, rel_diff(lhs, rhs));
                ++pairs;
            }
        }
    return {worst < kHomTol, str("%d pairs, worst relative residual %.2e (tol %.0e)", pairs, worst, kHomTol)};
}

// --- 5 ---------------------------------------------------------------------

Outcome cocycle()
{
    double worst_c = 0, worst_i = 0;
    for (auto [g, s] : sides(0.2)) {
        BendingContext c = torus_context(g, s);
        for (int i = 0; i < 50; ++i) {
            Vec2 a = far_point(c, 2), b = far_point(c, 2), d = far_point(c, 2);
            Mat4 lhs = compose(bending_cocycle(c, a, b), bending_cocycle(c, b, d)).m;
            worst_c = std::max(worst_c, rel_diff(lhs, bending_cocycle(c, a, d).m));
        }
        for (int i = 0; i < 50; ++i) {
            Vec2 x = far_point(c, 1), y = far_point(c, 1);
            std::string w = random_word(2);
            Isometry sg = sigma_embed(c, w);
            Mat4 lhs = bending_cocycle(c, act_on_disk(c, w, x), act_on_disk(c, w, y)).m;
            Mat4 rhs = compose(sg, compose(bending_cocycle(c, x, y), inverse(sg))).m;
            worst_i = std::max(worst_i, rel_diff(lhs, rhs));
        }
    }
    bool ok = worst_c < kCocycleTol && worst_i < kCocycleTol;
    return {ok, str("cocycle %.2e, invariance %.2e (tol %.0e)", worst_c, worst_i, kCocycleTol)};
}

// --- 6 ---------------------------------------------------------------------

Outcome holonomy_transition()
{
    BendingContext base = torus_context(Geometry::Hyp, 1.0);
    BendingContext hp = base.with(Geometry::HP, 1.0);
    double gap = 0, match = 0;
    for (const char* w : {"A", "B", "a", "b"}) {
        ConvergenceReport r = extrapolate_limit(holonomy_family(base, w));
        gap = std::max(gap, r.two_sided_gap);
        match = std::max(match, projective_gap(r.limit(), bent_holonomy(hp, w).m));
    }
    bool ok = gap < kHolonomyTol && match < kHolonomyTol;
    return {ok, str("two-sided gap %.2e, HP match %.2e (tol %.0e)", gap, match, kHolonomyTol)};
}

// --- 7 ---------------------------------------------------------------------

Outcome pleated_transition()
{
    BendingContext base = torus_context(Geometry::Hyp, 1.0);
    std::vector<Vec2> samples;
    while (samples.size() < 200) samples.push_back(generic_point(base, 0.85));
    PleatedReport r = pleated_surface_convergence(base, samples);
    auto at = [&](double t) {
        for (std::size_t i = 0; i < r.grid.size(); ++i)
            if (r.grid[i] == t) return r.max_residuals[i];
        return std::numeric_limits<double>::quiet_NaN();
    };
    double rp3 = at(1e-3), rp4 = at(1e-4), rn3 = at(-1e-3), rn4 = at(-1e-4);
    bool ok = rp4 <= kPleatedRatio * rp3 && rn4 <= kPleatedRatio * rn3;
    return {ok, str("r(1e-4)/r(1e-3) = %.3g (t>0), %.3g (t<0), bound %.1f; orders %.2f, %.2f", rp4 / rp3, rn4 / rn3,
                    kPleatedRatio, r.order_pos, r.order_neg)};
}

// --- 8 ---------------------------------------------------------------------

Outcome hp_graph()
{
    BendingContext hp = torus_context(Geometry::HP, 1.0);
    double worst = 0;
    int crossed = 0;
    for (int i = 0; i < 500; ++i) {
        Vec2 z = i % 2 ? generic_point(hp, 0.9) : far_point(hp);
        crossed += static_cast<int>(hp.leaves->crossings(hp.x0, z).size());
        KleinCoords k = klein_hp(bending_map(hp, z));
        worst = std::max({worst, (k.z - z).norm(), std::abs(k.h - psi_lambda(hp, z))});
    }
    int violations = 0, checked = 0;
    double worst_gap = 0;
    while (checked < 1000) {
        Vec2 a = far_point(hp), b = far_point(hp);
        double pm;
        try {
            pm = psi_lambda(hp, 0.5 * (a + b));
        } catch (const Error&) {
            continue;
        }
        ++checked;
        double gap = 0.5 * (psi_lambda(hp, a) + psi_lambda(hp, b)) - pm;
        worst_gap = std::max(worst_gap, gap);
        if (gap > kConcavityTol) ++violations;
    }
    bool ok = worst < kGraphTol && violations == 0;
    return {ok, str("graph residual %.2e (tol %.0e) over %d leaf crossings; concavity violations %d/1000", worst, kGraphTol,
                    crossed, violations)};
}

// --- 9 ---------------------------------------------------------------------

double ls_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

Outcome cone_angles()
{
    double worst = 0, worst_slope = 0, worst_limit = 0;
    for (double a : {1.0, 0.6}) {
        std::vector<double> ts = {0.2, 0.1, 0.05, 0.01}, hyp, ads;
        BendingContext base = torus_context(Geometry::Hyp, 1.0, a);
        for (double t : ts) {
            double ch = meridian_cone_angle(base.with(Geometry::Hyp, t), 0);
            double ca = meridian_cone_angle(base.with(Geometry::AdS, -t), 0);
            worst = std::max({worst, std::abs(ch - 2.0 * (M_PI - t * a)), std::abs(ca + 2.0 * t * a)});
            hyp.push_back(ch);
            ads.push_back(ca);
        }
        worst_slope = std::max({worst_slope, std::abs(ls_slope(ts, hyp) + 2 * a), std::abs(ls_slope(ts, ads) + 2 * a)});

        MeridianData hp = meridian_holonomy(base.with(Geometry::HP, 1.0), 0);
        TransitionFamily f = make_family("meridian", default_grid(), [&](double t) {
            return meridian_holonomy(base.with(side_geometry(t), t), 0).holonomy.m;
        });
        ConvergenceReport r = extrapolate_limit(f);
        Isometry local = compose(inverse(hp.cocycle), compose(Isometry(r.limit(), Geometry::HP), hp.cocycle));
        worst_limit = std::max(worst_limit, std::abs(rotation_angle(local, hp.leaf) + 2 * a));
    }
    bool ok = worst < kConeTol && worst_slope < kSlopeTol && worst_limit < kConeLimitTol;
    return {ok, str("angle error %.2e (tol %.0e), slope error %.2e (tol %.0e), HP limit error %.2e (tol %.0e)", worst,
                    kConeTol, worst_slope, kSlopeTol, worst_limit, kConeLimitTol)};
}

// --- 10 --------------------------------------------------------------------

Outcome kerckhoff()
{
    KerckhoffResult r = kerckhoff_point(kLambdaA, kMuB, {3, 3, 3});
    bool probe = true;
    for (int k = 0; k < 8; ++k) {
        double ang = k * M_PI / 4;
        Vec2 d(std::cos(ang), std::sin(ang));
        probe = probe && kerckhoff_objective(r.chart + 1e-3 * d, kLambdaA, kMuB) > r.objective;
    }
    double spread = 0;
    for (unsigned seed : {11u, 23u, 47u}) {
        KerckhoffResult s = kerckhoff_point(kLambdaA, kMuB, teich_from_chart(2.0, 0.7), seed);
        spread = std::max({spread, std::abs(s.point.x - r.point.x), std::abs(s.point.y - r.point.y),
                           std::abs(s.point.z - r.point.z)});
    }
    double sym = std::abs(r.point.x - r.point.y);
    bool ok = sym < kSymTol && r.gradient_norm < kGradTol && probe && spread < kSeedTol;
    return {ok, str("|x-y| %.2e, gradient %.2e, probe %s, seed spread %.2e; point (%.6f, %.6f, %.6f)", sym,
                    r.gradient_norm, probe ? "ok" : "failed", spread, r.point.x, r.point.y, r.point.z)};
}

// --- 11 --------------------------------------------------------------------

Outcome cusps()
{
    int parabolic = 0, total = 0;
    double worst = 0;
    bool checks = true;
    for (double t : {0.2, 0.05})
        for (auto [g, s] : sides(t)) {
            BendingContext c = torus_context(g, s);
            ++total;
            if (classify_isometry(bent_holonomy(c, "ABab"), 1e-7) == IsometryClass::Parabolic) ++parabolic;
            DoubledHolonomy d = double_holonomy(c, {c.x0});
            auto [k, j] = add_cusp_lower_face(d, "ABab");
            CuspReport r = cusp_stabilizer_check(d, "ABab", k, j);
            worst = std::max({worst, r.commutator_residual, r.fixed_point_residual});
            checks = checks && r.ok(kCuspTol);
        }
    bool ok = parabolic == total && checks;
    return {ok, str("parabolic %d/%d, stabilizer checks %s, worst residual %.2e (tol %.0e)", parabolic, total,
                    checks ? "ok" : "failed", worst, kCuspTol)};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "group preservation", 5, group_preservation},
        {2, "rotation transition", 5, rotation_transition},
        {3, "reflection transition", 5, reflection_transition},
        {4, "bent holonomy is a representation", 60, representation},
        {5, "cocycle identities", 60, cocycle},
        {6, "one-sided holonomy transition", 120, holonomy_transition},
        {7, "pleated-surface transition", 120, pleated_transition},
        {8, "HP surface is the graph of psi", 30, hp_graph},
        {9, "cone angles", 60, cone_angles},
        {10, "Kerckhoff point", 60, kerckhoff},
        {11, "cusps", 30, cusps},
    };
    int failures = 0;
    for (const auto& c : all) {
        rng().seed(20240611 + c.id);
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass && secs < c.budget_s;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %2d (%s): %s; %.2f s of %.0f s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, c.budget_s);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
