#include "gt/doubling.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/SVD>

namespace gt {

namespace {

double rel_gap(const Mat4& a, const Mat4& b) { return max_abs(a - b) / std::max(1.0, std::max(max_abs(a), max_abs(b))); }

Isometry power(const Isometry& g, int n)
{
    Isometry base = n < 0 ? inverse(g) : g;
    Isometry out = Isometry::identity(g.tag);
    for (int i = 0; i < std::abs(n); ++i) out = compose(out, base);
    return out;
}

int letter_index(char c)
{
    switch (c) {
    case 'A': return 0;
    case 'B': return 1;
    case 'a': return 2;
    case 'b': return 3;
    default: return -1;
    }
}

// Hyperbolic distance delta from the foot of x on the leaf, on the side of x (s = +1) or across (s = -1).
Vec2 offset_from_leaf(const SpacelikeGeodesicH2& leaf, const Vec2& x, double delta, int s)
{
    Vec3 xh = radial_lift(x);
    const Vec3& eta = leaf.eta;
    double side = mink(eta, xh) > 0.0 ? 1.0 : -1.0;
    Vec3 foot = xh - mink(xh, eta) * eta;
    foot /= std::sqrt(-mink(foot, foot));
    return radial_project(std::cosh(delta) * foot + s * side * std::sinh(delta) * eta);
}

}  // namespace

Isometry DoubledHolonomy::eval(const std::string& word) const
{
    Isometry out = Isometry::identity(ctx.tag);
    for (std::size_t i = 0; i < word.size();) {
        char c = word[i];
        int li = letter_index(c);
        if (li >= 0) {
            out = compose(out, generators[li]);
            ++i;
            continue;
        }
        if (c != 'e' && c != 'E') throw Error(ErrorCode::BadWord, "unexpected letter in extended word: " + word);
        std::size_t j = i + 1;
        while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
        if (j == i + 1) throw Error(ErrorCode::BadWord, "stable letter without index: " + word);
        std::size_t k = std::stoul(word.substr(i + 1, j - i - 1));
        if (k == 0 || k >= reflections.size()) throw Error(ErrorCode::BadWord, "stable letter index out of range: " + word);
        out = c == 'e' ? compose(out, compose(reflections[k], reflections[0]))
                       : compose(out, compose(reflections[0], reflections[k]));
        i = j;
    }
    return out;
}

Isometry DoubledHolonomy::mirror(const std::string& word) const
{
    return compose(reflections[0], compose(eval(word), reflections[0]));
}

std::vector<std::string> face_stabilizer_words(const BendingContext& ctx, const Vec2& x, int max_len)
{
    std::vector<std::string> out;
    std::vector<std::string> shell = {""};
    const std::string letters = "ABab";
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& w : shell)
            for (char c : letters) {
                std::string v = w + c;
                if (reduce_word(v).size() != v.size()) continue;
                next.push_back(v);
                Vec2 y = act_on_disk(ctx, v, x);
                if (ctx.leaves->crossings(x, y).empty()) out.push_back(v);
            }
        shell = std::move(next);
    }
    return out;
}

DoubledHolonomy double_holonomy(const BendingContext& ctx, const std::vector<Vec2>& face_points)
{
    if (face_points.empty()) throw Error(ErrorCode::ConfigError, "at least the base face point is required");
    DoubledHolonomy d;
    d.ctx = ctx;
    d.face_points = face_points;
    for (std::size_t i = 0; i < face_points.size(); ++i) {
        try {
            ctx.leaves->crossings(ctx.x0, face_points[i]);
            for (std::size_t j = 0; j < i; ++j)
                if (ctx.leaves->crossings(face_points[j], face_points[i]).empty())
                    throw Error(ErrorCode::ConfigError, "face points " + std::to_string(j) + " and " + std::to_string(i) +
                                                            " lie in the same face");
        } catch (const Error& e) {
            if (e.code() == ErrorCode::EndpointOnLeaf)
                throw Error(ErrorCode::FacePointOnLeaf, "face point " + std::to_string(i) + " lies on a leaf");
            throw;
        }
        d.planes.push_back(support_plane_at(ctx, face_points[i]));
        d.reflections.push_back(reflection(d.planes.back()));
    }
    for (const char* g : {"A", "B", "a", "b"}) d.generators.push_back(bent_holonomy(ctx, g));

    d.face0_stabilizer = face_stabilizer_words(ctx, face_points[0], 3);
    const Isometry& r0 = d.reflections[0];
    for (const auto& w : d.face0_stabilizer) {
        Isometry g = d.eval(w);
        if (rel_gap(compose(g, r0).m, compose(r0, g).m) > 1e-9)
            throw Error(ErrorCode::CommutationFailure, "rho(" + w + ") does not commute with r_0");
    }
    return d;
}

double hnn_relation_residual(const DoubledHolonomy& d, int face, const std::string& word)
{
    std::string k = std::to_string(face);
    return rel_gap(d.eval("E" + k + word + "e" + k).m, d.mirror(word).m);
}

MeridianData meridian_holonomy(const BendingContext& ctx, int component)
{
    const auto& comps = ctx.multicurve().components;
    if (component < 0 || component >= static_cast<int>(comps.size()))
        throw Error(ErrorCode::ConfigError, "no such multicurve component");
    SpacelikeGeodesicH2 lift = axis_of_lorentz(ctx.group().lorentz(comps[component].word));
    for (double delta = 1e-3; delta > 1e-9; delta *= 0.1) {
        Vec2 near = offset_from_leaf(lift, ctx.x0, delta, +1);
        Vec2 far = offset_from_leaf(lift, ctx.x0, delta, -1);
        auto cr = ctx.leaves->crossings(near, far);
        if (cr.size() != 1 || cr[0].component != component) continue;
        MeridianData m;
        m.leaf = cr[0].leaf;
        m.near_point = near;
        m.far_point = far;
        m.cocycle = bending_cocycle(ctx, ctx.x0, near);
        Isometry rp = reflection(support_plane_at(ctx, near));
        Isometry rq = reflection(support_plane_at(ctx, far));
        m.holonomy = compose(rp, rq);
        return m;
    }
    throw Error(ErrorCode::NoConvergence, "could not isolate a single lift of the component");
}

double meridian_cone_angle(const BendingContext& ctx, int component)
{
    MeridianData m = meridian_holonomy(ctx, component);
    Isometry local = compose(inverse(m.cocycle), compose(m.holonomy, m.cocycle));
    double th = rotation_angle(local, m.leaf);
    switch (ctx.tag) {
    case Geometry::Hyp: return th <= 0.0 ? th + 2.0 * std::numbers::pi : th;
    case Geometry::AdS: return -th;
    case Geometry::HP: return th;
    }
    return th;
}

Vec3 parabolic_fixed_point(const FuchsianGroup& g, const std::string& word)
{
    Mat3 l = g.lorentz(word);
    Eigen::JacobiSVD<Mat3> svd(l - Mat3::Identity(), Eigen::ComputeFullV);
    Vec3 s = svd.singularValues();
    if (!(s(2) < 1e-8 * std::max(1.0, s(0))) || s(1) < 1e-6 * std::max(1.0, s(0)))
        throw Error(ErrorCode::BadWord, "word is not parabolic: " + word);
    Vec3 p = svd.matrixV().col(2);
    if (p(0) < 0.0) p = -p;
    if (std::abs(mink(p, p)) > 1e-8 * p.squaredNorm()) throw Error(ErrorCode::BadWord, "fixed point is not ideal: " + word);
    return p / p(0);
}

std::pair<int, int> add_cusp_lower_face(DoubledHolonomy& d, const std::string& cusp_word, double slope)
{
    const BendingContext& ctx = d.ctx;
    Vec3 p = parabolic_fixed_point(ctx.group(), cusp_word);
    Vec2 dir = p.tail<2>();
    for (double delta = 1e-2; delta > 1e-7; delta *= 0.1) {
        Vec2 xc = (1.0 - delta) * dir;
        Vec2 yc = act_on_disk(ctx, cusp_word, xc);
        if (!ctx.leaves->crossings(xc, yc).empty()) continue;
        Isometry g = bending_cocycle(ctx, ctx.x0, xc);
        Vec4 n;
        n << slope * (minkowski_j() * p), -1.0;
        int k = static_cast<int>(d.planes.size());
        d.face_points.push_back(xc);
        d.planes.push_back(apply_plane(g, base_plane(ctx.tag)));
        d.reflections.push_back(reflection(d.planes.back()));
        int j = k + 1;
        d.face_points.push_back(Vec2::Constant(std::numeric_limits<double>::quiet_NaN()));
        d.planes.push_back(apply_plane(g, Plane(n, ctx.tag)));
        d.reflections.push_back(reflection(d.planes.back()));
        d.lower_faces.push_back(j);
        Vec4 ideal;
        ideal << p, 0.0;
        d.cusp_points.push_back(g.m * ideal);
        return {k, j};
    }
    throw Error(ErrorCode::NoConvergence, "no point of the cusp face found towards the fixed point");
}

bool CuspReport::ok(double tol) const
{
    return commutator_residual < tol && cusp_parabolic && pair_parabolic && fixed_point_residual < tol && rank_two;
}

CuspReport cusp_stabilizer_check(const DoubledHolonomy& d, const std::string& cusp_word, int k, int j)
{
    int slot = -1;
    for (std::size_t i = 0; i < d.lower_faces.size(); ++i)
        if (d.lower_faces[i] == j) slot = static_cast<int>(i);
    if (slot < 0) throw Error(ErrorCode::ConfigError, "face is not a cusp lower face");
    Isometry c = d.eval(cusp_word);
    Isometry pair = compose(d.eval("e" + std::to_string(k)), inverse(d.eval("e" + std::to_string(j))));

    CuspReport r;
    r.commutator_residual = rel_gap(compose(c, pair).m, compose(pair, c).m);
    r.cusp_parabolic = classify_isometry(c) == IsometryClass::Parabolic;
    r.pair_parabolic = classify_isometry(pair) == IsometryClass::Parabolic;
    const Vec4& q = d.cusp_points[slot];
    r.fixed_point_residual = std::max(projective_distance(c.m * q, q), projective_distance(pair.m * q, q));
    r.min_nontrivial_distance = std::numeric_limits<double>::infinity();
    for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) {
            if (m == 0 && n == 0) continue;
            Isometry g = compose(power(c, m), power(pair, n));
            r.min_nontrivial_distance = std::min(r.min_nontrivial_distance, max_abs(g.m - Mat4::Identity()));
        }
    r.rank_two = r.min_nontrivial_distance > 1e-8;
    return r;
}

}  // namespace gt
