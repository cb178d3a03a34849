#include "gt/bending.hpp"

#include <cmath>
#include <numbers>

namespace gt {

BendingContext BendingContext::make(const FuchsianGroup& group, const WeightedMulticurve& mc, const Vec2& x0, int sign,
                                    Geometry tag, double scale)
{
    BendingContext ctx;
    ctx.leaves = std::make_shared<const LeafEnumerator>(group, mc);
    ctx.x0 = x0;
    ctx.sign = sign >= 0 ? +1 : -1;
    ctx.tag = tag;
    ctx.scale = scale;
    Vec3 p = radial_lift(x0);
    for (const auto& nl : ctx.leaves->leaves_near_segment(x0, x0))
        if (std::abs(mink(nl.leaf.eta, p)) < kEpsGeom) throw Error(ErrorCode::EndpointOnLeaf, "base point lies on a leaf");
    return ctx;
}

BendingContext BendingContext::with(Geometry g, double s) const
{
    BendingContext c = *this;
    c.tag = g;
    c.scale = s;
    return c;
}

Vec2 default_base_point(const LeafEnumerator& en)
{
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double r = 0.02;
    for (int k = 1; k < 200; ++k) {
        double rad = 0.05 + 0.01 * (k % 17);
        Vec2 p = en.domain_center() + rad * Vec2(std::cos(k * golden), std::sin(k * golden));
        if (p.norm() > 0.9) continue;
        bool clear = true;
        for (int j = 0; j < 8 && clear; ++j) {
            double a0 = 2 * std::numbers::pi * j / 8, a1 = 2 * std::numbers::pi * (j + 1) / 8;
            Vec2 u = p + r * Vec2(std::cos(a0), std::sin(a0));
            Vec2 v = p + r * Vec2(std::cos(a1), std::sin(a1));
            if (!en.leaves_near_segment(u, v).empty()) clear = false;
        }
        if (clear) return p;
    }
    throw Error(ErrorCode::EndpointOnLeaf, "no clear base point near the fundamental domain");
}

Isometry sigma_embed(const BendingContext& ctx, const std::string& word)
{
    return embed_h2(ctx.group().lorentz(word), ctx.tag);
}

namespace {

// Rotations about far leaves have huge entries that cancel in the product.
// Writing each one as s(g) R s(g)^-1 about the component axis and merging
// neighbouring group elements keeps every factor of moderate size.
Isometry telescoped_product(const BendingContext& ctx, const std::vector<LeafCrossing>& cr, const std::string& tail)
{
    if (ctx.scale == 0.0 || cr.empty()) return sigma_embed(ctx, tail);
    const auto& comps = ctx.multicurve().components;
    std::vector<Vec3> axes;
    for (const auto& comp : comps) axes.push_back(axis_of_lorentz(ctx.group().lorentz(comp.word)).eta);
    Isometry b = sigma_embed(ctx, cr.front().group_element);
    for (std::size_t i = 0; i < cr.size(); ++i) {
        const LeafCrossing& c = cr[i];
        const Vec3& eta = axes[c.component];
        Vec3 moved = ctx.group().lorentz(c.group_element) * eta;
        double s = moved.dot(c.leaf.eta) >= 0.0 ? 1.0 : -1.0;
        b = compose(b, rotation(ctx.tag, SpacelikeGeodesicH2(eta), s * ctx.angle(c.weight)));
        std::string next = i + 1 < cr.size() ? cr[i + 1].group_element : tail;
        b = compose(b, sigma_embed(ctx, reduce_word(inverse_word(c.group_element) + next)));
    }
    return b;
}

}  // namespace

Isometry bending_cocycle(const BendingContext& ctx, const Vec2& x, const Vec2& y, bool skip_endpoint)
{
    if (ctx.scale == 0.0) return Isometry::identity(ctx.tag);
    return telescoped_product(ctx, ctx.leaves->crossings(x, y, skip_endpoint), "");
}

Vec2 act_on_disk(const BendingContext& ctx, const std::string& word, const Vec2& z)
{
    return radial_project(ctx.group().lorentz(word) * radial_lift(z));
}

Isometry bent_holonomy(const BendingContext& ctx, const std::string& word)
{
    Vec2 y = act_on_disk(ctx, word, ctx.x0);
    if (ctx.scale == 0.0) return sigma_embed(ctx, word);
    return telescoped_product(ctx, ctx.leaves->crossings(ctx.x0, y), reduce_word(word));
}

ProjectivePoint bending_map(const BendingContext& ctx, const Vec2& x)
{
    Isometry b = bending_cocycle(ctx, ctx.x0, x, true);
    return apply(b, ProjectivePoint(1.0, x(0), x(1), 0.0));
}

double psi_lambda(const BendingContext& ctx, const Vec2& z)
{
    double s = 0.0;
    Vec3 p(1.0, z(0), z(1));
    for (const auto& c : ctx.leaves->crossings(ctx.x0, z, true)) s += -ctx.angle(c.weight) * mink(c.leaf.eta, p);
    return s;
}

Plane support_plane_at(const BendingContext& ctx, const Vec2& x)
{
    return apply_plane(bending_cocycle(ctx, ctx.x0, x), base_plane(ctx.tag));
}

Aligner compute_aligner(const BendingContext& plus, const BendingContext& minus)
{
    if (plus.tag != Geometry::HP || minus.tag != Geometry::HP)
        throw Error(ErrorCode::BadAligner, "the aligner is defined between half-pipe representations");
    Eigen::Matrix<double, 6, 3> m;
    Eigen::Matrix<double, 6, 1> rhs;
    const char* gens[2] = {"A", "B"};
    for (int k = 0; k < 2; ++k) {
        MinkowskiIsometry p = hp_to_minkowski(bent_holonomy(plus, gens[k]));
        MinkowskiIsometry q = hp_to_minkowski(bent_holonomy(minus, gens[k]));
        if (max_abs(p.a - q.a) > 1e-9) throw Error(ErrorCode::BadAligner, "linear parts differ");
        m.block<3, 3>(3 * k, 0) = Mat3::Identity() - p.a;
        rhs.segment<3>(3 * k) = p.v - q.v;
    }
    Vec3 v = m.colPivHouseholderQr().solve(rhs);
    Aligner out;
    out.a = minkowski_to_hp({Mat3::Identity(), v});
    out.residual = (m * v - rhs).cwiseAbs().maxCoeff();
    return out;
}

ProjectivePoint hp_developing_map(const BendingContext& plus, const BendingContext& minus, const Isometry& aligner,
                                  const Vec2& x, double s)
{
    if (aligner.tag != Geometry::HP || max_abs(aligner.m.topLeftCorner<3, 3>() - Mat3::Identity()) > 1e-12 ||
        max_abs(aligner.m.block<3, 1>(0, 3)) > 1e-12)
        throw Error(ErrorCode::BadAligner, "aligner must be [[Id,0],[v,1]]");
    double up = hp_height(bending_map(plus, x));
    double lo = hp_height(apply(aligner, bending_map(minus, x)));
    Vec3 xh = radial_lift(x);
    return ProjectivePoint(Vec4(xh(0), xh(1), xh(2), s * up + (1.0 - s) * lo));
}

}  // namespace gt
