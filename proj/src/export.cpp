#include "gt/export.hpp"

#include <cmath>

namespace gt {

namespace {

constexpr double kClipRadius = 0.95;

Vec3 chart_point(const BendingContext& ctx, const Vec2& z) { return affine_chart(bending_map(ctx, z).rep); }

}  // namespace

SceneExport export_surface(const BendingContext& ctx, int n)
{
    if (n < 2) throw Error(ErrorCode::ConfigError, "export grid needs at least two samples per side");
    SceneExport s;
    s.tag = ctx.tag;
    s.t = ctx.scale;

    const auto& iv = ctx.leaves->ideal_vertices();
    std::vector<Vec2> v;
    for (const auto& p : iv) v.push_back(kClipRadius * radial_project(p).normalized());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double u = (i + 0.5) / n, w = (j + 0.5) / n;
            Vec2 z = (1 - u) * (1 - w) * v[0] + u * (1 - w) * v[1] + u * w * v[2] + (1 - u) * w * v[3];
            s.vertices.push_back(chart_point(ctx, z));
        }

    std::vector<SpacelikeGeodesicH2> leaves;
    for (std::size_t k = 0; k < v.size(); ++k)
        for (const auto& nl : ctx.leaves->leaves_near_segment(v[k], v[(k + 1) % v.size()])) {
            bool dup = false;
            for (const auto& l : leaves)
                if ((l.eta - nl.leaf.eta).norm() < 1e-8 || (l.eta + nl.leaf.eta).norm() < 1e-8) dup = true;
            if (!dup) leaves.push_back(nl.leaf);
        }
    const int m = 32;
    for (const auto& l : leaves) {
        const Vec3& e = l.eta;
        Vec2 g(e(1), e(2));
        Vec2 foot = e(0) * g / g.squaredNorm();
        double r2 = kClipRadius * kClipRadius - foot.squaredNorm();
        if (r2 <= 0.0) continue;
        Vec2 dir(-g(1), g(0));
        dir.normalize();
        double h = std::sqrt(r2);
        std::vector<Vec3> line;
        for (int k = 0; k <= m; ++k) line.push_back(chart_point(ctx, foot + (-h + 2.0 * h * k / m) * dir));
        s.polylines.push_back(std::move(line));
    }
    return s;
}

int points_outside_model(const SceneExport& s)
{
    int bad = 0;
    auto check = [&](const Vec3& p) {
        if (contains(s.tag, ProjectivePoint(1.0, p(0), p(1), p(2))) != Membership::Interior) ++bad;
    };
    for (const auto& p : s.vertices) check(p);
    for (const auto& l : s.polylines)
        for (const auto& p : l) check(p);
    return bad;
}

}  // namespace gt
