#pragma once

#include <memory>

#include "gt/fuchsian.hpp"
#include "gt/isometry.hpp"

namespace gt {

// Fuchsian base, multicurve and base point; `scale` multiplies every weight
// and `sign` selects positive or negative bending.
struct BendingContext {
    std::shared_ptr<const LeafEnumerator> leaves;
    Vec2 x0 = Vec2::Zero();
    int sign = +1;
    Geometry tag = Geometry::Hyp;
    double scale = 1.0;

    static BendingContext make(const FuchsianGroup& group, const WeightedMulticurve& mc, const Vec2& x0, int sign,
                               Geometry tag, double scale);

    // Same base data, different geometry and scale; shares the leaf cache.
    BendingContext with(Geometry g, double s) const;

    const FuchsianGroup& group() const { return leaves->group(); }
    const WeightedMulticurve& multicurve() const { return leaves->multicurve(); }
    double angle(double weight) const { return sign * scale * weight; }
};

// A point of the domain center's face that keeps clear of every leaf.
Vec2 default_base_point(const LeafEnumerator& en);

Isometry sigma_embed(const BendingContext& ctx, const std::string& word);

// Ordered product of rotations about the leaves crossed from x to y, the
// leftmost factor being the leaf nearest x. Leaves through y are omitted
// when skip_endpoint is set.
Isometry bending_cocycle(const BendingContext& ctx, const Vec2& x, const Vec2& y, bool skip_endpoint = false);

Vec2 act_on_disk(const BendingContext& ctx, const std::string& word, const Vec2& z);

Isometry bent_holonomy(const BendingContext& ctx, const std::string& word);

ProjectivePoint bending_map(const BendingContext& ctx, const Vec2& x);

double psi_lambda(const BendingContext& ctx, const Vec2& z);

Plane support_plane_at(const BendingContext& ctx, const Vec2& x);

// Translation aligning the negative-side HP representation with the positive one.
struct Aligner {
    Isometry a;
    double residual = 0.0;
};

Aligner compute_aligner(const BendingContext& plus, const BendingContext& minus);

ProjectivePoint hp_developing_map(const BendingContext& plus, const BendingContext& minus, const Isometry& aligner,
                                  const Vec2& x, double s);

}  // namespace gt
