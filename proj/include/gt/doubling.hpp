#pragma once

#include <string>
#include <vector>

#include "gt/bending.hpp"

namespace gt {

// Holonomy of the double along the support planes of the bent surface.
// Face 0 carries the base point; r_i reflects in the support plane of face i
// and the stable letter e<i> (inverse E<i>) maps to r_i r_0.
struct DoubledHolonomy {
    BendingContext ctx;
    std::vector<Vec2> face_points;   // NaN for lower faces, which are not faces of the bent surface
    std::vector<Plane> planes;
    std::vector<Isometry> reflections;
    std::vector<std::string> face0_stabilizer;  // sample words, checked to commute with r_0
    std::vector<int> lower_faces;               // indices of faces added by add_cusp_lower_face
    std::vector<Vec4> cusp_points;              // ideal point shared by each lower face and its cusp face
    std::vector<Isometry> generators;           // rho of A, B, a, b

    std::size_t face_count() const { return planes.size(); }

    // Words over A, B, a, b and e<k>, E<k> with k >= 1, e.g. "Ae2bE1".
    Isometry eval(const std::string& word) const;

    // Holonomy of a surface word seen in the mirror copy: r_0 rho(w) r_0.
    Isometry mirror(const std::string& word) const;
};

DoubledHolonomy double_holonomy(const BendingContext& ctx, const std::vector<Vec2>& face_points);

// Words of length <= max_len whose translate of x stays in the face of x.
std::vector<std::string> face_stabilizer_words(const BendingContext& ctx, const Vec2& x, int max_len = 4);

// |rho-hat(E<i> w e<i>) - rho-hat(mirror of w)| for w in the stabilizer of face i.
double hnn_relation_residual(const DoubledHolonomy& d, int face, const std::string& word);

// Cone angle of the meridian about the lifts of multicurve component `component`,
// evaluated at the geometry and scale of ctx: 2(pi - t a) in Hyp, -2|t| a in AdS
// and -2a in HP at unit scale.
double meridian_cone_angle(const BendingContext& ctx, int component);

// r_P r_Q for the support planes on either side of one lift of the component.
struct MeridianData {
    Isometry holonomy;
    Isometry cocycle;  // bending cocycle up to the near side
    SpacelikeGeodesicH2 leaf;
    Vec2 near_point;
    Vec2 far_point;
};
MeridianData meridian_holonomy(const BendingContext& ctx, int component);

// Ideal fixed point (null vector, x0 > 0) of a parabolic word of the Fuchsian group.
Vec3 parabolic_fixed_point(const FuchsianGroup& g, const std::string& word);

// Adds the reflection of a second plane through the cusp of `cusp_word`,
// invariant under its holonomy, together with the face of the bent surface
// reaching that cusp. Returns (cusp face index, lower face index).
std::pair<int, int> add_cusp_lower_face(DoubledHolonomy& d, const std::string& cusp_word, double slope = -1.0);

struct CuspReport {
    double commutator_residual = 0.0;
    bool cusp_parabolic = false;
    bool pair_parabolic = false;
    double fixed_point_residual = 0.0;  // both elements fix the shared ideal point
    double min_nontrivial_distance = 0.0;  // over |m|,|n| <= 4 not both zero
    bool rank_two = false;
    bool ok(double tol = 1e-8) const;
};

// Checks that rho-hat(cusp) and rho-hat(e_k) rho-hat(e_j)^-1 span a rank-two
// abelian parabolic group.
CuspReport cusp_stabilizer_check(const DoubledHolonomy& d, const std::string& cusp_word, int k, int j);

}  // namespace gt
