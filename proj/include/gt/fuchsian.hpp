#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gt/core_geometry.hpp"

namespace gt {

// Words are strings over {A, B, a, b} with a = A^-1 and b = B^-1.
std::string reduce_word(const std::string& w);
std::string inverse_word(const std::string& w);
void validate_word(const std::string& w);

// Trace coordinates of a marked punctured torus.
struct TeichPoint {
    double x = 3.0;
    double y = 3.0;
    double z = 3.0;
};

double fricke_residual(const TeichPoint& tp);

// SL(2,R) -> SO_0(1,2) through g . S . g^T on S = [[x0+x1, x2], [x2, x0-x1]].
// The origin of the disk corresponds to i in the upper half-plane.
Mat3 lorentz_of_sl2(const Mat2& g);

struct FuchsianGroup {
    std::vector<Mat2> generators;
    std::vector<Mat3> lorentz_generators;
    std::vector<std::string> cusp_words;

    Mat2 eval(const std::string& word) const;
    Mat3 lorentz(const std::string& word) const;
};

FuchsianGroup build_punctured_torus(const TeichPoint& tp);
FuchsianGroup punctured_torus_from_generators(const Mat2& a, const Mat2& b);

// Oriented from the repelling to the attracting fixed point.
SpacelikeGeodesicH2 axis(const Mat2& g);
SpacelikeGeodesicH2 axis_of_lorentz(const Mat3& l);
double translation_length(const Mat2& g);

struct MulticurveComponent {
    std::string word;
    double weight = 1.0;
};

struct WeightedMulticurve {
    std::vector<MulticurveComponent> components;

    WeightedMulticurve scaled(double c) const;
};

struct LeafCrossing {
    SpacelikeGeodesicH2 leaf;  // oriented with the segment's endpoint on its left
    double weight = 0.0;
    double parameter = 0.0;    // affine position along the segment in the disk chart
    std::string group_element; // the leaf is group_element . axis(component word)
    int component = 0;
};

// Lifted leaves of a multicurve, enumerated through the tiling of the disk by
// translates of the ideal fundamental quadrilateral of the punctured torus.
class LeafEnumerator {
public:
    LeafEnumerator(const FuchsianGroup& group, const WeightedMulticurve& mc, std::size_t node_budget = 400000);

    // Crossings of the open segment [x, y], ordered from x to y. Endpoints
    // closer than kEpsGeom to a leaf raise EndpointOnLeaf unless skip_endpoint
    // is set, in which case those leaves are dropped.
    std::vector<LeafCrossing> crossings(const Vec2& x, const Vec2& y, bool skip_endpoint = false) const;

    // Every lifted leaf meeting the closed segment, unoriented.
    struct NearLeaf {
        SpacelikeGeodesicH2 leaf;
        int component;
        std::string group_element;
    };
    std::vector<NearLeaf> leaves_near_segment(const Vec2& x, const Vec2& y) const;

    const FuchsianGroup& group() const { return group_; }
    const WeightedMulticurve& multicurve() const { return mc_; }
    const std::vector<Vec3>& ideal_vertices() const { return vertices_; }
    Vec2 domain_center() const { return center_; }
    std::size_t local_leaf_count() const { return local_.size(); }

private:
    struct Tile {
        std::string word;
        Mat3 l;
    };
    // Breadth-first search over the tiles meeting the polyline `path`, which
    // starts inside the base tile.
    std::vector<Tile> tiles_meeting(const std::vector<Vec2>& path, const std::vector<Vec2>& target) const;

    FuchsianGroup group_;
    WeightedMulticurve mc_;
    std::size_t budget_;
    std::vector<Vec3> vertices_;
    Vec2 center_;
    std::vector<NearLeaf> local_;
};

std::vector<LeafCrossing> leaves_crossing(const FuchsianGroup& group, const WeightedMulticurve& mc, const Vec2& x,
                                          const Vec2& y);

double multicurve_length(const TeichPoint& tp, const WeightedMulticurve& mc);
double multicurve_length(const FuchsianGroup& group, const WeightedMulticurve& mc);

// Number of leaves crossed by one period of the axis of `word`, leaves that
// coincide with that axis excluded.
int intersection_count(const FuchsianGroup& group, const WeightedMulticurve& mc, const std::string& word);

// Length-twist chart: x = 2 cosh L, y = 2 coth L cosh(w - L/2), z = 2 coth L cosh(w + L/2).
TeichPoint teich_from_chart(double l, double w);
Vec2 chart_from_teich(const TeichPoint& tp);

struct KerckhoffResult {
    TeichPoint point;
    Vec2 chart;  // (log L, w)
    double objective = 0.0;
    double gradient_norm = 0.0;
    double hessian_condition = 0.0;
    int iterations = 0;
    bool filling_ok = true;
    std::vector<std::string> filling_failures;
};

double kerckhoff_objective(const Vec2& chart, const WeightedMulticurve& lambda, const WeightedMulticurve& mu);
Vec2 kerckhoff_gradient(const Vec2& chart, const WeightedMulticurve& lambda, const WeightedMulticurve& mu,
                        double h = 1e-5);

KerckhoffResult kerckhoff_point(const WeightedMulticurve& lambda, const WeightedMulticurve& mu, const TeichPoint& init,
                                unsigned seed = 0);

}  // namespace gt
