#pragma once

#include <string>
#include <vector>

#include "gt/bending.hpp"

namespace gt {

struct SceneExport {
    Geometry tag = Geometry::HP;
    double t = 0.0;
    std::string chart = "x0=1";
    std::vector<Vec3> vertices;                // affine chart coordinates
    std::vector<std::vector<Vec3>> polylines;  // bent images of the leaves
};

// Samples the bending map on an n x n grid over the fundamental quadrilateral
// and traces the leaves meeting it; points on a leaf take the value from the
// base point's side.
SceneExport export_surface(const BendingContext& ctx, int n);

// Number of exported points outside the open model region of the chart.
int points_outside_model(const SceneExport& s);

}  // namespace gt
