#pragma once

#include <vector>

#include "scgeo/vec2.hpp"

namespace scgeo {

// Convex hull in CCW order, first vertex not repeated. Collinear interior
// points are dropped using an angular tolerance (cross <= 1e-12 |u||v|), so
// the test is scale-free; an absolute cutoff would misclassify near-collinear
// triples on very small hulls and break width monotonicity downstream.
// Degenerate inputs yield a single point or the two segment endpoints.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Euclidean diameter of the point set (rotating calipers on the hull).
double diameter(const std::vector<Vec2>& pts);

// Boundary length of the hull polygon as returned by convex_hull; a segment
// counts both sides (2L), a point is 0, matching the Cauchy formula below.
double perimeter(const std::vector<Vec2>& hull);

// Mean width via support-function quadrature over quadrature_n angles
// (requires quadrature_n >= 360). Cauchy's formula gives perimeter/pi exactly;
// the quadrature exists to cross-check it and for width-in-direction studies.
double mean_width(const std::vector<Vec2>& pts, int quadrature_n = 8192);

// Mean width by Cauchy's formula, perimeter(hull)/pi; exact and O(|hull|).
double mean_width_exact(const std::vector<Vec2>& hull);

}  // namespace scgeo
