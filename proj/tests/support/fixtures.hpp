#pragma once

#include <cstdint>
#include <vector>

#include "sweepout/curve.hpp"
#include "sweepout/geometry.hpp"

namespace sweepout::fixtures {

// Boundary of the spherical cap of angular radius `radius` about `centre`,
// sampled at n vertices. Positive orientation = induced boundary orientation
// of the cap under the outward-normal orientation of the sphere.
ClosedCurve cap_boundary(const SpherePoint& centre, double radius, int n, int orientation = +1);

// Map a planar polyline into the sphere through the oriented chart whose
// projection centre (antipode of the pole) is `site`; `scale` multiplies the
// planar coordinates first.
ClosedCurve chart_polyline(const SpherePoint& site, const std::vector<Vec2>& pts,
                           double scale = 1.0);

// Planar figure-eight (lemniscate of Bernoulli) with lobe scales; sigma_left
// or sigma_right below 1 shrink the respective lobe toward the crossing at
// the origin, 0 removes it entirely.
std::vector<Vec2> lemniscate2d(double a, int n, double sigma_right = 1.0,
                               double sigma_left = 1.0);

// Planar trefoil-shadow polyline (3 transverse crossings). The lobe factor
// controls how large the outer lobes are relative to the inner triangle.
std::vector<Vec2> trefoil2d(double a, int n, double lobe = 2.0);

// Regular n-gon inscribed in the circle of radius r about c (planar).
std::vector<Vec2> circle2d(const Vec2& c, double r, int n, bool ccw = true);

// Small self-crossing loop (nodal cubic) of extent ~size, drawn in the local
// frame of the host polyline and spliced in place of vertex `at`; sigma in
// [0, 1] scales the whole detour (0 leaves the polyline unchanged),
// orientation flips the loop side. The loop encloses its disc
// counterclockwise when orientation = +1 and the host runs counterclockwise.
std::vector<Vec2> insert_kink(const std::vector<Vec2>& host, int at, double size,
                              int orientation = +1, double sigma = 1.0);

// n samples of the equator with optionally uneven spacing.
ClosedCurve equator(int n, bool uneven = false);

}  // namespace sweepout::fixtures
