#pragma once

#include <span>
#include <vector>

#include "polar_jacobi/poly.hpp"

namespace pj {

inline constexpr double kHullTolerance = 1e-9;

/// Convex hull of planar points, counterclockwise from the lowest-leftmost vertex.
///
/// Collinear boundary points are dropped. A degenerate hull has one vertex
/// (all points equal) or two (all points collinear).
std::vector<Complex> convex_hull(std::span<const Complex> points);

/// Euclidean distance from p to the hull polygon; zero inside.
double hull_distance(std::span<const Complex> hull, Complex p);

/// True when p is inside the hull or within eps of it.
bool hull_contains(std::span<const Complex> hull, Complex p, double eps = kHullTolerance);

}  // namespace pj
