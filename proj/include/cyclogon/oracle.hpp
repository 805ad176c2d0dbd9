#pragma once

// Ground truth for differential testing. Nothing here depends on the
// central angles or on the determinant machinery.

#include <span>
#include <vector>

#include "cyclogon/types.hpp"

namespace cyclogon::oracle {

/// Minimum pairwise distance exceeds tol.geom. O(n^2).
bool is_ordinary(std::span<const Vertex> raw, const Tolerance& tol = {});

/// Extreme points in counterclockwise order (Andrew's monotone chain);
/// collinear boundary points are dropped. Throws AllCollinear.
std::vector<Vertex> convex_hull(std::span<const Vertex> points);

/// Indices of the hull vertices, counterclockwise.
std::vector<std::size_t> convex_hull_indices(std::span<const Vertex> points);

/// The edge union equals the hull boundary. With every vertex extreme (true
/// for ordinary cyclic polygons) this holds exactly when the vertex sequence
/// is a cyclic rotation of the hull order or of its reversal.
bool is_convex_by_hull(const CanonicalPolygon& poly);

/// Every edge has all other vertices strictly on one side, measured as the
/// signed distance to the edge line along its unit normal. Throws
/// MarginalOffset when some distance is within tol.geom of zero.
bool is_convex_by_halfplanes(const CanonicalPolygon& poly, const Tolerance& tol = {});

}  // namespace cyclogon::oracle
