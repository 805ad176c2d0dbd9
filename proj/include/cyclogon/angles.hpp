#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "cyclogon/types.hpp"

namespace cyclogon {

/// Circle through the first three vertices, checked against the rest.
///
/// Throws CollinearSeed when the first three points are collinear (this
/// includes coincident seeds) and NotConcyclic when some later vertex is
/// farther than tol.geom * (1 + radius) from the circle; the error carries
/// the index and deviation of the worst vertex.
Circle fit_circumcircle(std::span<const Vertex> raw, const Tolerance& tol = {});

/// Maps a raw cyclic polygon onto the unit circle with V0 = (1, 0).
///
/// The map is a similarity (translate, scale, rotate), so convexity and the
/// signs of all orientation determinants are preserved. Vertices within
/// tolerance of the fitted circle are projected onto it exactly.
CanonicalPolygon canonicalize(std::span<const Vertex> raw,
                              const Tolerance& tol = {});

/// Signed angle from `from` to `to` as seen from the origin, in (-pi, pi].
/// The branch-cut value -pi is reported as +pi.
double principal_step(Vertex from, Vertex to) noexcept;

SigmaSequence lift_sigma(const CanonicalPolygon& poly, const Tolerance& tol = {});

AngleProfile central_angles(const SigmaSequence& sigma, const Tolerance& tol = {});

/// lift_sigma followed by central_angles.
AngleProfile angle_profile(const CanonicalPolygon& poly, const Tolerance& tol = {});

/// Partial sums sigma_i = theta_0 + ... + theta_{i-1}, i = 0..n.
SigmaSequence sigma_of(const AngleProfile& profile, const Tolerance& tol = {});

/// O(n) single-pass classifier driven by the signs of the central angles and
/// the winding number.
ConvexityVerdict classify_by_angles(const AngleProfile& profile);

/// Label describing the sign pattern only, ignoring the winding number:
/// all positive -> A1, all negative -> A2, one negative -> A3,
/// one positive -> A4, otherwise A5.
Alternative sign_pattern_alternative(const AngleProfile& profile);

/// Vertices (cos sigma_i, sin sigma_i). Throws DegenerateProfile when two
/// partial sums coincide modulo 2pi (within tol.geom as chord distance).
CanonicalPolygon profile_to_vertices(const AngleProfile& profile,
                                     const Tolerance& tol = {});

/// Profile of (V_s, V_{s+1}, ..., V_{s-1}).
AngleProfile rotated(const AngleProfile& profile, std::size_t shift);

/// Profile of the re-oriented polygon (V_{n-1}, ..., V_0). Angles are
/// negated, except that a step of +pi stays +pi (the half-open interval
/// excludes -pi), so the winding number becomes -w + #{theta_i == pi}.
AngleProfile reoriented(const AngleProfile& profile, const Tolerance& tol = {});

/// Closest pair of points on the unit circle whose chord distance is at most
/// `eps`, ordered (lower index, higher index). O(n log n).
std::optional<std::pair<std::size_t, std::size_t>> find_coincident_pair(
    std::span<const Vertex> unit_vertices, double eps);

}  // namespace cyclogon
