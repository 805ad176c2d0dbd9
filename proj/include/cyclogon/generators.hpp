#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "cyclogon/types.hpp"

namespace cyclogon::gen {

/// Smallest central-angle magnitude and smallest angular gap between any two
/// vertices in generated profiles.
inline constexpr double kMinAngle = 1e-4;

/// Rejection-sampling budget per call before giving up with Unsatisfiable.
inline constexpr int kMaxAttempts = 10000;

using Label = std::variant<Condition, Alternative>;

std::string_view to_string(const Label& label) noexcept;

/// Smallest n for which the label can be realized: 3 for I-IV, 5 for A1/A2
/// (all angles below pi must close up to at least 4pi), 4 for A3/A4 and A5.
std::size_t min_size(const Label& label) noexcept;

/// Deterministic per seed. II and IV are the elementwise negations of I and
/// III for the same (n, seed).
AngleProfile gen_convex_profile(Condition condition, std::size_t n,
                                std::uint64_t seed);

/// The result is checked against classify_by_angles before return. A2 and
/// A4 are negations of A1 and A3. Throws Unsatisfiable when n is below
/// min_size or sampling keeps failing.
AngleProfile gen_nonconvex_profile(Alternative alternative, std::size_t n,
                                   std::uint64_t seed);

AngleProfile gen_profile(const Label& label, std::size_t n, std::uint64_t seed);

/// Condition I profile for large n, where kMinAngle spacing is impossible
/// (n > 2pi / kMinAngle). Angles are 2pi/n scaled by factors in
/// [1 - spread, 1 + spread], closed exactly. Used for timing.
AngleProfile gen_jittered_convex(std::size_t n, std::uint64_t seed, double spread = 0.5);

/// Places profile_to_vertices(profile) on `circle`, rotated by `rotation`.
std::vector<Vertex> gen_vertices_on_circle(const AngleProfile& profile,
                                           const Circle& circle, double rotation);

struct Placement {
  Circle circle;
  double rotation = 0.0;
};

/// Center in [-10, 10]^2, radius log-uniform in [0.1, 100], rotation in
/// [-pi, pi).
Placement random_placement(std::uint64_t seed);

/// Smallest angular gap, modulo 2pi, between two vertices of the profile.
double min_vertex_gap(const AngleProfile& profile);

}  // namespace cyclogon::gen
