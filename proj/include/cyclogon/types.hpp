#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclogon/error.hpp"

namespace cyclogon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Numerical tolerances shared by every module.
///
/// `geom` guards concyclicity, vertex distinctness, unit norms and strict
/// signs; `winding` guards integrality of the winding number.
struct Tolerance {
  double geom = 1e-9;
  double winding = 1e-6;

  /// Defaults, with `geom` overridden by the CYCLOGON_EPS environment
  /// variable when it parses as a positive number.
  static Tolerance from_env();
};

struct Vertex {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Throws InvalidArgument unless both coordinates are finite.
Vertex make_vertex(double x, double y);

struct Circle {
  Vertex center;
  double radius = 1.0;
};

/// An ordinary cyclic polygon normalized onto the unit circle with its first
/// vertex at (1, 0).
class CanonicalPolygon {
 public:
  /// Validates the invariants (n >= 3, unit norms, V0 = (1,0), pairwise
  /// distinct vertices) and throws on violation.
  static CanonicalPolygon from_unit_vertices(std::vector<Vertex> vertices,
                                             Circle source_circle,
                                             const Tolerance& tol = {});

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& operator[](std::size_t i) const noexcept { return vertices_[i]; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Circle& source_circle() const noexcept { return source_circle_; }

 private:
  CanonicalPolygon(std::vector<Vertex> v, Circle c)
      : vertices_(std::move(v)), source_circle_(c) {}

  std::vector<Vertex> vertices_;
  Circle source_circle_;
};

/// Lifted angular coordinates sigma_0..sigma_n with sigma_0 = 0 and every
/// step in the half-open interval (-pi, pi].
class SigmaSequence {
 public:
  /// Validates sigma_0 = 0, the step interval and near-integral
  /// sigma_n / 2pi. Throws InvalidProfile or NonIntegerWinding.
  static SigmaSequence from_values(std::vector<double> sigma,
                                   const Tolerance& tol = {});

  std::span<const double> values() const noexcept { return sigma_; }
  double operator[](std::size_t i) const noexcept { return sigma_[i]; }
  /// Number of polygon vertices (one less than the number of values).
  std::size_t polygon_size() const noexcept { return sigma_.size() - 1; }

 private:
  explicit SigmaSequence(std::vector<double> s) : sigma_(std::move(s)) {}
  std::vector<double> sigma_;
};

/// Central angles theta_0..theta_{n-1} in (-pi, pi] and the integer winding
/// number they close up to.
class AngleProfile {
 public:
  /// Validates range, non-zero magnitude and that the angles sum to
  /// 2*pi*winding. Throws InvalidProfile or DuplicateVertices.
  static AngleProfile make(std::vector<double> thetas, std::int64_t winding,
                           const Tolerance& tol = {});

  /// Infers the winding number by rounding sum/2pi; throws NonIntegerWinding
  /// when the sum is not within tolerance of a whole number of turns.
  static AngleProfile from_thetas(std::vector<double> thetas,
                                  const Tolerance& tol = {});

  std::span<const double> thetas() const noexcept { return thetas_; }
  double operator[](std::size_t i) const noexcept { return thetas_[i]; }
  std::size_t size() const noexcept { return thetas_.size(); }
  std::int64_t winding() const noexcept { return winding_; }

  friend bool operator==(const AngleProfile&, const AngleProfile&) = default;

 private:
  AngleProfile(std::vector<double> t, std::int64_t w)
      : thetas_(std::move(t)), winding_(w) {}

  std::vector<double> thetas_;
  std::int64_t winding_ = 0;
};

/// The four convex cases of the central-angle criterion.
enum class Condition { I, II, III, IV };

/// The five exhaustive ways a profile can fail every convex case.
enum class Alternative { A1, A2, A3, A4, A5 };

std::string_view to_string(Condition c) noexcept;
std::string_view to_string(Alternative a) noexcept;

struct ConvexityVerdict {
  std::variant<Condition, Alternative> label;
  /// Index of the lone negative angle (III) or lone positive angle (IV).
  std::optional<std::size_t> distinguished_index;

  bool is_convex() const noexcept {
    return std::holds_alternative<Condition>(label);
  }
  std::optional<Condition> condition() const noexcept;
  std::optional<Alternative> alternative() const noexcept;

  friend bool operator==(const ConvexityVerdict&,
                         const ConvexityVerdict&) = default;
};

}  // namespace cyclogon
