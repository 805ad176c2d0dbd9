#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference in
// `kernels::scalar` and vector variants in `kernels::avx2` / `kernels::neon`;
// the unqualified entry points dispatch at runtime to the best variant the
// CPU supports. Variants are required to produce bit-identical results.

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>

#include "cyclogon/types.hpp"

namespace cyclogon::kernels {

/// Sign census of a batch of orientation values against a dead band.
struct SignSummary {
  std::size_t positive = 0;  // value > eps
  std::size_t negative = 0;  // value < -eps
  std::size_t marginal = 0;  // |value| <= eps
  double min_abs = std::numeric_limits<double>::infinity();

  friend bool operator==(const SignSummary&, const SignSummary&) = default;
};

/// Sign census of central angles.
struct AngleCensus {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t first_positive = kNone;
  std::size_t first_negative = kNone;
  double min_abs = std::numeric_limits<double>::infinity();

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  friend bool operator==(const AngleCensus&, const AngleCensus&) = default;
};

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// Best variant supported by this CPU and build.
Isa detected_isa() noexcept;
/// Variant used by the dispatching entry points (detected unless forced).
Isa active_isa() noexcept;
/// Pins dispatch to `isa`; throws InvalidArgument if unsupported here.
void force_isa(Isa isa);
/// Returns dispatch to the detected variant.
void reset_isa() noexcept;
bool isa_supported(Isa isa) noexcept;

// out[j] = (b - a) x (p_j - a), the doubled signed area of (a, b, p_j).
// Equal to the 3x3 homogeneous determinant with rows p_j, a, b.
void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out);

SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps);

AngleCensus angle_census(std::span<const double> thetas);

namespace scalar {
void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out);
SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps);
AngleCensus angle_census(std::span<const double> thetas);
}  // namespace scalar

namespace avx2 {
bool available() noexcept;
void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out);
SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps);
AngleCensus angle_census(std::span<const double> thetas);
}  // namespace avx2

namespace neon {
bool available() noexcept;
void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out);
SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps);
AngleCensus angle_census(std::span<const double> thetas);
}  // namespace neon

}  // namespace cyclogon::kernels
