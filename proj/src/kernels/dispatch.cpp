#include <atomic>

#include "cyclogon/kernels.hpp"

namespace cyclogon::kernels {

namespace {

// -1: no override; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2::available();
    case Isa::Neon: return neon::available();
  }
  return false;
}

Isa detected_isa() noexcept {
  static const Isa detected = [] {
    if (avx2::available()) return Isa::Avx2;
    if (neon::available()) return Isa::Neon;
    return Isa::Scalar;
  }();
  return detected;
}

Isa active_isa() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  return forced < 0 ? detected_isa() : static_cast<Isa>(forced);
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorCode::InvalidArgument,
                "kernel variant '" + std::string(to_string(isa)) +
                    "' is not supported on this machine");
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { g_forced.store(-1, std::memory_order_relaxed); }

void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::orient_row(a, b, xs, ys, out);
    case Isa::Neon: return neon::orient_row(a, b, xs, ys, out);
    case Isa::Scalar: break;
  }
  scalar::orient_row(a, b, xs, ys, out);
}

SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::orient_summary(a, b, xs, ys, eps);
    case Isa::Neon: return neon::orient_summary(a, b, xs, ys, eps);
    case Isa::Scalar: break;
  }
  return scalar::orient_summary(a, b, xs, ys, eps);
}

AngleCensus angle_census(std::span<const double> thetas) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::angle_census(thetas);
    case Isa::Neon: return neon::angle_census(thetas);
    case Isa::Scalar: break;
  }
  return scalar::angle_census(thetas);
}

}  // namespace cyclogon::kernels
