#include "cyclogon/kernels.hpp"

#if defined(__aarch64__)
#define CYCLOGON_HAVE_NEON_PATH 1
#include <arm_neon.h>
#else
#define CYCLOGON_HAVE_NEON_PATH 0
#endif

#include <cmath>

namespace cyclogon::kernels::neon {

#if CYCLOGON_HAVE_NEON_PATH

// Advanced SIMD with float64 lanes is mandatory on AArch64.
bool available() noexcept { return true; }

void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out) {
  const std::size_t n = xs.size();
  const float64x2_t ax = vdupq_n_f64(a.x);
  const float64x2_t ay = vdupq_n_f64(a.y);
  const float64x2_t dx = vdupq_n_f64(b.x - a.x);
  const float64x2_t dy = vdupq_n_f64(b.y - a.y);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t px = vld1q_f64(xs.data() + j);
    const float64x2_t py = vld1q_f64(ys.data() + j);
    const float64x2_t t1 = vmulq_f64(dx, vsubq_f64(py, ay));
    const float64x2_t t2 = vmulq_f64(dy, vsubq_f64(px, ax));
    vst1q_f64(out.data() + j, vsubq_f64(t1, t2));
  }
  if (j < n) {
    scalar::orient_row(a, b, xs.subspan(j), ys.subspan(j), out.subspan(j));
  }
}

SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps) {
  const std::size_t n = xs.size();
  const float64x2_t ax = vdupq_n_f64(a.x);
  const float64x2_t ay = vdupq_n_f64(a.y);
  const float64x2_t dx = vdupq_n_f64(b.x - a.x);
  const float64x2_t dy = vdupq_n_f64(b.y - a.y);
  const float64x2_t hi = vdupq_n_f64(eps);
  const float64x2_t lo = vdupq_n_f64(-eps);
  float64x2_t vmin = vdupq_n_f64(std::numeric_limits<double>::infinity());
  // Lane counters: comparison masks are all-ones (== -1 as signed).
  int64x2_t pos = vdupq_n_s64(0);
  int64x2_t neg = vdupq_n_s64(0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t px = vld1q_f64(xs.data() + j);
    const float64x2_t py = vld1q_f64(ys.data() + j);
    const float64x2_t t1 = vmulq_f64(dx, vsubq_f64(py, ay));
    const float64x2_t t2 = vmulq_f64(dy, vsubq_f64(px, ax));
    const float64x2_t v = vsubq_f64(t1, t2);
    pos = vsubq_s64(pos, vreinterpretq_s64_u64(vcgtq_f64(v, hi)));
    neg = vsubq_s64(neg, vreinterpretq_s64_u64(vcltq_f64(v, lo)));
    vmin = vminq_f64(vmin, vabsq_f64(v));
  }
  SignSummary s;
  s.positive = static_cast<std::size_t>(vaddvq_s64(pos));
  s.negative = static_cast<std::size_t>(vaddvq_s64(neg));
  s.marginal = j - s.positive - s.negative;
  s.min_abs = vminvq_f64(vmin);
  if (j < n) {
    const SignSummary tail =
        scalar::orient_summary(a, b, xs.subspan(j), ys.subspan(j), eps);
    s.positive += tail.positive;
    s.negative += tail.negative;
    s.marginal += tail.marginal;
    s.min_abs = std::fmin(s.min_abs, tail.min_abs);
  }
  return s;
}

AngleCensus angle_census(std::span<const double> thetas) {
  const std::size_t n = thetas.size();
  const float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t vmin = vdupq_n_f64(std::numeric_limits<double>::infinity());
  AngleCensus c;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t t = vld1q_f64(thetas.data() + i);
    const uint64x2_t gt = vcgtq_f64(t, zero);
    const uint64x2_t lt = vcltq_f64(t, zero);
    const bool p0 = vgetq_lane_u64(gt, 0) != 0, p1 = vgetq_lane_u64(gt, 1) != 0;
    const bool n0 = vgetq_lane_u64(lt, 0) != 0, n1 = vgetq_lane_u64(lt, 1) != 0;
    if (c.positive == 0 && (p0 || p1)) c.first_positive = p0 ? i : i + 1;
    if (c.negative == 0 && (n0 || n1)) c.first_negative = n0 ? i : i + 1;
    c.positive += std::size_t(p0) + std::size_t(p1);
    c.negative += std::size_t(n0) + std::size_t(n1);
    vmin = vminq_f64(vmin, vabsq_f64(t));
  }
  c.min_abs = vminvq_f64(vmin);
  if (i < n) {
    const AngleCensus tail = scalar::angle_census(thetas.subspan(i));
    if (c.positive == 0 && tail.positive != 0) {
      c.first_positive = i + tail.first_positive;
    }
    if (c.negative == 0 && tail.negative != 0) {
      c.first_negative = i + tail.first_negative;
    }
    c.positive += tail.positive;
    c.negative += tail.negative;
    c.min_abs = std::fmin(c.min_abs, tail.min_abs);
  }
  return c;
}

#else

bool available() noexcept { return false; }

void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out) {
  scalar::orient_row(a, b, xs, ys, out);
}

SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps) {
  return scalar::orient_summary(a, b, xs, ys, eps);
}

AngleCensus angle_census(std::span<const double> thetas) {
  return scalar::angle_census(thetas);
}

#endif

}  // namespace cyclogon::kernels::neon
