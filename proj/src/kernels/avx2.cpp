#include "cyclogon/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define CYCLOGON_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define CYCLOGON_HAVE_AVX2_PATH 0
#endif

#include <bit>
#include <cmath>

namespace cyclogon::kernels::avx2 {

#if CYCLOGON_HAVE_AVX2_PATH

#define CYCLOGON_AVX2 __attribute__((target("avx2")))

bool available() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

namespace {

CYCLOGON_AVX2 inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

CYCLOGON_AVX2 inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return std::fmin(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

}  // namespace

CYCLOGON_AVX2 void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                              std::span<const double> ys,
                              std::span<double> out) {
  const std::size_t n = xs.size();
  const __m256d ax = _mm256_set1_pd(a.x);
  const __m256d ay = _mm256_set1_pd(a.y);
  const __m256d dx = _mm256_set1_pd(b.x - a.x);
  const __m256d dy = _mm256_set1_pd(b.y - a.y);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d px = _mm256_loadu_pd(xs.data() + j);
    const __m256d py = _mm256_loadu_pd(ys.data() + j);
    const __m256d t1 = _mm256_mul_pd(dx, _mm256_sub_pd(py, ay));
    const __m256d t2 = _mm256_mul_pd(dy, _mm256_sub_pd(px, ax));
    _mm256_storeu_pd(out.data() + j, _mm256_sub_pd(t1, t2));
  }
  if (j < n) {
    scalar::orient_row(a, b, xs.subspan(j), ys.subspan(j), out.subspan(j));
  }
}

CYCLOGON_AVX2 SignSummary orient_summary(Vertex a, Vertex b,
                                         std::span<const double> xs,
                                         std::span<const double> ys,
                                         double eps) {
  const std::size_t n = xs.size();
  const __m256d ax = _mm256_set1_pd(a.x);
  const __m256d ay = _mm256_set1_pd(a.y);
  const __m256d dx = _mm256_set1_pd(b.x - a.x);
  const __m256d dy = _mm256_set1_pd(b.y - a.y);
  const __m256d hi = _mm256_set1_pd(eps);
  const __m256d lo = _mm256_set1_pd(-eps);
  __m256d vmin = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  SignSummary s;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d px = _mm256_loadu_pd(xs.data() + j);
    const __m256d py = _mm256_loadu_pd(ys.data() + j);
    const __m256d t1 = _mm256_mul_pd(dx, _mm256_sub_pd(py, ay));
    const __m256d t2 = _mm256_mul_pd(dy, _mm256_sub_pd(px, ax));
    const __m256d v = _mm256_sub_pd(t1, t2);
    const int pos = _mm256_movemask_pd(_mm256_cmp_pd(v, hi, _CMP_GT_OQ));
    const int neg = _mm256_movemask_pd(_mm256_cmp_pd(v, lo, _CMP_LT_OQ));
    s.positive += static_cast<std::size_t>(std::popcount(unsigned(pos)));
    s.negative += static_cast<std::size_t>(std::popcount(unsigned(neg)));
    s.marginal += static_cast<std::size_t>(4 - std::popcount(unsigned(pos | neg)));
    vmin = _mm256_min_pd(vmin, abs_pd(v));
  }
  s.min_abs = hmin(vmin);
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

CYCLOGON_AVX2 AngleCensus angle_census(std::span<const double> thetas) {
  const std::size_t n = thetas.size();
  const __m256d zero = _mm256_setzero_pd();
  __m256d vmin = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  AngleCensus c;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(thetas.data() + i);
    const unsigned pos =
        unsigned(_mm256_movemask_pd(_mm256_cmp_pd(t, zero, _CMP_GT_OQ)));
    const unsigned neg =
        unsigned(_mm256_movemask_pd(_mm256_cmp_pd(t, zero, _CMP_LT_OQ)));
    if (pos != 0 && c.positive == 0) {
      c.first_positive = i + static_cast<std::size_t>(std::countr_zero(pos));
    }
    if (neg != 0 && c.negative == 0) {
      c.first_negative = i + static_cast<std::size_t>(std::countr_zero(neg));
    }
    c.positive += static_cast<std::size_t>(std::popcount(pos));
    c.negative += static_cast<std::size_t>(std::popcount(neg));
    vmin = _mm256_min_pd(vmin, abs_pd(t));
  }
  c.min_abs = hmin(vmin);
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

}  // namespace cyclogon::kernels::avx2
