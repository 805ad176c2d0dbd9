#include <cmath>

#include "cyclogon/kernels.hpp"

namespace cyclogon::kernels::scalar {

void orient_row(Vertex a, Vertex b, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double t1 = dx * (ys[j] - a.y);
    const double t2 = dy * (xs[j] - a.x);
    out[j] = t1 - t2;
  }
}

SignSummary orient_summary(Vertex a, Vertex b, std::span<const double> xs,
                           std::span<const double> ys, double eps) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  SignSummary s;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double t1 = dx * (ys[j] - a.y);
    const double t2 = dy * (xs[j] - a.x);
    const double v = t1 - t2;
    if (v > eps) {
      ++s.positive;
    } else if (v < -eps) {
      ++s.negative;
    } else {
      ++s.marginal;
    }
    s.min_abs = std::fmin(s.min_abs, std::fabs(v));
  }
  return s;
}

AngleCensus angle_census(std::span<const double> thetas) {
  AngleCensus c;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double t = thetas[i];
    if (t > 0.0) {
      if (c.positive++ == 0) c.first_positive = i;
    } else if (t < 0.0) {
      if (c.negative++ == 0) c.first_negative = i;
    }
    c.min_abs = std::fmin(c.min_abs, std::fabs(t));
  }
  return c;
}

}  // namespace cyclogon::kernels::scalar
