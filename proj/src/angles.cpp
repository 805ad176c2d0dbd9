#include "cyclogon/angles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclogon/kernels.hpp"

namespace cyclogon {

Circle fit_circumcircle(std::span<const Vertex> raw, const Tolerance& tol) {
  if (raw.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 vertices");
  }
  for (const Vertex& v : raw) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
    }
  }
  const Vertex a = raw[0];
  const double bx = raw[1].x - a.x, by = raw[1].y - a.y;
  const double cx = raw[2].x - a.x, cy = raw[2].y - a.y;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double cross = bx * cy - by * cx;
  // |sin| of the angle at V0; zero also for coincident seeds.
  if (b2 == 0.0 || c2 == 0.0 || std::fabs(cross) <= tol.geom * std::sqrt(b2 * c2)) {
    throw Error(ErrorCode::CollinearSeed,
                "the first three vertices are collinear; no circle passes through them");
  }
  const double d = 2.0 * cross;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  Circle circle{{a.x + ux, a.y + uy}, std::hypot(ux, uy)};

  double worst = 0.0;
  std::size_t worst_index = 0;
  for (std::size_t i = 3; i < raw.size(); ++i) {
    const double dev = std::fabs(
        std::hypot(raw[i].x - circle.center.x, raw[i].y - circle.center.y) -
        circle.radius);
    if (dev > worst) {
      worst = dev;
      worst_index = i;
    }
  }
  if (worst > tol.geom * (1.0 + circle.radius)) {
    std::ostringstream msg;
    msg << "polygon is not cyclic: vertex " << worst_index << " lies " << worst
        << " off the circle through the first three vertices";
    Error e(ErrorCode::NotConcyclic, msg.str());
    e.index = worst_index;
    e.deviation = worst;
    throw e;
  }
  return circle;
}

CanonicalPolygon canonicalize(std::span<const Vertex> raw, const Tolerance& tol) {
  const Circle circle = fit_circumcircle(raw, tol);
  using C = std::complex<double>;
  const C center{circle.center.x, circle.center.y};
  const C z0 = (C{raw[0].x, raw[0].y} - center) / circle.radius;
  const C unrotate = std::conj(z0) / std::abs(z0);

  std::vector<Vertex> out;
  out.reserve(raw.size());
  out.push_back({1.0, 0.0});
  for (std::size_t i = 1; i < raw.size(); ++i) {
    C z = (C{raw[i].x, raw[i].y} - center) / circle.radius * unrotate;
    z /= std::abs(z);
    out.push_back({z.real(), z.imag()});
  }
  return CanonicalPolygon::from_unit_vertices(std::move(out), circle, tol);
}

double principal_step(Vertex from, Vertex to) noexcept {
  const double cross = from.x * to.y - from.y * to.x;
  const double dot = from.x * to.x + from.y * to.y;
  const double step = std::atan2(cross, dot);
  return step == -kPi ? kPi : step;
}

SigmaSequence lift_sigma(const CanonicalPolygon& poly, const Tolerance& tol) {
  const std::size_t n = poly.size();
  std::vector<double> sigma(n + 1);
  sigma[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i + 1] = sigma[i] + principal_step(poly[i], poly[(i + 1) % n]);
  }
  return SigmaSequence::from_values(std::move(sigma), tol);
}

AngleProfile central_angles(const SigmaSequence& sigma, const Tolerance& tol) {
  const std::size_t n = sigma.polygon_size();
  std::vector<double> thetas(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = sigma[i + 1] - sigma[i];
    // Rounding in the subtraction can push a step of exactly pi past the
    // interval boundary; the sequence validated these to within tol.geom.
    if (t > kPi) t = kPi;
    if (t <= -kPi) t = std::nextafter(-kPi, 0.0);
    thetas[i] = t;
  }
  const double turns = sigma[n] / kTwoPi;
  const double w = std::round(turns);
  if (std::fabs(turns - w) > tol.winding) {
    Error e(ErrorCode::NonIntegerWinding, "sigma_n / 2pi is not an integer");
    e.deviation = std::fabs(turns - w);
    throw e;
  }
  return AngleProfile::make(std::move(thetas), static_cast<std::int64_t>(w), tol);
}

AngleProfile angle_profile(const CanonicalPolygon& poly, const Tolerance& tol) {
  return central_angles(lift_sigma(poly, tol), tol);
}

SigmaSequence sigma_of(const AngleProfile& profile, const Tolerance& tol) {
  std::vector<double> sigma(profile.size() + 1);
  sigma[0] = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    sigma[i + 1] = sigma[i] + profile[i];
  }
  return SigmaSequence::from_values(std::move(sigma), tol);
}

ConvexityVerdict classify_by_angles(const AngleProfile& profile) {
  const kernels::AngleCensus c = kernels::angle_census(profile.thetas());
  const std::size_t n = profile.size();
  const std::int64_t w = profile.winding();

  if (c.positive == n) {
    if (w == 1) return {Condition::I, std::nullopt};
    return {Alternative::A1, std::nullopt};
  }
  if (c.negative == n) {
    if (w == -1) return {Condition::II, std::nullopt};
    return {Alternative::A2, std::nullopt};
  }
  if (c.negative == 1) {
    if (w == 0) return {Condition::III, c.first_negative};
    return {Alternative::A3, std::nullopt};
  }
  if (c.positive == 1) {
    if (w == 0) return {Condition::IV, c.first_positive};
    return {Alternative::A4, std::nullopt};
  }
  return {Alternative::A5, std::nullopt};
}

Alternative sign_pattern_alternative(const AngleProfile& profile) {
  const kernels::AngleCensus c = kernels::angle_census(profile.thetas());
  const std::size_t n = profile.size();
  if (c.positive == n) return Alternative::A1;
  if (c.negative == n) return Alternative::A2;
  if (c.negative == 1) return Alternative::A3;
  if (c.positive == 1) return Alternative::A4;
  return Alternative::A5;
}

CanonicalPolygon profile_to_vertices(const AngleProfile& profile,
                                     const Tolerance& tol) {
  const std::size_t n = profile.size();
  std::vector<Vertex> vertices(n);
  double sigma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vertices[i] = {std::cos(sigma), std::sin(sigma)};
    sigma += profile[i];
  }
  if (auto pair = find_coincident_pair(vertices, tol.geom)) {
    Error e(ErrorCode::DegenerateProfile,
            "partial sums " + std::to_string(pair->first) + " and " +
                std::to_string(pair->second) +
                " coincide modulo 2pi; the polygon would not be ordinary");
    e.index_pair = pair;
    throw e;
  }
  return CanonicalPolygon::from_unit_vertices(std::move(vertices),
                                              Circle{{0.0, 0.0}, 1.0}, tol);
}

AngleProfile rotated(const AngleProfile& profile, std::size_t shift) {
  const std::size_t n = profile.size();
  std::vector<double> thetas(n);
  for (std::size_t i = 0; i < n; ++i) thetas[i] = profile[(i + shift) % n];
  // Same multiset of angles: the winding number cannot change.
  return AngleProfile::make(std::move(thetas), profile.winding(),
                            Tolerance{0.0, 1e-6});
}

AngleProfile reoriented(const AngleProfile& profile, const Tolerance& tol) {
  const std::size_t n = profile.size();
  auto flip = [](double t) { return t == kPi ? kPi : -t; };
  std::vector<double> thetas(n);
  for (std::size_t i = 0; i + 1 < n; ++i) thetas[i] = flip(profile[n - 2 - i]);
  thetas[n - 1] = flip(profile[n - 1]);
  return AngleProfile::from_thetas(std::move(thetas), tol);
}

std::optional<std::pair<std::size_t, std::size_t>> find_coincident_pair(
    std::span<const Vertex> unit_vertices, double eps) {
  const std::size_t n = unit_vertices.size();
  if (n < 2) return std::nullopt;
  std::vector<std::size_t> order(n);
  std::vector<double> polar(n);
  for (std::size_t i = 0; i < n; ++i) {
    polar[i] = std::atan2(unit_vertices[i].y, unit_vertices[i].x);
  }
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return polar[a] < polar[b] || (polar[a] == polar[b] && a < b);
  });
  std::optional<std::pair<std::size_t, std::size_t>> best;
  double best_dist = eps;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = order[k];
    const std::size_t b = order[(k + 1) % n];
    if (a == b) continue;
    const double d = std::hypot(unit_vertices[a].x - unit_vertices[b].x,
                                unit_vertices[a].y - unit_vertices[b].y);
    if (d <= best_dist) {
      if (!best || d < best_dist) {
        best_dist = d;
        best = std::pair{std::min(a, b), std::max(a, b)};
      }
    }
  }
  return best;
}

}  // namespace cyclogon
