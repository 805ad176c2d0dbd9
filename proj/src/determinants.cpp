#include "cyclogon/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclogon/angles.hpp"

namespace cyclogon {

namespace {

void check_index(std::size_t idx, std::size_t n) {
  if (idx >= n) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex index " + std::to_string(idx) + " out of range");
  }
}

Vertex on_circle(double sigma) { return {std::cos(sigma), std::sin(sigma)}; }

}  // namespace

double homogeneous_det(Vertex a, Vertex b, Vertex c) noexcept {
  // Subtract row a from the others and expand along the first column.
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

DeltaValue delta_determinant(const SigmaSequence& sigma, std::size_t alpha,
                             std::size_t beta, std::size_t gamma) {
  const std::size_t n = sigma.polygon_size();
  check_index(alpha, n);
  check_index(beta, n);
  check_index(gamma, n);
  return {homogeneous_det(on_circle(sigma[alpha]), on_circle(sigma[beta]),
                          on_circle(sigma[gamma])),
          {alpha, beta, gamma}};
}

DeltaValue delta_determinant(const CanonicalPolygon& poly, std::size_t alpha,
                             std::size_t beta, std::size_t gamma) {
  const std::size_t n = poly.size();
  check_index(alpha, n);
  check_index(beta, n);
  check_index(gamma, n);
  return {homogeneous_det(poly[alpha], poly[beta], poly[gamma]),
          {alpha, beta, gamma}};
}

DeltaValue delta_product(const AngleProfile& profile, const SigmaSequence& sigma,
                         std::size_t j, std::size_t i) {
  const std::size_t n = profile.size();
  check_index(i, n);
  check_index(j, n);
  const double v = 4.0 * std::sin(profile[i] / 2.0) *
                   std::sin((sigma[j] - sigma[i]) / 2.0) *
                   std::sin((sigma[j] - sigma[i + 1]) / 2.0);
  return {v, {j, i, next_index(i, n)}};
}

DeltaValue delta_product_reduced(const AngleProfile& profile,
                                 const SigmaSequence& sigma, std::size_t j,
                                 std::size_t i) {
  const std::size_t n = profile.size();
  check_index(i, n);
  check_index(j, n);
  const std::size_t k = next_index(i, n);
  const double v = 4.0 * std::sin(profile[i] / 2.0) *
                   std::sin((sigma[j] - sigma[i]) / 2.0) *
                   std::sin((sigma[j] - sigma[k]) / 2.0);
  return {v, {j, i, k}};
}

bool same_strict_side(const CanonicalPolygon& poly, std::size_t alpha,
                      std::size_t beta, std::size_t i, std::size_t j,
                      const Tolerance& tol) {
  const std::size_t n = poly.size();
  check_index(alpha, n);
  check_index(beta, n);
  check_index(i, n);
  check_index(j, n);
  if (std::hypot(poly[i].x - poly[j].x, poly[i].y - poly[j].y) <= tol.geom) {
    Error e(ErrorCode::DegenerateEdge,
            "edge endpoints " + std::to_string(i) + " and " + std::to_string(j) +
                " coincide");
    e.index_pair = std::pair{i, j};
    throw e;
  }
  const double da = homogeneous_det(poly[alpha], poly[i], poly[j]);
  const double db = homogeneous_det(poly[beta], poly[i], poly[j]);
  return da * db > 0.0;
}

DeterminantScan scan_determinants(const CanonicalPolygon& poly,
                                  const Tolerance& tol,
                                  const DeterminantOptions& opts) {
  const std::size_t n = poly.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = poly[k].x;
    ys[k] = poly[k].y;
  }
  const std::span<const double> x{xs}, y{ys};

  DeterminantScan scan;
  scan.edges.reserve(n);
  scan.min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = next_index(i, n);
    // Delta_{j,i,k} = orientation(V_i, V_k, V_j); j ranges over the
    // complement of {i, k}, which is one or two contiguous blocks.
    const Vertex a = poly[i], b = poly[k];
    kernels::SignSummary s;
    auto add = [&](std::size_t lo, std::size_t hi) {
      if (lo >= hi) return;
      const auto part = kernels::orient_summary(a, b, x.subspan(lo, hi - lo),
                                                y.subspan(lo, hi - lo), tol.geom);
      s.positive += part.positive;
      s.negative += part.negative;
      s.marginal += part.marginal;
      s.min_abs = std::fmin(s.min_abs, part.min_abs);
    };
    if (k == 0) {
      add(1, n - 1);
    } else {
      add(0, i);
      add(k + 1, n);
    }
    EdgeSigns edge{i, s};
    scan.evaluated += s.positive + s.negative + s.marginal;
    scan.marginal += s.marginal;
    scan.min_abs = std::fmin(scan.min_abs, s.min_abs);
    const bool mixed = s.marginal > 0 || (s.positive > 0 && s.negative > 0);
    scan.edges.push_back(edge);
    if (opts.early_exit && mixed) {
      scan.stopped_early = i + 1 < n;
      break;
    }
  }
  return scan;
}

ConvexityVerdict classify_by_determinants(const CanonicalPolygon& poly,
                                          const Tolerance& tol,
                                          const DeterminantOptions& opts) {
  const DeterminantScan scan = scan_determinants(poly, tol, opts);
  if (scan.marginal > 0) {
    Error e(ErrorCode::MarginalSign,
            std::to_string(scan.marginal) +
                " edge determinant(s) within tolerance of zero; sign unreliable");
    e.deviation = scan.min_abs;
    for (const EdgeSigns& edge : scan.edges) {
      if (edge.summary.marginal > 0) {
        e.index = edge.edge;
        break;
      }
    }
    throw e;
  }
  const bool convex = std::all_of(scan.edges.begin(), scan.edges.end(),
                                  [](const EdgeSigns& e) { return e.uniform(); }) &&
                      !scan.stopped_early;

  const AngleProfile profile = angle_profile(poly, tol);
  const ConvexityVerdict by_angles = classify_by_angles(profile);
  if (convex == by_angles.is_convex()) return by_angles;
  if (!convex) return {sign_pattern_alternative(profile), std::nullopt};
  // The classifiers disagree and the angles give no condition label; derive
  // one from the orientation of the determinants and the sign counts.
  const kernels::AngleCensus census = kernels::angle_census(profile.thetas());
  const bool ccw = scan.edges.front().summary.positive > 0;
  if (ccw) {
    if (census.negative == 1) return {Condition::III, census.first_negative};
    return {Condition::I, std::nullopt};
  }
  if (census.positive == 1) return {Condition::IV, census.first_positive};
  return {Condition::II, std::nullopt};
}

SignLemmaReport check_sign_lemma(const AngleProfile& profile, const Tolerance& tol) {
  const ConvexityVerdict verdict = classify_by_angles(profile);
  const auto condition = verdict.condition();
  if (!condition) {
    throw Error(ErrorCode::NotApplicable,
                "profile satisfies none of conditions I-IV (alternative " +
                    std::string(to_string(*verdict.alternative())) + ")");
  }
  const bool want_positive =
      *condition == Condition::I || *condition == Condition::III;
  const SigmaSequence sigma = sigma_of(profile, tol);
  const std::size_t n = profile.size();

  SignLemmaReport report;
  report.condition = *condition;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = next_index(i, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == k) continue;
      const double d = delta_determinant(sigma, j, i, k).value;
      ++report.evaluated;
      report.min_margin = std::fmin(report.min_margin, std::fabs(d));
      const bool ok = want_positive ? d > tol.geom : d < -tol.geom;
      if (!ok) ++report.violations;
    }
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace cyclogon
