#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cyclogon/kernels.hpp"
#include "cyclogon/types.hpp"

namespace cyclogon {

struct DeltaValue {
  double value = 0.0;
  std::array<std::size_t, 3> indices{};
};

/// i (+) 1: the successor of edge start i, wrapping n-1 to 0.
constexpr std::size_t next_index(std::size_t i, std::size_t n) noexcept {
  return i + 1 == n ? 0 : i + 1;
}

/// 3x3 determinant with rows (1, x, y) of three points.
double homogeneous_det(Vertex a, Vertex b, Vertex c) noexcept;

/// Delta_{alpha,beta,gamma} evaluated at (cos sigma, sin sigma).
DeltaValue delta_determinant(const SigmaSequence& sigma, std::size_t alpha,
                             std::size_t beta, std::size_t gamma);

/// Delta_{alpha,beta,gamma} evaluated on polygon coordinates.
DeltaValue delta_determinant(const CanonicalPolygon& poly, std::size_t alpha,
                             std::size_t beta, std::size_t gamma);

/// Product form of Delta_{j,i,i(+)1}:
///   4 sin(theta_i/2) sin((sigma_j - sigma_i)/2) sin((sigma_j - sigma_{i+1})/2)
/// using the lifted sigma_{i+1} (sigma_n when i = n-1). Because the rows of
/// the determinant are 2pi-periodic in sigma, this equals
/// delta_determinant(sigma, j, i, i(+)1) including its sign.
DeltaValue delta_product(const AngleProfile& profile, const SigmaSequence& sigma,
                         std::size_t j, std::size_t i);

/// The same product evaluated with the reduced endpoint sigma_{i(+)1}
/// (sigma_0 instead of sigma_n on the wrap edge). On the wrap edge this
/// differs from the determinant by the factor (-1)^w, from
/// sin((x + 2 pi p)/2) = (-1)^p sin(x/2); elsewhere it is identical.
DeltaValue delta_product_reduced(const AngleProfile& profile,
                                 const SigmaSequence& sigma, std::size_t j,
                                 std::size_t i);

/// V_alpha and V_beta lie strictly in one open half-plane bounded by the line
/// through V_i and V_j. Throws DegenerateEdge when V_i and V_j coincide.
bool same_strict_side(const CanonicalPolygon& poly, std::size_t alpha,
                      std::size_t beta, std::size_t i, std::size_t j,
                      const Tolerance& tol = {});

/// Sign census of Delta_{j,i,i(+)1} for one edge i over j not in {i, i(+)1}.
struct EdgeSigns {
  std::size_t edge = 0;
  kernels::SignSummary summary;

  bool uniform() const noexcept {
    return summary.marginal == 0 &&
           (summary.positive == 0 || summary.negative == 0);
  }
};

struct DeterminantScan {
  std::vector<EdgeSigns> edges;
  std::size_t evaluated = 0;
  std::size_t marginal = 0;
  double min_abs = 0.0;
  bool stopped_early = false;
};

struct DeterminantOptions {
  /// Stop at the first edge whose signs are mixed.
  bool early_exit = false;
};

/// Evaluates the edge determinants on the polygon coordinates. All n(n-2)
/// values are computed unless `early_exit` is set.
DeterminantScan scan_determinants(const CanonicalPolygon& poly,
                                  const Tolerance& tol = {},
                                  const DeterminantOptions& opts = {});

/// Convex iff for every edge all Delta_{j,i,i(+)1} share one strict sign.
/// O(n^2). The convex-case label (and the alternative otherwise) comes from
/// the central angles so that verdicts are comparable with
/// classify_by_angles; if the two classifiers ever disagree on convexity the
/// alternative falls back to sign_pattern_alternative.
///
/// Throws MarginalSign when some |Delta| <= tol.geom (after full evaluation,
/// or at the offending edge under early exit).
ConvexityVerdict classify_by_determinants(const CanonicalPolygon& poly,
                                          const Tolerance& tol = {},
                                          const DeterminantOptions& opts = {});

struct SignLemmaReport {
  Condition condition = Condition::I;
  bool pass = false;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  /// Smallest |Delta| over all evaluated determinants.
  double min_margin = 0.0;
};

/// Evaluates every Delta_{j,i,i(+)1} of a profile satisfying one of the
/// convex conditions and checks they are all > tol.geom (I, III) or all
/// < -tol.geom (II, IV). Throws NotApplicable otherwise.
SignLemmaReport check_sign_lemma(const AngleProfile& profile,
                                 const Tolerance& tol = {});

}  // namespace cyclogon
