#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "cyclogon/types.hpp"

namespace cyclogon {

enum class PatternKind { P1, P2, P3 };

std::string_view to_string(PatternKind k) noexcept;

/// A forbidden arrangement of central-angle signs at offset 0.
///
///   P1: theta_0..theta_m > 0 and theta_0 + ... + theta_m > 2pi
///   P2: theta_0 < 0; theta_1..theta_m > 0; theta_{m+1} < 0; 2 <= m <= n-2
///   P3: theta_0 < 0, theta_1 > 0, theta_2 < 0, theta_3 > 0
struct Pattern {
  PatternKind kind = PatternKind::P1;
  std::optional<std::size_t> m;  // absent for P3

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Checks `pattern` against the angles at offset 0. The P1 sum must exceed
/// 2pi by more than tol.geom so that a closed turn of exactly 2pi (condition
/// I) never matches through rounding.
bool matches_pattern(std::span<const double> thetas, const Pattern& pattern,
                     const Tolerance& tol = {});

/// First match at offset 0: P1 with the smallest m, then P2, then P3.
std::optional<Pattern> detect_pattern(std::span<const double> thetas,
                                      const Tolerance& tol = {});

/// A cyclic relabelling that exposes a pattern. The transformed polygon is
/// obtained by first reversing the vertex order (when `reversed`) and then
/// starting at position `shift` of that sequence.
struct Reduction {
  std::size_t shift = 0;
  bool reversed = false;
  Pattern pattern;
  /// True when the case analysis failed and the exhaustive search over all
  /// 2n relabellings supplied the answer.
  bool exhaustive = false;

  /// Index in the original polygon of vertex k of the transformed one.
  std::size_t original_index(std::size_t k, std::size_t n) const noexcept {
    const std::size_t pos = (k + shift) % n;
    return reversed ? n - 1 - pos : pos;
  }
};

/// Profile of the polygon relabelled by (shift, reversed).
AngleProfile apply_reduction(const AngleProfile& profile, std::size_t shift,
                             bool reversed, const Tolerance& tol = {});

/// Reduces a non-convex profile to one of P1-P3 following the run analysis:
/// all-positive and one-negative profiles give P1, alternating signs give P3,
/// a plus-run of length >= 2 between negatives gives P2; all-negative and
/// one-positive profiles (and minus-runs) are handled on the re-oriented
/// polygon. Falls back to trying every shift and orientation.
///
/// Throws InvalidArgument for convex profiles and NoReduction if nothing
/// matches (which would refute the central-angle criterion).
Reduction find_pattern_reduction(const AngleProfile& profile,
                                 const Tolerance& tol = {});

enum class WitnessVariant { Or1, Or2 };

std::string_view to_string(WitnessVariant v) noexcept;

/// Indices and 2pi shifts placing two lifted vertices on opposite arcs of
/// edge i:
///   Or1: sigma_j + 2pi p in (sigma_i, sigma_{i+1}),
///        sigma_k + 2pi q in (sigma_{i+1}, sigma_i + 2pi)
///   Or2: sigma_j + 2pi p in (sigma_{i+1}, sigma_i),
///        sigma_k + 2pi q in (sigma_i, sigma_{i+1} + 2pi)
struct Witness {
  std::size_t i = 0, j = 0, k = 0;
  int p = 0, q = 0;
  WitnessVariant variant = WitnessVariant::Or1;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Both interval memberships hold with every endpoint cleared by `margin`.
bool witness_holds(const SigmaSequence& sigma, const Witness& w, double margin);

/// Brute-force search over i, j, k in [0, n) and p, q in {-2..2}.
/// Throws InvalidArgument if the profile of `sigma` does not match
/// `pattern`, and NoWitness if no witness exists.
Witness find_interval_witness(const SigmaSequence& sigma, const Pattern& pattern,
                              const Tolerance& tol = {});

struct WitnessCheck {
  double delta_j = 0.0;  // Delta_{j,i,i(+)1}
  double delta_k = 0.0;  // Delta_{k,i,i(+)1}
  bool negative = false;
};

/// Evaluates Delta_{j,i,i(+)1} * Delta_{k,i,i(+)1}; `negative` iff the
/// product is below -tol.geom^2.
WitnessCheck evaluate_witness(const SigmaSequence& sigma, const Witness& w,
                              const Tolerance& tol = {});

bool verify_witness_negativity(const SigmaSequence& sigma, const Witness& w,
                               const Tolerance& tol = {});

/// Complete non-convexity certificate: reduction, witness on the relabelled
/// polygon, and the two determinants with negative product.
struct Certificate {
  Reduction reduction;
  AngleProfile transformed;
  Witness witness;
  WitnessCheck check;
};

Certificate certify_nonconvex(const AngleProfile& profile, const Tolerance& tol = {});

}  // namespace cyclogon
