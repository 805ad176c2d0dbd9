#include "cyclogon/patterns.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "cyclogon/angles.hpp"
#include "cyclogon/determinants.hpp"
#include "cyclogon/kernels.hpp"

namespace cyclogon {

std::string_view to_string(PatternKind k) noexcept {
  switch (k) {
    case PatternKind::P1: return "P1";
    case PatternKind::P2: return "P2";
    case PatternKind::P3: return "P3";
  }
  return "?";
}

std::string_view to_string(WitnessVariant v) noexcept {
  return v == WitnessVariant::Or1 ? "or1" : "or2";
}

namespace {

std::optional<std::size_t> minimal_p1(std::span<const double> thetas,
                                      const Tolerance& tol) {
  double sum = 0.0;
  for (std::size_t m = 0; m < thetas.size() && thetas[m] > 0.0; ++m) {
    sum += thetas[m];
    if (sum > kTwoPi + tol.geom) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> p2_run_end(std::span<const double> thetas) {
  const std::size_t n = thetas.size();
  if (n < 4 || !(thetas[0] < 0.0)) return std::nullopt;
  std::size_t m = 0;
  while (m + 1 < n && thetas[m + 1] > 0.0) ++m;
  if (m >= 2 && m <= n - 2 && thetas[m + 1] < 0.0) return m;
  return std::nullopt;
}

bool is_p3(std::span<const double> t) {
  return t.size() >= 4 && t[0] < 0.0 && t[1] > 0.0 && t[2] < 0.0 && t[3] > 0.0;
}

struct Candidate {
  std::size_t shift;
  Pattern pattern;
};

// The case analysis on one orientation. Returns nothing when the profile's
// shape needs the re-oriented polygon (all negative, one positive, or only
// minus-runs of length >= 2).
std::optional<Candidate> reduce_by_cases(const AngleProfile& profile,
                                         const Tolerance& tol) {
  const std::size_t n = profile.size();
  const kernels::AngleCensus census = kernels::angle_census(profile.thetas());

  auto try_shift = [&](std::size_t shift) -> std::optional<Candidate> {
    const AngleProfile shifted = rotated(profile, shift);
    if (auto p = detect_pattern(shifted.thetas(), tol)) return Candidate{shift, *p};
    return std::nullopt;
  };

  if (census.positive == n) return try_shift(0);
  if (census.negative == 1) return try_shift((census.first_negative + 1) % n);
  if (census.positive < 2 || census.negative < 2) return std::nullopt;

  // Mixed signs: walk the maximal runs starting at a sign change.
  auto positive = [&](std::size_t i) { return profile[i % n] > 0.0; };
  std::size_t start = 0;
  while (positive(start + n - 1) == positive(start)) ++start;

  bool alternating = true;
  std::optional<std::size_t> long_plus_run;
  for (std::size_t off = 0; off < n;) {
    const std::size_t run_start = (start + off) % n;
    std::size_t len = 1;
    while (off + len < n && positive(run_start + len) == positive(run_start)) ++len;
    if (len >= 2) {
      alternating = false;
      if (positive(run_start) && !long_plus_run) long_plus_run = run_start;
    }
    off += len;
  }
  if (alternating) return try_shift(census.first_negative);
  if (long_plus_run) return try_shift((*long_plus_run + n - 1) % n);
  return std::nullopt;
}

bool inside(double x, double lo, double hi, double margin) {
  return lo + margin < x && x < hi - margin;
}

constexpr std::array<int, 5> kShiftOrder{0, -1, 1, -2, 2};

}  // namespace

bool matches_pattern(std::span<const double> thetas, const Pattern& pattern,
                     const Tolerance& tol) {
  switch (pattern.kind) {
    case PatternKind::P1: {
      if (!pattern.m || *pattern.m >= thetas.size()) return false;
      double sum = 0.0;
      for (std::size_t i = 0; i <= *pattern.m; ++i) {
        if (!(thetas[i] > 0.0)) return false;
        sum += thetas[i];
      }
      return sum > kTwoPi + tol.geom;
    }
    case PatternKind::P2: {
      const std::size_t n = thetas.size();
      if (!pattern.m || n < 4) return false;
      const std::size_t m = *pattern.m;
      if (m < 2 || m > n - 2 || !(thetas[0] < 0.0) || !(thetas[m + 1] < 0.0)) {
        return false;
      }
      for (std::size_t i = 1; i <= m; ++i) {
        if (!(thetas[i] > 0.0)) return false;
      }
      return true;
    }
    case PatternKind::P3:
      return is_p3(thetas);
  }
  return false;
}

std::optional<Pattern> detect_pattern(std::span<const double> thetas,
                                      const Tolerance& tol) {
  if (auto m = minimal_p1(thetas, tol)) return Pattern{PatternKind::P1, m};
  if (auto m = p2_run_end(thetas)) return Pattern{PatternKind::P2, m};
  if (is_p3(thetas)) return Pattern{PatternKind::P3, std::nullopt};
  return std::nullopt;
}

AngleProfile apply_reduction(const AngleProfile& profile, std::size_t shift,
                             bool reversed, const Tolerance& tol) {
  if (reversed) return rotated(reoriented(profile, tol), shift);
  return rotated(profile, shift);
}

Reduction find_pattern_reduction(const AngleProfile& profile, const Tolerance& tol) {
  if (classify_by_angles(profile).is_convex()) {
    throw Error(ErrorCode::InvalidArgument,
                "pattern reduction requires a profile violating conditions I-IV");
  }
  if (auto c = reduce_by_cases(profile, tol)) {
    return {c->shift, false, c->pattern, false};
  }
  const AngleProfile flipped = reoriented(profile, tol);
  if (auto c = reduce_by_cases(flipped, tol)) {
    return {c->shift, true, c->pattern, false};
  }
  const std::size_t n = profile.size();
  for (bool reversed : {false, true}) {
    const AngleProfile& base = reversed ? flipped : profile;
    for (std::size_t shift = 0; shift < n; ++shift) {
      if (auto p = detect_pattern(rotated(base, shift).thetas(), tol)) {
        return {shift, reversed, *p, true};
      }
    }
  }
  throw Error(ErrorCode::NoReduction,
              "no cyclic shift or re-orientation exhibits pattern P1, P2 or P3");
}

bool witness_holds(const SigmaSequence& sigma, const Witness& w, double margin) {
  const std::size_t n = sigma.polygon_size();
  if (w.i >= n || w.j >= n || w.k >= n) return false;
  const double si = sigma[w.i];
  const double sn = sigma[w.i + 1];
  const double sj = sigma[w.j] + kTwoPi * w.p;
  const double sk = sigma[w.k] + kTwoPi * w.q;
  if (w.variant == WitnessVariant::Or1) {
    return inside(sj, si, sn, margin) && inside(sk, sn, si + kTwoPi, margin);
  }
  return inside(sj, sn, si, margin) && inside(sk, si, sn + kTwoPi, margin);
}

Witness find_interval_witness(const SigmaSequence& sigma, const Pattern& pattern,
                              const Tolerance& tol) {
  const std::size_t n = sigma.polygon_size();
  std::vector<double> thetas(n);
  for (std::size_t i = 0; i < n; ++i) thetas[i] = sigma[i + 1] - sigma[i];
  if (!matches_pattern(thetas, pattern, tol)) {
    throw Error(ErrorCode::InvalidArgument,
                "sigma sequence does not exhibit pattern " +
                    std::string(to_string(pattern.kind)));
  }

  // The two memberships are independent given (i, variant), so search each
  // half separately: O(n^2 * 5) instead of O(n^3 * 25).
  for (std::size_t i = 0; i < n; ++i) {
    const double si = sigma[i];
    const double sn = sigma[i + 1];
    for (WitnessVariant variant : {WitnessVariant::Or1, WitnessVariant::Or2}) {
      const bool or1 = variant == WitnessVariant::Or1;
      const double j_lo = or1 ? si : sn, j_hi = or1 ? sn : si;
      const double k_lo = or1 ? sn : si, k_hi = or1 ? si + kTwoPi : sn + kTwoPi;
      if (!(j_lo < j_hi)) continue;

      auto find = [&](double lo, double hi) -> std::optional<std::pair<std::size_t, int>> {
        for (std::size_t idx = 0; idx < n; ++idx) {
          for (int shift : kShiftOrder) {
            if (inside(sigma[idx] + kTwoPi * shift, lo, hi, tol.geom)) {
              return std::pair{idx, shift};
            }
          }
        }
        return std::nullopt;
      };
      const auto jp = find(j_lo, j_hi);
      if (!jp) continue;
      const auto kq = find(k_lo, k_hi);
      if (!kq) continue;
      return {i, jp->first, kq->first, jp->second, kq->second, variant};
    }
  }
  throw Error(ErrorCode::NoWitness,
              "no (i, j, k, p, q) places two vertices on opposite arcs of an edge");
}

WitnessCheck evaluate_witness(const SigmaSequence& sigma, const Witness& w,
                              const Tolerance& tol) {
  const std::size_t n = sigma.polygon_size();
  const std::size_t next = next_index(w.i, n);
  WitnessCheck check;
  check.delta_j = delta_determinant(sigma, w.j, w.i, next).value;
  check.delta_k = delta_determinant(sigma, w.k, w.i, next).value;
  check.negative = check.delta_j * check.delta_k < -tol.geom * tol.geom;
  return check;
}

bool verify_witness_negativity(const SigmaSequence& sigma, const Witness& w,
                               const Tolerance& tol) {
  return evaluate_witness(sigma, w, tol).negative;
}

Certificate certify_nonconvex(const AngleProfile& profile, const Tolerance& tol) {
  const Reduction reduction = find_pattern_reduction(profile, tol);
  AngleProfile transformed =
      apply_reduction(profile, reduction.shift, reduction.reversed, tol);
  const SigmaSequence sigma = sigma_of(transformed, tol);
  const Witness witness = find_interval_witness(sigma, reduction.pattern, tol);
  const WitnessCheck check = evaluate_witness(sigma, witness, tol);
  return {reduction, std::move(transformed), witness, check};
}

}  // namespace cyclogon
