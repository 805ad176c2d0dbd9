#pragma once
// Reference computations written directly from the definitions, sharing no
// code with the library.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "cyclogon/generators.hpp"
#include "cyclogon/types.hpp"

namespace support {

/// Cofactor expansion of | 1 cos a sin a ; 1 cos b sin b ; 1 cos c sin c |,
/// in long double.
inline long double det_rows(long double a, long double b, long double c) {
  const long double ca = std::cos(a), sa = std::sin(a);
  const long double cb = std::cos(b), sb = std::sin(b);
  const long double cc = std::cos(c), sc = std::sin(c);
  return 1.0L * (cb * sc - sb * cc) - ca * (1.0L * sc - sb * 1.0L) + sa * (1.0L * cc - cb * 1.0L);
}

/// Every edge has all remaining vertices strictly on one side, by plain
/// long double cross products. Returns -1 if some vertex is within `eps`
/// of an edge line (undecided).
inline int strictly_one_side(std::span<const cyclogon::Vertex> v, long double eps = 1e-12L) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    int pos = 0, neg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      const long double c = (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(v[j].y) - a.y) -
                            (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(v[j].x) - a.x);
      if (std::fabs(c) <= eps) return -1;
      (c > 0 ? pos : neg)++;
    }
    if (pos && neg) return 0;
  }
  return 1;
}

/// Unit-circle vertices at the partial sums of `thetas`.
inline std::vector<cyclogon::Vertex> place(std::span<const double> thetas) {
  std::vector<cyclogon::Vertex> out;
  long double s = 0;
  for (double t : thetas) {
    out.push_back({static_cast<double>(std::cos(s)), static_cast<double>(std::sin(s))});
    s += t;
  }
  return out;
}

}  // namespace support

/// Cycles through I-IV and A1-A5.
inline cyclogon::gen::Label fuzz_label(std::uint64_t i) {
  using cyclogon::Alternative;
  using cyclogon::Condition;
  static const cyclogon::gen::Label labels[] = {
      Condition::I,    Condition::II,   Condition::III,  Condition::IV,  Alternative::A1,
      Alternative::A2, Alternative::A3, Alternative::A4, Alternative::A5};
  return labels[i % 9];
}
