#include "cyclogon/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cyclogon/angles.hpp"

namespace cyclogon::gen {

namespace {

// mt19937_64 output is fully specified; the conversions below avoid the
// implementation-defined std distributions so sequences match across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }
  // Gamma(2, 1): sum of two unit exponentials. Shape 2 makes tiny parts rare.
  double gamma2() { return -std::log1p(-uniform()) - std::log1p(-uniform()); }

 private:
  std::mt19937_64 engine_;
};

Error unsatisfiable(std::string_view what, std::size_t n) {
  return Error(ErrorCode::Unsatisfiable,
               "could not generate " + std::string(what) + " profile with n = " +
                   std::to_string(n));
}

bool in_band(double magnitude) {
  return magnitude >= kMinAngle && magnitude <= kPi - kMinAngle;
}

// n positive parts summing to `total`, each in [kMinAngle, pi - kMinAngle],
// last part taken as the exact remainder. Samples the parts directly when
// they are small on average and the slacks pi - part otherwise.
bool positive_partition(Rng& rng, std::size_t n, double total,
                        std::vector<double>& out) {
  out.assign(n, 0.0);
  const bool via_slack = total / static_cast<double>(n) > kPi / 2.0;
  const double mass = via_slack ? static_cast<double>(n) * kPi - total : total;
  if (mass <= 0.0) return false;
  std::vector<double> weight(n);
  for (double& w : weight) w = rng.gamma2();
  const double sum_w = std::accumulate(weight.begin(), weight.end(), 0.0);
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double part = mass * weight[i] / sum_w;
    out[i] = via_slack ? kPi - part : part;
    running += out[i];
  }
  out[n - 1] = total - running;
  return std::all_of(out.begin(), out.end(), [](double t) { return in_band(t); });
}

bool well_separated(const AngleProfile& p) { return min_vertex_gap(p) >= kMinAngle; }

AngleProfile negated(const AngleProfile& p) {
  std::vector<double> t(p.thetas().begin(), p.thetas().end());
  for (double& v : t) v = -v;
  return AngleProfile::make(std::move(t), -p.winding());
}

bool has_label(const AngleProfile& p, const Label& label) {
  const ConvexityVerdict v = classify_by_angles(p);
  return v.label == label;
}

template <class Attempt>
AngleProfile sample(std::string_view what, std::size_t n, std::uint64_t seed,
                    const Label& label, Attempt attempt) {
  Rng rng(seed);
  std::vector<double> thetas;
  for (int k = 0; k < kMaxAttempts; ++k) {
    std::int64_t w = 0;
    if (!attempt(rng, thetas, w)) continue;
    try {
      AngleProfile p = AngleProfile::make(thetas, w);
      if (well_separated(p) && has_label(p, label)) return p;
    } catch (const Error&) {
    }
  }
  throw unsatisfiable(what, n);
}

AngleProfile condition_one(std::size_t n, std::uint64_t seed) {
  return sample("condition I", n, seed, Condition::I,
                [n](Rng& rng, std::vector<double>& t, std::int64_t& w) {
                  w = 1;
                  return positive_partition(rng, n, kTwoPi, t);
                });
}

AngleProfile condition_three(std::size_t n, std::uint64_t seed) {
  return sample("condition III", n, seed, Condition::III,
                [n](Rng& rng, std::vector<double>& t, std::int64_t& w) {
                  // Positive chain sigma_1 < ... < sigma_{n-1} = S inside
                  // (0, pi), closed by theta_{n-1} = -S.
                  const double span = rng.uniform(0.2, kPi - kMinAngle);
                  std::vector<double> pos;
                  if (!positive_partition(rng, n - 1, span, pos)) return false;
                  const double closed = std::accumulate(pos.begin(), pos.end(), 0.0);
                  pos.push_back(-closed);
                  const std::size_t shift = rng.index(n);
                  t.resize(n);
                  for (std::size_t i = 0; i < n; ++i) t[i] = pos[(i + shift) % n];
                  w = 0;
                  return true;
                });
}

AngleProfile alternative_one(std::size_t n, std::uint64_t seed) {
  // All angles < pi, so 2 pi w < n pi.
  const auto w_max = static_cast<std::int64_t>(
      std::floor((static_cast<double>(n) * (kPi - 2 * kMinAngle)) / kTwoPi));
  if (n < 5 || w_max < 2) throw unsatisfiable("A1", n);
  return sample("A1", n, seed, Alternative::A1,
                [n, w_max](Rng& rng, std::vector<double>& t, std::int64_t& w) {
                  w = 2 + static_cast<std::int64_t>(rng.index(std::size_t(w_max - 1)));
                  if (2 * w >= std::int64_t(n)) w = 2;
                  return positive_partition(rng, n, kTwoPi * double(w), t);
                });
}

AngleProfile alternative_three(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw unsatisfiable("A3", n);
  const double room = double(n - 1) * (kPi - 2 * kMinAngle);
  const auto w_max = static_cast<std::int64_t>(std::floor((room - 0.05) / kTwoPi));
  if (w_max < 1) throw unsatisfiable("A3", n);
  return sample("A3", n, seed, Alternative::A3,
                [n, room, w_max](Rng& rng, std::vector<double>& t, std::int64_t& w) {
                  w = 1 + static_cast<std::int64_t>(rng.index(std::size_t(w_max)));
                  const double target = kTwoPi * double(w);
                  const double neg_max = std::min(kPi - kMinAngle, room - target - 0.01);
                  if (neg_max <= kMinAngle) return false;
                  const double neg = rng.uniform(kMinAngle, neg_max);
                  std::vector<double> pos;
                  if (!positive_partition(rng, n - 1, target + neg, pos)) return false;
                  const double sum = std::accumulate(pos.begin(), pos.end(), 0.0);
                  pos.push_back(target - sum);
                  const std::size_t shift = rng.index(n);
                  t.resize(n);
                  for (std::size_t i = 0; i < n; ++i) t[i] = pos[(i + shift) % n];
                  return true;
                });
}

AngleProfile alternative_five(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw unsatisfiable("A5", n);
  return sample("A5", n, seed, Alternative::A5,
                [n](Rng& rng, std::vector<double>& t, std::int64_t& w) {
                  t.resize(n);
                  double sum = 0.0;
                  for (std::size_t i = 0; i + 1 < n; ++i) {
                    const double mag = rng.uniform(kMinAngle, kPi - kMinAngle);
                    t[i] = rng.coin() ? mag : -mag;
                    sum += t[i];
                  }
                  const double closing = std::remainder(-sum, kTwoPi);
                  if (!in_band(std::fabs(closing))) return false;
                  w = static_cast<std::int64_t>(std::llround((sum + closing) / kTwoPi));
                  t[n - 1] = kTwoPi * double(w) - sum;
                  const auto pos = std::count_if(t.begin(), t.end(), [](double v) { return v > 0; });
                  const auto neg = static_cast<std::ptrdiff_t>(n) - pos;
                  return pos >= 2 && neg >= 2 && in_band(std::fabs(t[n - 1]));
                });
}

}  // namespace

std::string_view to_string(const Label& label) noexcept {
  return std::visit([](auto v) { return cyclogon::to_string(v); }, label);
}

std::size_t min_size(const Label& label) noexcept {
  if (std::holds_alternative<Condition>(label)) return 3;
  switch (std::get<Alternative>(label)) {
    case Alternative::A1:
    case Alternative::A2: return 5;
    case Alternative::A3:
    case Alternative::A4:
    case Alternative::A5: return 4;
  }
  return 3;
}

AngleProfile gen_convex_profile(Condition condition, std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  switch (condition) {
    case Condition::I: return condition_one(n, seed);
    case Condition::II: return negated(condition_one(n, seed));
    case Condition::III: return condition_three(n, seed);
    case Condition::IV: return negated(condition_three(n, seed));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown condition");
}

AngleProfile gen_nonconvex_profile(Alternative alternative, std::size_t n,
                                   std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  switch (alternative) {
    case Alternative::A1: return alternative_one(n, seed);
    case Alternative::A2: return negated(alternative_one(n, seed));
    case Alternative::A3: return alternative_three(n, seed);
    case Alternative::A4: return negated(alternative_three(n, seed));
    case Alternative::A5: return alternative_five(n, seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown alternative");
}

AngleProfile gen_profile(const Label& label, std::size_t n, std::uint64_t seed) {
  if (const auto* c = std::get_if<Condition>(&label)) return gen_convex_profile(*c, n, seed);
  return gen_nonconvex_profile(std::get<Alternative>(label), n, seed);
}

AngleProfile gen_jittered_convex(std::size_t n, std::uint64_t seed, double spread) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  if (!(spread >= 0.0 && spread < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "spread must lie in [0, 1)");
  }
  Rng rng(seed);
  std::vector<double> t(n);
  double total = 0.0;
  for (double& v : t) {
    v = 1.0 + spread * rng.uniform(-1.0, 1.0);
    total += v;
  }
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t[i] *= kTwoPi / total;
    running += t[i];
  }
  t[n - 1] = kTwoPi - running;
  return AngleProfile::make(std::move(t), 1, Tolerance{0.0, 1e-6});
}

std::vector<Vertex> gen_vertices_on_circle(const AngleProfile& profile,
                                           const Circle& circle, double rotation) {
  const CanonicalPolygon unit = profile_to_vertices(profile);
  const double c = std::cos(rotation), s = std::sin(rotation);
  std::vector<Vertex> out;
  out.reserve(unit.size());
  for (const Vertex& v : unit.vertices()) {
    out.push_back({circle.center.x + circle.radius * (c * v.x - s * v.y),
                   circle.center.y + circle.radius * (s * v.x + c * v.y)});
  }
  return out;
}

Placement random_placement(std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Placement p;
  p.circle.center = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
  p.circle.radius = std::exp(rng.uniform(std::log(0.1), std::log(100.0)));
  p.rotation = rng.uniform(-kPi, kPi);
  return p;
}

double min_vertex_gap(const AngleProfile& profile) {
  const std::size_t n = profile.size();
  std::vector<double> pos(n);
  double sigma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::fmod(sigma, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    pos[i] = r;
    sigma += profile[i];
  }
  std::sort(pos.begin(), pos.end());
  double gap = pos.front() + kTwoPi - pos.back();
  for (std::size_t i = 0; i + 1 < n; ++i) gap = std::min(gap, pos[i + 1] - pos[i]);
  return gap;
}

}  // namespace cyclogon::gen
