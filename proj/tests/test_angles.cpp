#include <cmath>
#include <cstdlib>
#include <random>

#include "cyclogon/angles.hpp"
#include "cyclogon/generators.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyclogon;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

constexpr double kHalfPi = kPi / 2;

}  // namespace

TEST_CASE("circumcircle through three points") {
  const std::vector<Vertex> pts{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  const Circle c = fit_circumcircle(pts);
  CHECK(c.center.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.center.y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("collinear seed is rejected") {
  const std::vector<Vertex> pts{{0, 0}, {1, 1}, {2, 2}, {0, 1}};
  CHECK(code_of([&] { fit_circumcircle(pts); }) == ErrorCode::CollinearSeed);
  const std::vector<Vertex> dup{{0, 0}, {0, 0}, {1, 0}};
  CHECK(code_of([&] { fit_circumcircle(dup); }) == ErrorCode::CollinearSeed);
}

TEST_CASE("off-circle vertex reported with index and deviation") {
  const std::vector<Vertex> pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1.5}, {0.6, 0.8}};
  try {
    fit_circumcircle(pts);
    FAIL("expected NotConcyclic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConcyclic);
    REQUIRE(e.index);
    CHECK(*e.index == 3);
    REQUIRE(e.deviation);
    CHECK(*e.deviation == doctest::Approx(0.5));
  }
}

TEST_CASE("canonicalize puts V0 at (1,0) on the unit circle") {
  const std::vector<Vertex> raw{{3 + 7 * std::cos(0.3), -2 + 7 * std::sin(0.3)},
                                {3 + 7 * std::cos(1.9), -2 + 7 * std::sin(1.9)},
                                {3 + 7 * std::cos(4.0), -2 + 7 * std::sin(4.0)}};
  const CanonicalPolygon p = canonicalize(raw);
  CHECK(p[0] == Vertex{1.0, 0.0});
  for (const Vertex& v : p.vertices()) CHECK(std::hypot(v.x, v.y) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.source_circle().radius == doctest::Approx(7.0));
  // Angles relative to V0 survive the similarity.
  CHECK(std::atan2(p[1].y, p[1].x) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("duplicate raw vertices name the colliding pair") {
  const std::vector<Vertex> raw{{1, 0}, {0, 1}, {-1, 0}, {0, 1}};
  try {
    canonicalize(raw);
    FAIL("expected DuplicateVertices");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateVertices);
    REQUIRE(e.index_pair);
    CHECK(*e.index_pair == std::pair<std::size_t, std::size_t>{1, 3});
  }
}

TEST_CASE("principal step branch cut") {
  CHECK(principal_step({1, 0}, {0, 1}) == doctest::Approx(kHalfPi));
  CHECK(principal_step({1, 0}, {0, -1}) == doctest::Approx(-kHalfPi));
  CHECK(principal_step({1, 0}, {-1, 0}) == kPi);
  CHECK(principal_step({1, 0}, {-1, -0.0}) == kPi);
  CHECK(principal_step({-1, 0}, {1, 0}) == kPi);
}

TEST_CASE("square lifts to a full turn") {
  const std::vector<Vertex> raw{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const SigmaSequence s = lift_sigma(canonicalize(raw));
  REQUIRE(s.values().size() == 5);
  for (std::size_t i = 0; i <= 4; ++i) CHECK(s[i] == doctest::Approx(i * kHalfPi));
  const AngleProfile p = central_angles(s);
  CHECK(p.winding() == 1);
  CHECK(classify_by_angles(p) == ConvexityVerdict{Condition::I, std::nullopt});
}

TEST_CASE("pentagram winds twice") {
  std::vector<Vertex> raw;
  for (int i = 0; i < 5; ++i) raw.push_back({std::cos(4 * kPi * i / 5), std::sin(4 * kPi * i / 5)});
  const AngleProfile p = angle_profile(canonicalize(raw));
  CHECK(p.winding() == 2);
  CHECK(classify_by_angles(p).alternative() == Alternative::A1);
}

TEST_CASE("classifier labels") {
  auto verdict = [](std::vector<double> t) { return classify_by_angles(AngleProfile::from_thetas(t)); };
  const double q = kHalfPi;
  CHECK(verdict({q, q, q, q}) == ConvexityVerdict{Condition::I, std::nullopt});
  CHECK(verdict({-q, -q, -q, -q}) == ConvexityVerdict{Condition::II, std::nullopt});
  CHECK(verdict({0.5, 0.5, -1.0}) == ConvexityVerdict{Condition::III, 2});
  CHECK(verdict({-0.5, -0.5, 1.0}) == ConvexityVerdict{Condition::IV, 2});
  CHECK(verdict({-1.0, 0.5, 0.5}) == ConvexityVerdict{Condition::III, 0});
  CHECK(verdict({-0.4, 0.7, -0.4, 0.1}) == ConvexityVerdict{Alternative::A5, std::nullopt});
  // Two negative steps in a w = 0 quadrilateral.
  CHECK(verdict({1.0, -0.4, 0.6, -1.2}).alternative() == Alternative::A5);
  // One negative, but a full turn: A3.
  CHECK(verdict({kPi, -q, kPi, q}) == ConvexityVerdict{Alternative::A3, std::nullopt});
  CHECK(verdict({-kPi + 1e-3, q, -kPi + 1e-3, -q - 2e-3}).alternative() == Alternative::A4);
}

TEST_CASE("profile validation") {
  CHECK(code_of([] { AngleProfile::make({1.0, 1.0}, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { AngleProfile::make({4.0, -2.0, -2.0}, 0); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([] { AngleProfile::make({-kPi, kPi, 0.5, -0.5}, 0); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([] { AngleProfile::make({1.0, 1.0, 1.0}, 1); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([] { AngleProfile::from_thetas({1.0, 1.0, 1.0}); }) == ErrorCode::NonIntegerWinding);
  try {
    AngleProfile::make({1.0, 0.0, -1.0}, 0);
    FAIL("expected DuplicateVertices");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateVertices);
    REQUIRE(e.index_pair);
    CHECK(*e.index_pair == std::pair<std::size_t, std::size_t>{1, 2});
  }
  // Profile with distinct steps but coincident vertices.
  const AngleProfile folded = AngleProfile::from_thetas({1.0, 1.0, -1.0, -1.0});
  CHECK(code_of([&] { profile_to_vertices(folded); }) == ErrorCode::DegenerateProfile);
}

TEST_CASE("tolerance from environment") {
  ::setenv("CYCLOGON_EPS", "1e-7", 1);
  CHECK(Tolerance::from_env().geom == 1e-7);
  ::setenv("CYCLOGON_EPS", "junk", 1);
  CHECK(Tolerance::from_env().geom == 1e-9);
  ::setenv("CYCLOGON_EPS", "-1", 1);
  CHECK(Tolerance::from_env().geom == 1e-9);
  ::unsetenv("CYCLOGON_EPS");
  CHECK(Tolerance::from_env().geom == 1e-9);
}

TEST_CASE("verdict matches a definition-level side test on random profiles") {
  // Arbitrary closed profiles, not drawn from any label.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-kPi + 0.05, kPi - 0.05);
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 3 + trial % 8;
    std::vector<double> t(n);
    double sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += t[i] = u(rng);
    t[n - 1] = std::remainder(-sum, kTwoPi);
    if (std::fabs(t[n - 1]) < 0.05 || std::fabs(t[n - 1]) > kPi - 0.05) continue;
    const AngleProfile p = AngleProfile::from_thetas(t);
    if (gen::min_vertex_gap(p) < 1e-3) continue;
    const int truth = support::strictly_one_side(support::place(t));
    if (truth < 0) continue;
    CHECK(classify_by_angles(p).is_convex() == (truth == 1));
    ++checked;
  }
  CHECK(checked > 2000);
}

TEST_CASE("similarity and cyclic shift invariance") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto label = gen::Label(seed % 2 ? gen::Label(Condition::III) : gen::Label(Alternative::A5));
    const AngleProfile prof = gen::gen_profile(label, 4 + seed % 6, seed);
    const ConvexityVerdict base = classify_by_angles(prof);
    const gen::Placement pl = gen::random_placement(seed);
    const auto raw = gen::gen_vertices_on_circle(prof, pl.circle, pl.rotation);
    CHECK(classify_by_angles(angle_profile(canonicalize(raw))) == base);
    for (std::size_t s = 1; s < raw.size(); ++s) {
      std::vector<Vertex> shifted(raw.begin() + s, raw.end());
      shifted.insert(shifted.end(), raw.begin(), raw.begin() + s);
      CHECK(classify_by_angles(angle_profile(canonicalize(shifted))).is_convex() == base.is_convex());
      CHECK(classify_by_angles(rotated(prof, s)).is_convex() == base.is_convex());
    }
  }
}

TEST_CASE("re-orientation negates angles and winding") {
  const AngleProfile p = AngleProfile::from_thetas({0.5, 0.5, -1.0});
  const AngleProfile r = reoriented(p);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == -0.5);
  CHECK(r[1] == -0.5);
  CHECK(r[2] == 1.0);
  CHECK(classify_by_angles(r) == ConvexityVerdict{Condition::IV, 2});
  // A step of exactly pi stays pi: (pi, -pi/2, pi, pi/2) -> w' = -1 + 2.
  const AngleProfile sq = AngleProfile::from_thetas({kPi, -kHalfPi, kPi, kHalfPi});
  const AngleProfile rsq = reoriented(sq);
  CHECK(rsq.winding() == 1);
  for (double t : rsq.thetas()) CHECK((t > -kPi && t <= kPi));
  // Geometrically the same as reversing the vertex list.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AngleProfile a5 = gen::gen_nonconvex_profile(Alternative::A5, 6, seed);
    const AngleProfile ra5 = reoriented(a5);
    const CanonicalPolygon poly = profile_to_vertices(a5);
    std::vector<Vertex> rev(poly.vertices().rbegin(), poly.vertices().rend());
    const AngleProfile direct = angle_profile(canonicalize(rev));
    CHECK(direct.winding() == ra5.winding());
    for (std::size_t i = 0; i < 6; ++i) CHECK(direct[i] == doctest::Approx(ra5[i]));
  }
}

TEST_CASE("coincident pair search") {
  const std::vector<Vertex> v{{1, 0}, {0, 1}, {std::cos(1.5707963), std::sin(1.5707963)}, {-1, 0}};
  const auto pair = find_coincident_pair(v, 1e-6);
  REQUIRE(pair);
  CHECK(*pair == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK_FALSE(find_coincident_pair(v, 1e-8));
  // Wrap-around neighbours (angles just below 2pi and 0).
  const std::vector<Vertex> w{{1, 0}, {0, 1}, {-1, 0}, {std::cos(-1e-9), std::sin(-1e-9)}};
  CHECK(find_coincident_pair(w, 1e-8) == std::pair<std::size_t, std::size_t>{0, 3});
}
