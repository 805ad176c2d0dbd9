#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>

#include "cyclogon/angles.hpp"
#include "cyclogon/types.hpp"

namespace cyclogon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CollinearSeed: return "CollinearSeed";
    case ErrorCode::NotConcyclic: return "NotConcyclic";
    case ErrorCode::DuplicateVertices: return "DuplicateVertices";
    case ErrorCode::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::DegenerateProfile: return "DegenerateProfile";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::MarginalSign: return "MarginalSign";
    case ErrorCode::MarginalOffset: return "MarginalOffset";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NoReduction: return "NoReduction";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
  }
  return "Unknown";
}

std::string_view to_string(Condition c) noexcept {
  switch (c) {
    case Condition::I: return "I";
    case Condition::II: return "II";
    case Condition::III: return "III";
    case Condition::IV: return "IV";
  }
  return "?";
}

std::string_view to_string(Alternative a) noexcept {
  switch (a) {
    case Alternative::A1: return "A1";
    case Alternative::A2: return "A2";
    case Alternative::A3: return "A3";
    case Alternative::A4: return "A4";
    case Alternative::A5: return "A5";
  }
  return "?";
}

std::optional<Condition> ConvexityVerdict::condition() const noexcept {
  if (const auto* c = std::get_if<Condition>(&label)) return *c;
  return std::nullopt;
}

std::optional<Alternative> ConvexityVerdict::alternative() const noexcept {
  if (const auto* a = std::get_if<Alternative>(&label)) return *a;
  return std::nullopt;
}

Tolerance Tolerance::from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("CYCLOGON_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) {
      tol.geom = v;
    }
  }
  return tol;
}

Vertex make_vertex(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
  }
  return {x, y};
}

CanonicalPolygon CanonicalPolygon::from_unit_vertices(std::vector<Vertex> vertices,
                                                      Circle source_circle,
                                                      const Tolerance& tol) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 vertices");
  }
  if (std::hypot(vertices[0].x - 1.0, vertices[0].y) > tol.geom) {
    throw Error(ErrorCode::InvalidArgument, "canonical polygon must start at (1, 0)");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& v = vertices[i];
    if (!std::isfinite(v.x) || !std::isfinite(v.y) ||
        std::fabs(std::hypot(v.x, v.y) - 1.0) > tol.geom) {
      Error e(ErrorCode::InvalidArgument,
              "canonical vertex " + std::to_string(i) + " is not on the unit circle");
      e.index = i;
      throw e;
    }
  }
  if (auto pair = find_coincident_pair(vertices, tol.geom)) {
    Error e(ErrorCode::DuplicateVertices,
            "vertices " + std::to_string(pair->first) + " and " +
                std::to_string(pair->second) +
                " coincide; an ordinary polygon needs pairwise distinct vertices");
    e.index_pair = pair;
    throw e;
  }
  return CanonicalPolygon(std::move(vertices), source_circle);
}

SigmaSequence SigmaSequence::from_values(std::vector<double> sigma,
                                         const Tolerance& tol) {
  if (sigma.size() < 4) {
    throw Error(ErrorCode::InvalidArgument, "sigma sequence needs n + 1 >= 4 values");
  }
  if (sigma[0] != 0.0) {
    throw Error(ErrorCode::InvalidProfile, "sigma_0 must be 0");
  }
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    const double step = sigma[i + 1] - sigma[i];
    if (!std::isfinite(step) || step <= -kPi - tol.geom || step > kPi + tol.geom) {
      Error e(ErrorCode::InvalidProfile,
              "sigma step " + std::to_string(i) + " leaves (-pi, pi]");
      e.index = i;
      throw e;
    }
  }
  const double turns = sigma.back() / kTwoPi;
  if (std::fabs(turns - std::round(turns)) > tol.winding) {
    Error e(ErrorCode::NonIntegerWinding, "sigma_n / 2pi is not an integer");
    e.deviation = std::fabs(turns - std::round(turns));
    throw e;
  }
  return SigmaSequence(std::move(sigma));
}

AngleProfile AngleProfile::make(std::vector<double> thetas, std::int64_t winding,
                                const Tolerance& tol) {
  if (thetas.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 central angles");
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double t = thetas[i];
    if (!std::isfinite(t) || t <= -kPi || t > kPi) {
      Error e(ErrorCode::InvalidProfile,
              "central angle " + std::to_string(i) + " leaves (-pi, pi]");
      e.index = i;
      throw e;
    }
    if (std::fabs(t) <= tol.geom) {
      Error e(ErrorCode::DuplicateVertices,
              "central angle " + std::to_string(i) +
                  " vanishes; consecutive vertices coincide (polygon not ordinary)");
      e.index_pair = std::pair{i, (i + 1) % thetas.size()};
      throw e;
    }
  }
  const double sum = std::accumulate(thetas.begin(), thetas.end(), 0.0);
  const double off = std::fabs(sum / kTwoPi - static_cast<double>(winding));
  if (off > tol.winding) {
    Error e(ErrorCode::InvalidProfile,
            "central angles do not sum to 2*pi*w for w = " + std::to_string(winding));
    e.deviation = off;
    throw e;
  }
  return AngleProfile(std::move(thetas), winding);
}

AngleProfile AngleProfile::from_thetas(std::vector<double> thetas,
                                       const Tolerance& tol) {
  const double turns = std::accumulate(thetas.begin(), thetas.end(), 0.0) / kTwoPi;
  if (!std::isfinite(turns)) {
    throw Error(ErrorCode::InvalidProfile, "central angles must be finite");
  }
  const double w = std::round(turns);
  if (std::fabs(turns - w) > tol.winding) {
    std::ostringstream msg;
    msg << "central angles sum to " << turns << " turns, not an integer";
    Error e(ErrorCode::NonIntegerWinding, msg.str());
    e.deviation = std::fabs(turns - w);
    throw e;
  }
  return make(std::move(thetas), static_cast<std::int64_t>(w), tol);
}

}  // namespace cyclogon
