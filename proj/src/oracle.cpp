#include "cyclogon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cyclogon::oracle {

namespace {

double cross(const Vertex& o, const Vertex& a, const Vertex& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool is_ordinary(std::span<const Vertex> raw, const Tolerance& tol) {
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a + 1; b < raw.size(); ++b) {
      if (std::hypot(raw[a].x - raw[b].x, raw[a].y - raw[b].y) <= tol.geom) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> convex_hull_indices(std::span<const Vertex> points) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::AllCollinear, "hull needs at least 3 points");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Vertex &p = points[a], &q = points[b];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  for (std::size_t t = n - 1, lower = k + 1; t-- > 0;) {
    const std::size_t idx = order[t];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    throw Error(ErrorCode::AllCollinear, "all points are collinear; the hull is degenerate");
  }
  return hull;
}

std::vector<Vertex> convex_hull(std::span<const Vertex> points) {
  std::vector<Vertex> out;
  for (std::size_t idx : convex_hull_indices(points)) out.push_back(points[idx]);
  return out;
}

bool is_convex_by_hull(const CanonicalPolygon& poly) {
  const std::size_t n = poly.size();
  const std::vector<std::size_t> hull = convex_hull_indices(poly.vertices());
  if (hull.size() != n) return false;

  std::vector<std::size_t> position(n);
  for (std::size_t r = 0; r < n; ++r) position[hull[r]] = r;

  auto follows = [&](std::size_t step) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((position[i] + step) % n != position[(i + 1) % n]) return false;
    }
    return true;
  };
  return follows(1) || follows(n - 1);
}

bool is_convex_by_halfplanes(const CanonicalPolygon& poly, const Tolerance& tol) {
  const std::size_t n = poly.size();
  bool convex = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& a = poly[i];
    const Vertex& b = poly[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const double nx = -(b.y - a.y) / len;
    const double ny = (b.x - a.x) / len;
    int side = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      const double offset = nx * (poly[j].x - a.x) + ny * (poly[j].y - a.y);
      if (std::fabs(offset) <= tol.geom) {
        Error e(ErrorCode::MarginalOffset,
                "vertex " + std::to_string(j) + " lies within tolerance of the line of edge " +
                    std::to_string(i));
        e.index_pair = std::pair{i, j};
        e.deviation = std::fabs(offset);
        throw e;
      }
      const int s = offset > 0.0 ? 1 : -1;
      if (side == 0) {
        side = s;
      } else if (s != side) {
        convex = false;
      }
    }
  }
  return convex;
}

}  // namespace cyclogon::oracle
