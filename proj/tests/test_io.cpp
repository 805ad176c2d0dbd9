#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <random>

#include "cyclogon/angles.hpp"
#include "cyclogon/io.hpp"
#include "doctest.h"

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

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST_CASE("json input") {
  const io::PolygonInput v = io::parse_json(R"({"vertices": [[1, 0], [0, 1.5], [-1, 0]]})");
  REQUIRE_FALSE(v.is_profile());
  CHECK(v.vertices().size() == 3);
  CHECK(v.vertices()[1] == Vertex{0, 1.5});
  const io::PolygonInput t = io::parse_json(R"({"thetas": [0.5, 0.5, -1.0]})");
  REQUIRE(t.is_profile());
  CHECK(t.thetas() == std::vector<double>{0.5, 0.5, -1.0});

  CHECK(code_of([] { io::parse_json(R"({"vertices": [], "thetas": []})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_json(R"({"points": []})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_json(R"({"vertices": [[1, 2, 3]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_json(R"({"thetas": ["a"]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_json("[1, 2]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_json("{"); }) == ErrorCode::ParseError);
}

TEST_CASE("csv input") {
  const io::PolygonInput v = io::parse_csv("x,y\n# comment\n1,0\n\n 0 , 1\n-1,0\n");
  REQUIRE(v.vertices().size() == 3);
  CHECK(v.vertices()[1] == Vertex{0, 1});
  CHECK(code_of([] { io::parse_csv("1,0\n2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_csv("1,0\n2,abc\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_csv("1,0\nx,y\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("decimal serialization round-trips bit-exactly") {
  std::mt19937_64 rng(23);
  std::vector<double> values{0.0, -0.0, 1.0 / 3.0, kPi, 1e-310, -5e-324,
                             std::numeric_limits<double>::max(),
                             std::numeric_limits<double>::min(), 0.1, 123456789.123456789};
  for (int i = 0; i < 20000; ++i) {
    double d;
    do {
      d = std::bit_cast<double>(rng());
    } while (!std::isfinite(d));
    values.push_back(d);
  }
  for (double d : values) {
    CHECK(same_bits(std::strtod(io::format_double(d).c_str(), nullptr), d));
  }
  std::vector<Vertex> verts;
  for (std::size_t i = 0; i + 1 < values.size(); i += 2) verts.push_back({values[i], values[i + 1]});
  const auto from_json = io::parse_json(io::vertices_to_json(verts)).vertices();
  const auto from_csv = io::parse_csv(io::vertices_to_csv(verts)).vertices();
  REQUIRE(from_json.size() == verts.size());
  REQUIRE(from_csv.size() == verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    CHECK(same_bits(from_json[i].x, verts[i].x));
    CHECK(same_bits(from_json[i].y, verts[i].y));
    CHECK(same_bits(from_csv[i].x, verts[i].x));
    CHECK(same_bits(from_csv[i].y, verts[i].y));
  }
  const std::vector<double> thetas(values.begin(), values.begin() + 100);
  const auto back = io::parse_json(io::thetas_to_json(thetas)).thetas();
  for (std::size_t i = 0; i < thetas.size(); ++i) CHECK(same_bits(back[i], thetas[i]));
}

TEST_CASE("files and diagram") {
  const auto dir = std::filesystem::temp_directory_path() / "cyclogon_test_io";
  std::filesystem::create_directories(dir);
  const std::vector<Vertex> sq{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  io::write_text_file(dir / "sq.csv", io::vertices_to_csv(sq));
  io::write_text_file(dir / "sq.json", io::vertices_to_json(sq));
  io::write_text_file(dir / "sq.txt", io::vertices_to_csv(sq));
  CHECK(io::read_polygon_file(dir / "sq.csv").vertices() == sq);
  CHECK(io::read_polygon_file(dir / "sq.json").vertices() == sq);
  CHECK(io::read_polygon_file(dir / "sq.txt", io::InputFormat::Csv).vertices() == sq);
  CHECK(code_of([&] { io::read_polygon_file(dir / "missing.json"); }) == ErrorCode::ParseError);

  const std::string svg = io::render_svg(canonicalize(sq), "convex (I)");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("convex (I)") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t pos = 0; (pos = svg.find("marker-end", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == 4);
  std::filesystem::remove_all(dir);
}
