#include "cyclogon/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cyclogon::io {

namespace {

Error parse_error(const std::string& msg) { return Error(ErrorCode::ParseError, msg); }

double finite_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw parse_error(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw parse_error(where + " must be finite");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view field, double& out) {
  const std::string s(trim(field));
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  // ERANGE on underflow still yields the nearest subnormal; only reject
  // overflow, which shows up as infinity.
  return end == s.c_str() + s.size() && std::isfinite(out);
}

}  // namespace

PolygonInput parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("top-level JSON value must be an object");
  const bool has_v = doc.contains("vertices");
  const bool has_t = doc.contains("thetas");
  if (has_v == has_t) {
    throw parse_error("expected exactly one of \"vertices\" or \"thetas\"");
  }
  if (has_v) {
    const auto& arr = doc["vertices"];
    if (!arr.is_array()) throw parse_error("\"vertices\" must be an array");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& p = arr[i];
      const std::string where = "vertices[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2) throw parse_error(where + " must be [x, y]");
      out.push_back({finite_number(p[0], where), finite_number(p[1], where)});
    }
    return {std::move(out)};
  }
  const auto& arr = doc["thetas"];
  if (!arr.is_array()) throw parse_error("\"thetas\" must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(finite_number(arr[i], "thetas[" + std::to_string(i) + "]"));
  }
  return {std::move(out)};
}

PolygonInput parse_csv(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw parse_error("line " + std::to_string(line_no) + ": expected x,y");
    }
    double x = 0, y = 0;
    if (!parse_double(line.substr(0, comma), x) || !parse_double(line.substr(comma + 1), y)) {
      if (out.empty() && trim(line.substr(0, comma)) == "x") continue;  // header
      throw parse_error("line " + std::to_string(line_no) + ": expected two finite numbers");
    }
    out.push_back({x, y});
  }
  return {std::move(out)};
}

PolygonInput read_polygon_file(const std::filesystem::path& path,
                               std::optional<InputFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const InputFormat f =
      format.value_or(path.extension() == ".csv" ? InputFormat::Csv : InputFormat::Json);
  return f == InputFormat::Csv ? parse_csv(buf.str()) : parse_json(buf.str());
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string out = buf;
  // "-0" would be read back as the integer 0 by JSON parsers.
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string vertices_to_json(std::span<const Vertex> vertices) {
  std::string out = "{\"vertices\": [";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ", ";
    out += "[" + format_double(vertices[i].x) + ", " + format_double(vertices[i].y) + "]";
  }
  return out + "]}\n";
}

std::string vertices_to_csv(std::span<const Vertex> vertices) {
  std::string out;
  for (const Vertex& v : vertices) out += format_double(v.x) + "," + format_double(v.y) + "\n";
  return out;
}

std::string thetas_to_json(std::span<const double> thetas) {
  std::string out = "{\"thetas\": [";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (i) out += ", ";
    out += format_double(thetas[i]);
  }
  return out + "]}\n";
}

std::string render_svg(const CanonicalPolygon& poly, std::string_view caption) {
  constexpr double kSize = 480.0, kMid = kSize / 2.0, kR = 190.0;
  auto px = [&](double x) { return kMid + kR * x; };
  auto py = [&](double y) { return kMid - kR * y; };  // y axis up
  std::ostringstream s;
  s.precision(6);
  s << std::fixed;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
    << kSize + 30 << "\" viewBox=\"0 0 " << kSize << ' ' << kSize + 30 << "\">\n"
    << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
       "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
       "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/></marker></defs>\n"
    << "  <circle cx=\"" << kMid << "\" cy=\"" << kMid << "\" r=\"" << kR
    << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& a = poly[i];
    const Vertex& b = poly[(i + 1) % n];
    s << "  <line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
      << "\" y2=\"" << py(b.y)
      << "\" stroke=\"#c0392b\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& v = poly[i];
    s << "  <circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y)
      << "\" r=\"4\" fill=\"#2c3e50\"/>\n"
      << "  <text x=\"" << px(1.12 * v.x) << "\" y=\"" << py(1.12 * v.y)
      << "\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << i
      << "</text>\n";
  }
  s << "  <text x=\"" << kMid << "\" y=\"" << kSize + 18
    << "\" font-size=\"14\" text-anchor=\"middle\">" << caption << "</text>\n</svg>\n";
  return s.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

}  // namespace cyclogon::io
