#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclogon/types.hpp"

namespace cyclogon::io {

enum class InputFormat { Json, Csv };

/// Raw coordinates or a central-angle profile, as read from a file.
struct PolygonInput {
  std::variant<std::vector<Vertex>, std::vector<double>> data;

  bool is_profile() const noexcept {
    return std::holds_alternative<std::vector<double>>(data);
  }
  const std::vector<Vertex>& vertices() const { return std::get<0>(data); }
  const std::vector<double>& thetas() const { return std::get<1>(data); }
};

/// {"vertices": [[x, y], ...]} or {"thetas": [t0, ...]}; exactly one key.
PolygonInput parse_json(std::string_view text);

/// One "x,y" vertex per line. Blank lines and lines starting with '#' are
/// skipped, as is a leading "x,y" header.
PolygonInput parse_csv(std::string_view text);

/// Format from `format`, else from the extension (.csv -> Csv, else Json).
PolygonInput read_polygon_file(const std::filesystem::path& path,
                               std::optional<InputFormat> format = std::nullopt);

/// 17 significant digits, enough to round-trip every finite double through
/// strtod. Integral values get a trailing ".0".
std::string format_double(double v);

std::string vertices_to_json(std::span<const Vertex> vertices);
std::string vertices_to_csv(std::span<const Vertex> vertices);
std::string thetas_to_json(std::span<const double> thetas);

/// Static diagram of a canonical polygon: unit circle, vertices labelled by
/// index, and arrows along the edges in vertex order.
std::string render_svg(const CanonicalPolygon& poly, std::string_view caption);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cyclogon::io
