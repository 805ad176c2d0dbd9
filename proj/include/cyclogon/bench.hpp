#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclogon/types.hpp"

namespace cyclogon::bench {

struct Config {
  std::vector<std::size_t> sizes{1000, 10000, 100000, 200000};
  std::size_t reps = 15;
  /// Each repetition batches calls until it lasts at least this long.
  double min_batch_s = 0.02;
  /// Determinant classifier is O(n^2); skipped above this size.
  std::size_t max_det_n = 20000;
  std::uint64_t seed = 7;
  Tolerance tol;
};

struct Row {
  std::size_t n = 0;
  double angles_s = 0.0;    // classify_by_angles on a ready profile
  double pipeline_s = 0.0;  // lift + angles + classify from canonical vertices
  std::optional<double> determinants_s;
  bool determinants_marginal = false;  // some |Delta| <= eps; time still covers the full scan
  double hull_s = 0.0;
};

/// Condition I instances (jittered regular polygons); each timing is the
/// minimum over `reps` repetitions of a batch lasting `min_batch_s`.
/// Repetitions cycle through all sizes rather than finishing one size first.
std::vector<Row> run(const Config& config);

enum class Format { Text, Csv };
std::string format_table(const std::vector<Row>& rows, Format format);

}  // namespace cyclogon::bench
