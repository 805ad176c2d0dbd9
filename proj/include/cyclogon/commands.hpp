#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cyclogon/bench.hpp"
#include "cyclogon/fuzz.hpp"
#include "cyclogon/io.hpp"
#include "cyclogon/types.hpp"

namespace cyclogon::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitConvex = 0;
inline constexpr int kExitNonConvex = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitFuzzFailure = 3;

struct InputOptions {
  std::filesystem::path input;
  std::optional<io::InputFormat> format;  // by extension when absent
  bool explain = false;
  std::optional<std::filesystem::path> svg;
  Tolerance tol;
};

/// Verdict, winding number, central angles; for non-convex input also one
/// witness line. --explain adds the per-edge Delta sign table (vertex input
/// or profiles that map to distinct vertices) or the full certificate.
/// Returns 0 convex, 1 non-convex, 2 input error.
int cmd_classify(const InputOptions& opts, std::ostream& out, std::ostream& err);

/// Reduction, pattern, witness and the two determinants with their negative
/// product. Returns 0 with a certificate, 1 if the polygon is convex, 2 on
/// input error.
int cmd_witness(const InputOptions& opts, std::ostream& out, std::ostream& err);

struct FuzzOptions {
  fuzz::Config config;
  std::filesystem::path repro = "cyclogon-repro.json";
};

/// Returns 0 when every check passed, 3 otherwise (after writing the first
/// failing case to `repro`).
int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  bench::Config config;
  bench::Format format = bench::Format::Text;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// User-facing description of a library error, naming the violated
/// definition for the input-validation failures.
std::string describe(const Error& e);

}  // namespace cyclogon::cli
