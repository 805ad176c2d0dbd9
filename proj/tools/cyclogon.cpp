// cyclogon: convexity of cyclic polygons from central angles.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cyclogon/commands.hpp"
#include "cyclogon/kernels.hpp"

namespace {

using cyclogon::Tolerance;
namespace cli = cyclogon::cli;
namespace io = cyclogon::io;

std::optional<io::InputFormat> input_format(const std::string& name) {
  if (name == "json") return io::InputFormat::Json;
  if (name == "csv") return io::InputFormat::Csv;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity of cyclic polygons via central angles"};
  app.require_subcommand(1);

  std::optional<double> eps;
  std::string isa;
  app.add_option("--eps", eps, "Geometric tolerance (default 1e-9, or CYCLOGON_EPS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--isa", isa, "Force a kernel variant")
      ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  cli::InputOptions in_opts;
  std::string in_format;
  std::string svg;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", in_opts.input, "Polygon file (.json or .csv)")->required();
    sub->add_option("--format", in_format, "Input format (default: by extension)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--svg", svg, "Write a diagram to this path");
  };

  auto* classify = app.add_subcommand("classify", "Classify a polygon as convex or not");
  add_input(classify);
  classify->add_flag("--explain", in_opts.explain,
                     "Print the determinant sign table and the non-convexity certificate");

  auto* witness = app.add_subcommand("witness", "Certificate of non-convexity");
  add_input(witness);

  cli::FuzzOptions fuzz_opts;
  std::string repro;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test of all classifiers");
  fuzz->add_option("--count", fuzz_opts.config.count, "Number of instances")
      ->capture_default_str();
  fuzz->add_option("--n-min", fuzz_opts.config.n_min)->capture_default_str();
  fuzz->add_option("--n-max", fuzz_opts.config.n_max)->capture_default_str();
  fuzz->add_option("--seed", fuzz_opts.config.seed, "Base seed")->capture_default_str();
  fuzz->add_option("--threads", fuzz_opts.config.threads)->capture_default_str();
  fuzz->add_option("--repro", repro, "Where to write a failing case")
      ->default_str(fuzz_opts.repro.string());

  cli::BenchOptions bench_opts;
  std::string bench_format = "text";
  auto* bench = app.add_subcommand("bench", "Time the classifiers on convex instances");
  bench->add_option("--n", bench_opts.config.sizes, "Polygon sizes")->capture_default_str();
  bench->add_option("--reps", bench_opts.config.reps)->capture_default_str();
  bench->add_option("--max-det-n", bench_opts.config.max_det_n,
                    "Largest n for the quadratic determinant classifier")
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.config.seed)->capture_default_str();
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"text", "csv"}));

  CLI11_PARSE(app, argc, argv);

  Tolerance tol = Tolerance::from_env();
  if (eps) tol.geom = *eps;
  try {
    if (isa == "scalar") cyclogon::kernels::force_isa(cyclogon::kernels::Isa::Scalar);
    if (isa == "avx2") cyclogon::kernels::force_isa(cyclogon::kernels::Isa::Avx2);
    if (isa == "neon") cyclogon::kernels::force_isa(cyclogon::kernels::Isa::Neon);
  } catch (const cyclogon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInputError;
  }

  if (*classify || *witness) {
    in_opts.tol = tol;
    in_opts.format = input_format(in_format);
    if (!svg.empty()) in_opts.svg = svg;
    return *classify ? cli::cmd_classify(in_opts, std::cout, std::cerr)
                     : cli::cmd_witness(in_opts, std::cout, std::cerr);
  }
  if (*fuzz) {
    fuzz_opts.config.tol = tol;
    if (!repro.empty()) fuzz_opts.repro = repro;
    return cli::cmd_fuzz(fuzz_opts, std::cout, std::cerr);
  }
  bench_opts.config.tol = tol;
  bench_opts.format = bench_format == "csv" ? cyclogon::bench::Format::Csv
                                            : cyclogon::bench::Format::Text;
  return cli::cmd_bench(bench_opts, std::cout, std::cerr);
}
