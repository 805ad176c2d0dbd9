#include "cyclogon/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>

#include "cyclogon/angles.hpp"
#include "cyclogon/determinants.hpp"
#include "cyclogon/generators.hpp"
#include "cyclogon/oracle.hpp"

namespace cyclogon::bench {

namespace {

using Clock = std::chrono::steady_clock;

volatile std::size_t g_sink = 0;

// One timed quantity: a callable plus the batch size that makes one
// repetition last at least min_batch seconds.
struct Probe {
  std::function<void()> call;
  std::size_t batch = 1;
  double best = std::numeric_limits<double>::infinity();

  void calibrate(double min_batch) {
    const auto t0 = Clock::now();
    call();
    const double first = std::chrono::duration<double>(Clock::now() - t0).count();
    if (first < min_batch) batch = static_cast<std::size_t>(min_batch / std::max(first, 1e-9)) + 1;
  }
  void sample() {
    const auto t0 = Clock::now();
    for (std::size_t b = 0; b < batch; ++b) call();
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    best = std::min(best, dt / static_cast<double>(batch));
  }
};

}  // namespace

// Repetitions are interleaved across all sizes so that a slow stretch on a
// shared machine does not land on one size only.
std::vector<Row> run(const Config& config) {
  struct Instance {
    AngleProfile profile;
    CanonicalPolygon poly;
  };
  std::vector<Instance> inst;
  std::vector<Row> rows(config.sizes.size());
  for (std::size_t n : config.sizes) {
    AngleProfile profile = gen::gen_jittered_convex(n, config.seed + n);
    CanonicalPolygon poly = profile_to_vertices(profile, config.tol);
    inst.push_back({std::move(profile), std::move(poly)});
  }
  std::vector<std::vector<Probe>> probes(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Instance& in = inst[r];
    Row& row = rows[r];
    row.n = config.sizes[r];
    auto& p = probes[r];
    p.push_back({[&in] { g_sink = g_sink + classify_by_angles(in.profile).is_convex(); }});
    p.push_back({[&in, &config] {
      g_sink = g_sink + classify_by_angles(angle_profile(in.poly, config.tol)).is_convex();
    }});
    p.push_back({[&in] { g_sink = g_sink + oracle::is_convex_by_hull(in.poly); }});
    if (row.n <= config.max_det_n) {
      p.push_back({[&in, &row, &config] {
        try {
          g_sink = g_sink + classify_by_determinants(in.poly, config.tol).is_convex();
        } catch (const Error& e) {
          if (e.code() != ErrorCode::MarginalSign) throw;
          row.determinants_marginal = true;
        }
      }});
    }
    for (Probe& q : p) q.calibrate(config.min_batch_s);
  }
  for (std::size_t rep = 0; rep < std::max<std::size_t>(config.reps, 1); ++rep) {
    for (auto& p : probes) {
      for (Probe& q : p) q.sample();
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].angles_s = probes[r][0].best;
    rows[r].pipeline_s = probes[r][1].best;
    rows[r].hull_s = probes[r][2].best;
    if (probes[r].size() > 3) rows[r].determinants_s = probes[r][3].best;
  }
  return rows;
}

std::string format_table(const std::vector<Row>& rows, Format format) {
  std::string out;
  char line[256];
  if (format == Format::Csv) {
    out = "n,angles_s,pipeline_s,determinants_s,determinants_marginal,hull_s\n";
    for (const Row& r : rows) {
      char det[32] = "";
      if (r.determinants_s) std::snprintf(det, sizeof det, "%.6e", *r.determinants_s);
      std::snprintf(line, sizeof line, "%zu,%.6e,%.6e,%s,%d,%.6e\n", r.n, r.angles_s,
                    r.pipeline_s, det, r.determinants_marginal ? 1 : 0, r.hull_s);
      out += line;
    }
    return out;
  }
  std::snprintf(line, sizeof line, "%10s %14s %14s %16s %14s %12s\n", "n", "angles [s]",
                "pipeline [s]", "determinants [s]", "hull [s]", "det/angles");
  out = line;
  for (const Row& r : rows) {
    char det[32] = "-", ratio[32] = "-";
    if (r.determinants_s) {
      std::snprintf(det, sizeof det, "%.3e%s", *r.determinants_s,
                    r.determinants_marginal ? "*" : "");
      std::snprintf(ratio, sizeof ratio, "%.0f", *r.determinants_s / r.angles_s);
    }
    std::snprintf(line, sizeof line, "%10zu %14.3e %14.3e %16s %14.3e %12s\n", r.n,
                  r.angles_s, r.pipeline_s, det, r.hull_s, ratio);
    out += line;
  }
  if (std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.determinants_marginal; })) {
    out += "* some |Delta| fell within eps; the scan still ran to completion\n";
  }
  return out;
}

}  // namespace cyclogon::bench
