#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclogon/generators.hpp"
#include "cyclogon/types.hpp"

namespace cyclogon::fuzz {

struct Config {
  std::size_t count = 10000;
  std::size_t n_min = 3;
  std::size_t n_max = 12;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Tolerance tol;
  /// Labels cycled through instance by instance; defaults to I-IV, A1-A5.
  std::vector<gen::Label> labels;
};

/// One instance that failed a check, with enough data to replay it.
struct Case {
  std::uint64_t seed = 0;
  gen::Label label;
  std::size_t n = 0;
  std::vector<Vertex> raw;
  std::string detail;
};

struct Summary {
  std::size_t instances = 0;  // generated and pushed through the pipeline
  std::size_t skipped = 0;    // label unrealizable for the n range
  std::size_t marginal = 0;
  std::size_t agreed = 0;     // non-marginal, all classifiers agree
  std::size_t disagreements = 0;
  std::size_t label_mismatches = 0;
  std::size_t sign_lemma_failures = 0;
  std::size_t soundness_failures = 0;
  std::size_t chain_failures = 0;
  std::map<std::string, std::size_t> marginal_reasons;
  std::map<std::string, std::size_t> coverage;  // I..IV, A1..A5, P1..P3
  std::vector<Case> failures;                   // capped at kMaxRecorded
  double seconds = 0.0;

  static constexpr std::size_t kMaxRecorded = 32;

  bool clean() const noexcept {
    return disagreements == 0 && label_mismatches == 0 && sign_lemma_failures == 0 &&
           soundness_failures == 0 && chain_failures == 0;
  }
};

std::vector<gen::Label> all_labels();

/// Differential loop: every instance is generated from its label, placed on
/// a random circle, canonicalized, and judged by the angle classifier, the
/// determinant classifier and both oracles. Convex instances additionally
/// run the sign lemma and the no-pattern check over all 2n relabellings;
/// non-convex ones run reduction -> witness -> negativity. Instance i uses
/// seed `config.seed + i`, so results do not depend on the thread count.
Summary run(const Config& config);

std::string format_summary(const Summary& s);

/// JSON readable by `cyclogon classify` (extra keys describe the case).
std::string case_to_json(const Case& c);

}  // namespace cyclogon::fuzz
