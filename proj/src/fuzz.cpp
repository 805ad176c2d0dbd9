#include "cyclogon/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "cyclogon/angles.hpp"
#include "cyclogon/determinants.hpp"
#include "cyclogon/io.hpp"
#include "cyclogon/oracle.hpp"
#include "cyclogon/patterns.hpp"

namespace cyclogon::fuzz {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void merge(Summary& into, Summary&& part) {
  into.instances += part.instances;
  into.skipped += part.skipped;
  into.marginal += part.marginal;
  into.agreed += part.agreed;
  into.disagreements += part.disagreements;
  into.label_mismatches += part.label_mismatches;
  into.sign_lemma_failures += part.sign_lemma_failures;
  into.soundness_failures += part.soundness_failures;
  into.chain_failures += part.chain_failures;
  for (auto& [k, v] : part.marginal_reasons) into.marginal_reasons[k] += v;
  for (auto& [k, v] : part.coverage) into.coverage[k] += v;
  for (auto& c : part.failures) {
    if (into.failures.size() < Summary::kMaxRecorded) into.failures.push_back(std::move(c));
  }
}

class Worker {
 public:
  Worker(const Config& config, Summary& out) : config_(config), out_(out) {}

  void run_instance(std::size_t index) {
    const std::uint64_t seed = config_.seed + index;
    const gen::Label& label = config_.labels[index % config_.labels.size()];
    const std::size_t lo = std::max(config_.n_min, gen::min_size(label));
    if (lo > config_.n_max) {
      ++out_.skipped;
      return;
    }
    const std::size_t n = lo + mix(seed) % (config_.n_max - lo + 1);
    const Tolerance& tol = config_.tol;

    AngleProfile generated = gen::gen_profile(label, n, seed);
    const gen::Placement place = gen::random_placement(seed);
    std::vector<Vertex> raw = gen::gen_vertices_on_circle(generated, place.circle, place.rotation);
    ++out_.instances;
    Case failure{seed, label, n, raw, {}};

    std::optional<CanonicalPolygon> poly;
    try {
      poly = canonicalize(raw, tol);
    } catch (const Error& e) {
      return marginal(std::string("canonicalize:") + std::string(to_string(e.code())));
    }
    const AngleProfile profile = angle_profile(*poly, tol);
    const ConvexityVerdict by_angles = classify_by_angles(profile);
    const bool expected = std::holds_alternative<Condition>(label);

    bool by_det = false, by_planes = false;
    try {
      by_det = classify_by_determinants(*poly, tol).is_convex();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MarginalSign) throw;
      return marginal("MarginalSign");
    }
    try {
      by_planes = oracle::is_convex_by_halfplanes(*poly, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MarginalOffset) throw;
      return marginal("MarginalOffset");
    }
    const bool by_hull = oracle::is_convex_by_hull(*poly);

    if (by_angles.is_convex() != expected || by_det != expected || by_hull != expected ||
        by_planes != expected) {
      std::ostringstream d;
      d << "expected convex=" << expected << " angles=" << by_angles.is_convex()
        << " determinants=" << by_det << " hull=" << by_hull << " halfplanes=" << by_planes;
      failure.detail = d.str();
      ++out_.disagreements;
      return record(std::move(failure));
    }
    ++out_.agreed;
    ++out_.coverage[std::string(gen::to_string(by_angles.label))];
    if (by_angles.label != label) {
      failure.detail = "pipeline label " + std::string(gen::to_string(by_angles.label)) +
                       " differs from generated label";
      ++out_.label_mismatches;
      return record(std::move(failure));
    }

    if (expected) {
      check_convex(profile, std::move(failure));
    } else {
      check_chain(profile, std::move(failure));
    }
  }

 private:
  void marginal(const std::string& reason) {
    ++out_.marginal;
    ++out_.marginal_reasons[reason];
  }

  void record(Case c) {
    if (out_.failures.size() < Summary::kMaxRecorded) out_.failures.push_back(std::move(c));
  }

  void check_convex(const AngleProfile& profile, Case failure) {
    const Tolerance& tol = config_.tol;
    const SignLemmaReport report = check_sign_lemma(profile, tol);
    if (!report.pass) {
      ++out_.sign_lemma_failures;
      failure.detail = "sign lemma: " + std::to_string(report.violations) + " violation(s)";
      return record(std::move(failure));
    }
    for (bool reversed : {false, true}) {
      for (std::size_t s = 0; s < profile.size(); ++s) {
        const AngleProfile t = apply_reduction(profile, s, reversed, tol);
        if (auto p = detect_pattern(t.thetas(), tol)) {
          ++out_.soundness_failures;
          failure.detail = "convex profile exhibits " + std::string(to_string(p->kind)) +
                           " at shift " + std::to_string(s) + (reversed ? " (reversed)" : "");
          return record(std::move(failure));
        }
      }
    }
  }

  void check_chain(const AngleProfile& profile, Case failure) {
    try {
      const Certificate cert = certify_nonconvex(profile, config_.tol);
      ++out_.coverage[std::string(to_string(cert.reduction.pattern.kind))];
      if (!cert.check.negative) {
        ++out_.chain_failures;
        failure.detail = "witness determinants do not have a negative product";
        record(std::move(failure));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoReduction && e.code() != ErrorCode::NoWitness) throw;
      ++out_.chain_failures;
      failure.detail = std::string(to_string(e.code())) + ": " + e.what();
      record(std::move(failure));
    }
  }

  const Config& config_;
  Summary& out_;
};

}  // namespace

std::vector<gen::Label> all_labels() {
  return {Condition::I,    Condition::II,   Condition::III,  Condition::IV,
          Alternative::A1, Alternative::A2, Alternative::A3, Alternative::A4,
          Alternative::A5};
}

Summary run(const Config& input) {
  Config config = input;
  if (config.labels.empty()) config.labels = all_labels();
  if (config.n_min < 3 || config.n_max < config.n_min) {
    throw Error(ErrorCode::InvalidArgument, "need 3 <= n_min <= n_max");
  }
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = std::max(1u, std::min<unsigned>(
                                            config.threads,
                                            static_cast<unsigned>(std::max<std::size_t>(1, config.count))));
  std::vector<Summary> parts(threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = config.count * t / threads;
    const std::size_t end = config.count * (t + 1) / threads;
    Worker w(config, parts[t]);
    for (std::size_t i = begin; i < end; ++i) w.run_instance(i);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  Summary total;
  for (auto& p : parts) merge(total, std::move(p));
  total.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

std::string format_summary(const Summary& s) {
  std::ostringstream o;
  o << "instances:          " << s.instances << "\n"
    << "skipped:            " << s.skipped << "\n"
    << "agreed:             " << s.agreed << "\n"
    << "marginal:           " << s.marginal;
  if (s.instances > 0) {
    o << " (" << 100.0 * double(s.marginal) / double(s.instances) << "%)";
  }
  o << "\n";
  for (const auto& [k, v] : s.marginal_reasons) o << "  " << k << ": " << v << "\n";
  o << "disagreements:      " << s.disagreements << "\n"
    << "label mismatches:   " << s.label_mismatches << "\n"
    << "sign lemma fails:   " << s.sign_lemma_failures << "\n"
    << "soundness fails:    " << s.soundness_failures << "\n"
    << "chain fails:        " << s.chain_failures << "\n"
    << "coverage:";
  for (const auto& [k, v] : s.coverage) o << " " << k << "=" << v;
  o << "\nseconds:            " << s.seconds << "\n";
  return o.str();
}

std::string case_to_json(const Case& c) {
  std::string json = io::vertices_to_json(c.raw);
  json.pop_back();  // newline
  json.pop_back();  // closing brace
  std::ostringstream extra;
  extra << ", \"seed\": " << c.seed << ", \"label\": \"" << gen::to_string(c.label)
        << "\", \"n\": " << c.n << ", \"detail\": \"" << c.detail << "\"}\n";
  return json + extra.str();
}

}  // namespace cyclogon::fuzz
