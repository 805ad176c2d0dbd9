#include "cyclogon/commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "cyclogon/angles.hpp"
#include "cyclogon/determinants.hpp"
#include "cyclogon/patterns.hpp"

namespace cyclogon::cli {

namespace {

struct Loaded {
  AngleProfile profile;
  std::optional<CanonicalPolygon> poly;  // absent for profiles that do not map to distinct points
};

Loaded load(const InputOptions& opts) {
  const io::PolygonInput in = io::read_polygon_file(opts.input, opts.format);
  if (in.is_profile()) {
    AngleProfile profile = AngleProfile::from_thetas(in.thetas(), opts.tol);
    std::optional<CanonicalPolygon> poly;
    try {
      poly = profile_to_vertices(profile, opts.tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateProfile) throw;
    }
    return {std::move(profile), std::move(poly)};
  }
  CanonicalPolygon poly = canonicalize(in.vertices(), opts.tol);
  AngleProfile profile = angle_profile(poly, opts.tol);
  return {std::move(profile), std::move(poly)};
}

std::string gen_label(const ConvexityVerdict& v) {
  return std::string(std::visit([](auto x) { return to_string(x); }, v.label));
}

std::string verdict_line(const ConvexityVerdict& v, const AngleProfile& p) {
  std::ostringstream s;
  s << (v.is_convex() ? "convex (" : "non-convex (") << gen_label(v) << "), w=" << p.winding();
  if (v.distinguished_index) {
    const auto c = v.condition();
    const bool negative = c ? *c == Condition::III
                            : v.alternative() == Alternative::A3;
    s << ", " << (negative ? "negative" : "positive") << " index " << *v.distinguished_index;
  }
  return s.str();
}

std::string thetas_line(const AngleProfile& p) {
  std::string s = "thetas: [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += io::format_double(p[i]);
  }
  return s + "]";
}

std::string witness_line(const Certificate& c, std::size_t n) {
  const Witness& w = c.witness;
  const Reduction& r = c.reduction;
  std::ostringstream s;
  s << "witness: edge (" << r.original_index(w.i, n) << ", "
    << r.original_index(next_index(w.i, n), n) << ") separates vertices "
    << r.original_index(w.j, n) << " and " << r.original_index(w.k, n);
  return s.str();
}

void print_certificate(const Certificate& c, std::size_t n, std::ostream& out) {
  const Reduction& r = c.reduction;
  const Witness& w = c.witness;
  out << "reduction: shift=" << r.shift << " reversed=" << (r.reversed ? "yes" : "no");
  if (r.exhaustive) out << " (exhaustive search)";
  out << "\npattern: " << to_string(r.pattern.kind);
  if (r.pattern.m) out << " (m=" << *r.pattern.m << ")";
  out << "\n" << thetas_line(c.transformed) << " (relabelled)\n"
      << "witness: i=" << w.i << " j=" << w.j << " k=" << w.k << " p=" << w.p
      << " q=" << w.q << " variant=" << to_string(w.variant) << "\n"
      << witness_line(c, n) << " (original labels)\n"
      << "Delta(j,i,i+1) = " << io::format_double(c.check.delta_j) << "\n"
      << "Delta(k,i,i+1) = " << io::format_double(c.check.delta_k) << "\n"
      << "product = " << io::format_double(c.check.delta_j * c.check.delta_k)
      << (c.check.negative ? " < 0" : " (not negative)") << "\n";
}

void print_sign_table(const CanonicalPolygon& poly, const Tolerance& tol, std::ostream& out) {
  const DeterminantScan scan = scan_determinants(poly, tol);
  const std::size_t n = poly.size();
  out << "edge        +     -     0   uniform\n";
  for (const EdgeSigns& e : scan.edges) {
    char edge[48], line[96];
    std::snprintf(edge, sizeof edge, "(%zu,%zu)", e.edge, next_index(e.edge, n));
    std::snprintf(line, sizeof line, "%-10s %5zu %5zu %5zu   %s\n", edge, e.summary.positive,
                  e.summary.negative, e.summary.marginal, e.uniform() ? "yes" : "no");
    out << line;
  }
  out << "min |Delta| = " << io::format_double(scan.min_abs) << "\n";
}

int input_error(const Error& e, std::ostream& err) {
  err << "error: " << describe(e) << "\n";
  return kExitInputError;
}

}  // namespace

std::string describe(const Error& e) {
  std::ostringstream s;
  switch (e.code()) {
    case ErrorCode::NotConcyclic:
      s << "polygon is not cyclic (all vertices must lie on one circle)";
      if (e.index) s << ": vertex " << *e.index;
      if (e.deviation) s << " is off the circle by " << *e.deviation;
      return s.str();
    case ErrorCode::CollinearSeed:
      return "polygon is not cyclic: the first three vertices are collinear, so no circle "
             "passes through them";
    case ErrorCode::DuplicateVertices:
    case ErrorCode::DegenerateProfile:
      s << "polygon is not ordinary (vertices must be pairwise distinct)";
      if (e.index_pair) s << ": vertices " << e.index_pair->first << " and " << e.index_pair->second << " coincide";
      return s.str();
    case ErrorCode::ParseError:
      return std::string("cannot parse input: ") + e.what();
    case ErrorCode::NonIntegerWinding:
    case ErrorCode::InvalidProfile:
      return std::string("invalid central-angle profile (each angle in (-pi, pi], sum a "
                         "multiple of 2pi): ") + e.what();
    default:
      return std::string(to_string(e.code())) + ": " + e.what();
  }
}

int cmd_classify(const InputOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Loaded in = load(opts);
    const ConvexityVerdict v = classify_by_angles(in.profile);
    out << verdict_line(v, in.profile) << "\n" << thetas_line(in.profile) << "\n";
    std::optional<Certificate> cert;
    if (!v.is_convex()) {
      try {
        cert = certify_nonconvex(in.profile, opts.tol);
        out << witness_line(*cert, in.profile.size()) << "\n";
      } catch (const Error& e) {
        out << "witness: none found (" << describe(e) << ")\n";
      }
    }
    if (opts.explain) {
      if (in.poly) {
        print_sign_table(*in.poly, opts.tol, out);
      } else {
        out << "sign table: unavailable, profile does not map to distinct vertices\n";
      }
      if (cert) print_certificate(*cert, in.profile.size(), out);
    }
    if (opts.svg) {
      if (!in.poly) throw Error(ErrorCode::DegenerateProfile, "cannot draw coincident vertices");
      io::write_text_file(*opts.svg, io::render_svg(*in.poly, verdict_line(v, in.profile)));
    }
    return v.is_convex() ? kExitConvex : kExitNonConvex;
  } catch (const Error& e) {
    return input_error(e, err);
  }
}

int cmd_witness(const InputOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Loaded in = load(opts);
    const ConvexityVerdict v = classify_by_angles(in.profile);
    out << verdict_line(v, in.profile) << "\n";
    if (v.is_convex()) {
      out << "no witness: polygon is convex\n";
      return kExitNonConvex;
    }
    print_certificate(certify_nonconvex(in.profile, opts.tol), in.profile.size(), out);
    if (opts.svg && in.poly) {
      io::write_text_file(*opts.svg, io::render_svg(*in.poly, verdict_line(v, in.profile)));
    }
    return 0;
  } catch (const Error& e) {
    return input_error(e, err);
  }
}

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const fuzz::Summary s = fuzz::run(opts.config);
    out << fuzz::format_summary(s);
    if (s.clean()) return 0;
    io::write_text_file(opts.repro, fuzz::case_to_json(s.failures.front()));
    out << "first failure (seed " << s.failures.front().seed << "): " << s.failures.front().detail
        << "\nreproduction written to " << opts.repro.string() << "\n";
    return kExitFuzzFailure;
  } catch (const Error& e) {
    err << "error: " << describe(e) << "\n";
    return kExitInputError;
  }
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    out << bench::format_table(bench::run(opts.config), opts.format);
    return 0;
  } catch (const Error& e) {
    err << "error: " << describe(e) << "\n";
    return kExitInputError;
  }
}

}  // namespace cyclogon::cli
