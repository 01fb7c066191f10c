#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cubecert/certify.hpp"
#include "cubecert/errors.hpp"
#include "cubecert/json_io.hpp"
#include "cubecert/rng.hpp"

namespace {

using namespace cubecert;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  out << content;
}

HypothesisMode parse_mode(const std::string& mode) {
  if (mode == "vaaler") return HypothesisMode::vaaler;
  if (mode == "rogers") return HypothesisMode::rogers;
  throw ParseError("unknown mode: " + mode);
}

int run_check(const std::string& input, const std::string& mode_name, const std::string& format,
              const std::string& out_path) {
  Polytope p = load_input(input);
  HypothesisReport report = check_distance_hypothesis(p, parse_mode(mode_name));
  if (format == "json") {
    write_output(out_path, hypothesis_to_json(report).dump(2));
  } else {
    std::ostringstream text;
    text << "distance hypothesis (" << to_string(report.mode) << ") on " << p.dim()
         << "-polytope with " << p.faces().size() << " faces\n";
    double worst = std::numeric_limits<double>::infinity();
    for (const HypothesisEntry& e : report.entries) worst = std::min(worst, e.margin);
    text << "  faces checked: " << report.entries.size() << "\n";
    text << "  worst margin:  " << fmt(worst) << "\n";
    text << "  verdict:       " << (report.pass ? "pass" : "fail") << "\n";
    write_output(out_path, text.str());
  }
  return report.pass ? kExitPass : kExitFail;
}

int run_certify(const std::string& kind, const std::string& input, const std::string& format,
                const std::string& out_path, long samples, std::uint64_t seed) {
  Polytope p = load_input(input);
  Certificate cert;
  bool experimental = false;
  if (kind == "volume") {
    cert = certify_volume(p);
  } else if (kind == "surface") {
    if (p.dim() >= 4) {
      cert = surface_experiment(p, samples, seed);
      experimental = true;
    } else {
      cert = certify_surface(p);
    }
  } else {
    throw ParseError("unknown certificate kind: " + kind);
  }

  if (format == "json") {
    write_output(out_path, certificate_to_json(cert).dump(2));
  } else {
    std::ostringstream text;
    text << kind << " certificate, n = " << cert.dim
         << (experimental ? " (experimental, no certificate semantics)" : "") << "\n";
    text << "  total:      " << fmt(cert.total) << "\n";
    text << "  bound:      " << fmt(cert.claimed_bound) << "\n";
    text << "  min margin: " << fmt(cert.min_margin()) << "\n";
    text << "  omega sum:  " << fmt(cert.omega_sum) << "\n";
    if (!experimental) text << "  verdict:    " << (cert.pass ? "pass" : "fail") << "\n";
    write_output(out_path, text.str());
  }
  if (experimental) return kExitPass;
  return cert.pass ? kExitPass : kExitFail;
}

int run_section(const std::string& input, const std::vector<int>& random_dims, std::uint64_t seed,
                const std::string& out_path) {
  Polytope p = [&] {
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw ParseError("cannot open input file: " + input);
      Json j;
      in >> j;
      return section_from_json(j);
    }
    if (random_dims.size() != 2) throw ParseError("--random needs n N");
    int n = random_dims[0];
    int big_n = random_dims[1];
    CounterRng rng(seed);
    Matrix basis(n, big_n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < big_n; ++j) basis(i, j) = rng.normal();
    }
    return Polytope::cube_section(big_n, basis);
  }();
  Json out = polytope_to_json(p);
  out["volume"] = p.volume();
  out["surface_area"] = p.surface_area();
  write_output(out_path, out.dump(2));
  return kExitPass;
}

int run_subdivide(const std::string& input, const std::string& out_path,
                  const std::string& off_path, int samples, std::uint64_t seed) {
  Polytope p = load_input(input);
  std::vector<SimplexTriple> triples = build_simplices(p);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << subdivision_to_json(triples).dump(2);
  }
  if (!off_path.empty()) {
    std::ofstream out(off_path);
    out << subdivision_to_off(triples);
  }
  CoveringReport report = covering_check(p, triples, samples, seed);
  std::cout << "subdivision of " << p.dim() << "-polytope: " << triples.size() << " simplices\n";
  std::cout << "  volume gap:    " << fmt(report.volume_gap) << "\n";
  std::cout << "  tested points: " << report.tested_points << "\n";
  std::cout << "  uncovered:     " << report.uncovered_hits << "\n";
  std::cout << "  overlaps:      " << report.max_overlap_hits << "\n";
  bool ok = report.pass(1e-8 * p.volume());
  std::cout << "  verdict:       " << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitPass : kExitFail;
}

int run_curve(double c, double t_min, double t_max, int steps, const std::string& out_path) {
  if (!(c > 0.0) || !(c < M_PI / 2) || !(t_min > 0.0) || !(t_max < M_PI / 2) || t_min > t_max)
    throw ParseError("curve range must lie inside (0, pi/2)");
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,area_integral,area_girard,ratio\n";
  bool increasing = true;
  double previous = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    double t = steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
    SphericalTriangleSpec spec{t, c};
    double integral = spherical_triangle_area_integral(spec);
    double girard = spherical_triangle_area_girard(spec);
    double ratio = integral / std::sin(t);
    csv << t << "," << integral << "," << girard << "," << ratio << "\n";
    if (ratio <= previous - 1e-10) increasing = false;
    previous = ratio;
  }
  csv << "# monotonicity: " << (increasing ? "pass" : "fail") << "\n";
  write_output(out_path, csv.str());
  return increasing ? kExitPass : kExitFail;
}

int run_lemma_obtuse(int samples, std::uint64_t seed) {
  CounterRng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < samples; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform() * 6);
    int k = 1 + static_cast<int>(rng.uniform() * n);
    std::vector<Vector> us;
    for (int i = 0; i <= k; ++i) {
      Vector u(n);
      for (int j = 0; j < n; ++j) u[j] = rng.normal();
      us.push_back(u.normalized());
    }
    ObtusePairResult result = obtuse_pair_bound(us);
    worst = std::min(worst, result.max_dot + 1.0 / k);
    if (!result.pass) {
      std::cout << "violation: max dot " << fmt(result.max_dot) << " below -1/" << k << "\n";
      return kExitFail;
    }
  }
  std::cout << "obtuse-pair bound held on " << samples << " random families (worst slack "
            << fmt(worst) << ")\n";
  return kExitPass;
}

int run_lemma_contraction(int samples, std::uint64_t seed) {
  CounterRng rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform() * 5);
    Orthoscheme c, b;
    c.edge_lengths.resize(n);
    b.edge_lengths.resize(n);
    for (int i = 0; i < n; ++i) {
      c.edge_lengths[i] = rng.uniform(0.2, 2.0);
      b.edge_lengths[i] = c.edge_lengths[i] * rng.uniform(1.0, 2.0);
    }
    ContractionReport report = orthoscheme_contraction_check(b, c, 100, seed + trial);
    if (!report.pass()) {
      std::cout << "contraction violated at trial " << trial << " (max excess "
                << fmt(report.max_excess) << ")\n";
      return kExitFail;
    }
  }
  std::cout << "orthoscheme contraction held on " << samples << " random pairs\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates for volume and surface lower bounds of cube sections"};
  app.require_subcommand(1);

  std::string input, out_path, off_path;
  std::string mode = "vaaler";
  std::string format = "text";
  std::string kind;
  std::uint64_t seed = 0;
  int samples = 10000;
  std::vector<int> random_dims;
  double c = M_PI / 4, t_min = 0.1, t_max = 1.4;
  int steps = 100;

  CLI::App* check = app.add_subcommand("check", "check the face-distance hypothesis");
  check->add_option("input", input)->required();
  check->add_option("--mode", mode)->check(CLI::IsMember({"vaaler", "rogers"}));
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("--out", out_path);

  CLI::App* certify = app.add_subcommand("certify", "produce a volume or surface certificate");
  certify->add_option("kind", kind)->required()->check(CLI::IsMember({"volume", "surface"}));
  certify->add_option("input", input)->required();
  certify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  certify->add_option("--out", out_path);
  certify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  certify->add_option("--seed", seed);

  CLI::App* section = app.add_subcommand("section", "build a cube-section polytope");
  section->add_option("input", input);
  section->add_option("--random", random_dims)->expected(2);
  section->add_option("--seed", seed);
  section->add_option("--out", out_path);

  CLI::App* subdivide = app.add_subcommand("subdivide", "export the flag subdivision");
  subdivide->add_option("input", input)->required();
  subdivide->add_option("--out", out_path);
  subdivide->add_option("--off", off_path);
  subdivide->add_option("--samples", samples)->check(CLI::PositiveNumber);
  subdivide->add_option("--seed", seed);

  CLI::App* curve = app.add_subcommand("curve", "spherical-triangle area/sin t curve as CSV");
  curve->add_option("--c", c);
  curve->add_option("--tmin", t_min);
  curve->add_option("--tmax", t_max);
  curve->add_option("--steps", steps)->check(CLI::PositiveNumber);
  curve->add_option("--out", out_path);

  CLI::App* lemma = app.add_subcommand("lemma", "randomized lemma property checks");
  lemma->add_option("which", kind)->required()->check(CLI::IsMember({"obtuse", "contraction"}));
  lemma->add_option("--samples", samples)->check(CLI::PositiveNumber);
  lemma->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(input, mode, format, out_path);
    if (certify->parsed()) return run_certify(kind, input, format, out_path, samples, seed);
    if (section->parsed()) return run_section(input, random_dims, seed, out_path);
    if (subdivide->parsed()) return run_subdivide(input, out_path, off_path, samples, seed);
    if (curve->parsed()) return run_curve(c, t_min, t_max, steps, out_path);
    if (lemma->parsed()) {
      return kind == "obtuse" ? run_lemma_obtuse(samples, seed) : run_lemma_contraction(samples, seed);
    }
  } catch (const UnsupportedDimensionError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const HypothesisFailedError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
