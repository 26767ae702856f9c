#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schmidt/schmidt.hpp"

using namespace schmidt;

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_failed = 3;

struct Common {
  std::optional<std::int64_t> delta_pos, delta_flag;

  Discriminant disc() const {
    if (delta_pos && delta_flag && *delta_pos != *delta_flag)
      throw error(errc::parse_error, "positional delta and --delta disagree");
    const auto d = delta_pos ? delta_pos : delta_flag;
    if (!d) throw error(errc::parse_error, "a discriminant is required");
    return Discriminant::make(*d);
  }
};

void add_delta(CLI::App* cmd, Common& c) {
  cmd->add_option("DELTA", c.delta_pos, "Fundamental discriminant (negative)");
  cmd->add_option("--delta", c.delta_flag, "Fundamental discriminant (negative)");
}

struct BoundArgs {
  std::int64_t bound = 0;
  std::optional<std::string> absolute;

  Integer reduced(Discriminant d) const {
    if (absolute) return reduced_from_absolute(d, parse_rational(*absolute));
    return bound;
  }
};

void add_bound(CLI::App* cmd, BoundArgs& b, std::int64_t def) {
  b.bound = def;
  cmd->add_option("--bound", b.bound, "Bound on the reduced curvature")->capture_default_str();
  cmd->add_option("--absolute-bound", b.absolute, "Bound on the absolute curvature instead");
}

/// Writes to the named file, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot open " + path);
  out << text;
  if (!out) throw error(errc::io_error, "cannot write " + path);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tau_text(Discriminant d) {
  std::ostringstream os;
  if (d.one_mod_four())
    os << "(1+sqrt(" << d.value() << "))/2, tau^2 = tau - " << d.norm_tau();
  else
    os << "sqrt(" << d.value() << ")/2, tau^2 = " << -d.norm_tau();
  return os.str();
}

int cmd_info(const Common& c) {
  const Discriminant d = c.disc();
  std::cout << "delta: " << d.value() << "\n";
  std::cout << "tau: " << tau_text(d) << "\n";
  std::cout << "units:";
  for (const auto& u : units(d)) std::cout << " " << u;
  std::cout << "\n";
  std::cout << "Euclidean: " << yes_no(d.is_euclidean()) << "\n";
  std::cout << "h_K = " << class_number_hK(d) << "\n";
  if (const auto g = ghost_circle(d))
    std::cout << "ghost: B^2 = " << g->b_squared.str() << " (B = " << std::setprecision(9) << g->curvature() << ")\n";
  else
    std::cout << "ghost: none\n";
  std::cout << "u = " << unit_index(d) << "\n";
  return 0;
}

int cmd_count(const Common& c, std::int64_t fmax) {
  const Discriminant d = c.disc();
  if (fmax < 1) throw error(errc::parse_error, "fmax must be at least 1");
  const std::int64_t hk = class_number_hK(d);
  std::cout << "f\tresidues\th_f\th_f/h_K\t2h_f\t2h_f/h_K\tcount\tverdict\n";
  int status = 0;
  for (std::int64_t f = 1; f <= fmax; ++f) {
    const auto residues = enumerate_residues(d, f).size();
    const Integer hf = class_number_hf(d, f);
    const Integer count = parallelogram_circles(d, f).size();
    std::string verdict;
    if (d.value() == -4 && f == 1 && count == 1)
      verdict = "1 (f=1 exception)";
    else if (count == 2 * hf)
      verdict = "2h_f";
    else if (count == 2 * hf / hk)
      verdict = "2h_f/h_K";
    else
      verdict = "neither";
    std::cout << f << "\t" << residues << "\t" << hf << "\t" << hf / hk << "\t" << 2 * hf << "\t" << 2 * hf / hk
              << "\t" << count << "\t" << verdict << "\n";
    if (verdict == "2h_f/h_K")
      std::cerr << "note: delta = " << d.value() << ", f = " << f << ": count " << count << " differs from 2h_f = "
                << 2 * hf << " and equals 2h_f/h_K\n";
    if (verdict == "neither") {
      std::cerr << "MISMATCH: delta = " << d.value() << ", f = " << f << ": count " << count
                << " matches neither 2h_f = " << 2 * hf << " nor 2h_f/h_K = " << 2 * hf / hk << "\n";
      status = exit_failed;
    }
  }
  return status;
}

struct RenderArgs {
  Common common;
  BoundArgs bound;
  std::string window = "fund";
  bool ghost = false;
  bool lines = false;
  bool oriented = false;
  double width = 1000;
  std::string out;
};

CircleSet enumerate_for(Discriminant d, const Window& w, const Integer& max_curv, bool lines, bool oriented) {
  if (max_curv < 1 && !lines) return {};
  return enumerate_arrangement(d, w, {max_curv, lines, oriented});
}

int cmd_render(const RenderArgs& a) {
  const Discriminant d = a.common.disc();
  const Window w = parse_window(d, a.window);
  const Integer max_curv = a.bound.reduced(d);
  const CircleSet set = enumerate_for(d, w, max_curv, a.lines, a.oriented);
  std::optional<GhostCircle> ghost;
  if (a.ghost) ghost = require_ghost(d);
  RenderOptions opt;
  opt.width_px = a.width;
  emit(a.out, render_svg(set, w, ghost, opt));
  std::cerr << "rendered " << set.size() << " circles (delta = " << d.value() << ", reduced bound " << max_curv << ")\n";
  return 0;
}

struct EnumerateArgs {
  Common common;
  BoundArgs bound;
  std::string window = "fund";
  std::string format = "table";
  bool lines = false;
  bool oriented = false;
  std::string out;
};

std::string table_text(const CircleSet& set) {
  std::ostringstream os;
  os << "curv\tcocurv\tzeta\tcentre_x\tcentre_y\tradius\n";
  os << std::setprecision(9);
  for (const auto& [key, p] : set) {
    const OrientedCircle& c = p.circle;
    os << c.curv << "\t" << c.cocurv << "\t" << c.zeta << "\t";
    if (c.is_line()) {
      os << "-\t-\tinf\n";
    } else {
      const FloatCircle fc = float_shadow(c);
      os << fc.x << "\t" << fc.y << "\t" << fc.r << "\n";
    }
  }
  return os.str();
}

int cmd_enumerate(const EnumerateArgs& a) {
  const Discriminant d = a.common.disc();
  const Window w = parse_window(d, a.window);
  const CircleSet set = enumerate_for(d, w, a.bound.reduced(d), a.lines, a.oriented);
  std::ostringstream os;
  if (a.format == "jsonl")
    write_jsonl(os, set);
  else if (a.format == "edges")
    write_edges(os, tangency_graph(set));
  else if (a.format == "svg")
    os << render_svg(set, w, std::nullopt);
  else
    os << table_text(set);
  emit(a.out, os.str());
  return 0;
}

int cmd_ghost_check(const Common& c, const BoundArgs& b, const std::string& window) {
  const Discriminant d = c.disc();
  const GhostCircle g = require_ghost(d);
  const Window w = parse_window(d, window);
  const CircleSet set = enumerate_for(d, w, b.reduced(d), true, false);
  double min_abs = std::numeric_limits<double>::infinity();
  std::optional<OrientedCircle> closest;
  for (const auto& [key, p] : set) {
    const GhostCertificate cert = ghost_separation(p.circle, g);
    if (std::abs(cert.product) < min_abs) {
      min_abs = std::abs(cert.product);
      closest = p.circle;
    }
  }
  std::cout << "ghost: B^2 = " << g.b_squared.str() << "\n";
  std::cout << "all " << set.size() << " circles separated\n";
  if (closest) std::cout << "min |<G,C>| = " << std::setprecision(9) << min_abs << " at " << *closest << "\n";
  return 0;
}

int cmd_path(const Common& c, const std::string& m1_text, const std::string& m2_text) {
  const Discriminant d = c.disc();
  const Matrix2 m1 = parse_matrix(d, m1_text), m2 = parse_matrix(d, m2_text);
  const auto path = tangency_path(m1, m2);
  for (const auto& circle : path) std::cout << circle << "\n";
  const std::size_t n = path.size();
  std::cout << "verified: " << n << (n == 1 ? " circle, " : " circles, ") << n - 1
            << (n == 2 ? " tangency\n" : " tangencies\n");
  return 0;
}

int exit_code(errc e) {
  switch (e) {
    case errc::certificate_failure:
    case errc::search_exhausted:
    case errc::non_integer_result:
      return exit_failed;
    default:
      return exit_invalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt arrangements of imaginary quadratic fields"};
  app.require_subcommand(1);

  Common info_args;
  auto* info = app.add_subcommand("info", "Ring data, class number and ghost circle of a field");
  add_delta(info, info_args);

  Common count_args;
  std::int64_t fmax = 10;
  auto* count = app.add_subcommand("count", "Circles per fundamental parallelogram against class numbers");
  add_delta(count, count_args);
  count->add_option("fmax", fmax, "Largest reduced curvature")->capture_default_str();

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "SVG picture of the arrangement in a window");
  add_delta(render, render_args.common);
  add_bound(render, render_args.bound, 20);
  render->add_option("--window", render_args.window, "x0,x1,y0,y1, fund or ghost")->capture_default_str();
  render->add_flag("--ghost", render_args.ghost, "Overlay the ghost circle");
  render->add_flag("--include-lines", render_args.lines, "Draw the lines of the arrangement");
  render->add_flag("--oriented", render_args.oriented, "Keep both orientations");
  render->add_option("--width", render_args.width, "Image width in pixels")->capture_default_str();
  render->add_option("-o,--output", render_args.out, "Output file (default stdout)");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List the circles meeting a window");
  add_delta(enumerate, enum_args.common);
  add_bound(enumerate, enum_args.bound, 10);
  enumerate->add_option("--window", enum_args.window, "x0,x1,y0,y1, fund or ghost")->capture_default_str();
  enumerate->add_option("--format", enum_args.format, "table, jsonl, edges or svg")
      ->check(CLI::IsMember({"table", "jsonl", "edges", "svg"}))
      ->capture_default_str();
  enumerate->add_flag("--include-lines", enum_args.lines, "Include the lines of the arrangement");
  enumerate->add_flag("--oriented", enum_args.oriented, "Keep both orientations");
  enumerate->add_option("-o,--output", enum_args.out, "Output file (default stdout)");

  Common ghost_args;
  BoundArgs ghost_bound;
  std::string ghost_window = "ghost";
  auto* ghost = app.add_subcommand("ghost-check", "Certify that no circle meets the ghost circle");
  add_delta(ghost, ghost_args);
  add_bound(ghost, ghost_bound, 30);
  ghost->add_option("--window", ghost_window, "x0,x1,y0,y1, fund or ghost")->capture_default_str();

  Common path_args;
  std::string m1, m2;
  auto* path = app.add_subcommand("path", "Verified tangency path between circle(M1) and circle(M2)");
  add_delta(path, path_args);
  path->add_option("m1", m1, "Matrix [[a, b],[c, d]]")->required();
  path->add_option("m2", m2, "Matrix [[a, b],[c, d]]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_invalid;
  }

  try {
    if (*info) return cmd_info(info_args);
    if (*count) return cmd_count(count_args, fmax);
    if (*render) return cmd_render(render_args);
    if (*enumerate) return cmd_enumerate(enum_args);
    if (*ghost) return cmd_ghost_check(ghost_args, ghost_bound, ghost_window);
    if (*path) return cmd_path(path_args, m1, m2);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return 0;
}
