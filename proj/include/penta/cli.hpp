#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage error, 3 I/O or file-format error, 4 arithmetic overflow,
// 5 internal consistency failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "penta/io.hpp"
#include "penta/model_set.hpp"
#include "penta/svg.hpp"
#include "penta/verify.hpp"
#include "penta/version.hpp"

namespace penta {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitOverflow = 4,
  kExitInternal = 5,
};

struct CliConfig {
  std::string subcommand;
  std::string radius;
  std::string radius_sq;
  std::string window_sq = "1";
  std::string format = "jsonl";
  std::string out;
  std::string in;
  std::vector<std::string> checks{"all"};
  bool highlight_roots = false;
  bool color_classes = false;
  int canvas = 1000;
  double dot_radius = 3.0;
  double highlight_radius = 10.0;
  unsigned threads = 1;
};

namespace detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rational resolve_radius_sq(const CliConfig& cfg) {
  if (!cfg.radius.empty()) {
    const Rational r = Rational::parse(cfg.radius);
    if (r < Rational(0)) throw UsageError("--radius must be non-negative");
    return r * r;
  }
  if (!cfg.radius_sq.empty()) {
    const Rational r2 = Rational::parse(cfg.radius_sq);
    if (r2 < Rational(0)) throw UsageError("--radius-sq must be non-negative");
    return r2;
  }
  throw UsageError("one of --radius, --radius-sq is required");
}

inline Window resolve_window(const CliConfig& cfg) {
  const Rational w = Rational::parse(cfg.window_sq);
  if (w <= Rational(0)) throw UsageError("--window-sq must be positive");
  return Window(w);
}

inline Snapshot load_or_enumerate(const CliConfig& cfg) {
  if (!cfg.in.empty()) return read_snapshot_file(cfg.in);
  return enumerate(resolve_radius_sq(cfg), resolve_window(cfg), {EnumStrategy::fincke_pohst, cfg.threads});
}

inline void emit(const CliConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty()) {
    body(out);
    out.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw io_error("cannot open " + cfg.out + " for writing");
  body(file);
  file.flush();
  if (!file) throw io_error("failed writing " + cfg.out);
}

inline Format resolve_format(const CliConfig& cfg) {
  const auto f = parse_format(cfg.format);
  if (!f) throw UsageError("unsupported format '" + cfg.format + "'");
  return *f;
}

inline std::vector<Check> resolve_checks(const CliConfig& cfg) {
  std::vector<Check> checks;
  for (const auto& name : cfg.checks) {
    if (name == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
    const auto c = parse_check(name);
    if (!c) throw UsageError("unknown check '" + name + "'");
    checks.push_back(*c);
  }
  return checks;
}

inline nlohmann::json stats_json(const Snapshot& snap) {
  const Stats s = stats(snap);
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"parameters", {{"radius_sq", snap.radius_sq.str()}, {"window_sq", snap.window.w().str()}}},
          {"count", s.count},
          {"classes",
           {{"short", s.classes.short_count},
            {"long", s.classes.long_count},
            {"other", s.classes.other_count},
            {"unknown", s.classes.unknown_count}}},
          {"density", opt(s.density)},
          {"short_long_ratio", opt(s.short_long_ratio)}};
}

inline int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& cmd = cfg.subcommand;
  if (cmd == "generate" || cmd == "analyze") {
    const Format format = resolve_format(cfg);
    Snapshot snap = load_or_enumerate(cfg);
    if (cmd == "analyze") snap = analyze(std::move(snap), {cfg.threads});
    err << "penta " << cmd << ": radius_sq=" << snap.radius_sq.str() << " window_sq=" << snap.window.w().str()
        << " points=" << snap.points.size() << '\n';
    emit(cfg, out, [&](std::ostream& os) { write_snapshot(snap, format, os); });
    return kExitOk;
  }
  if (cmd == "verify") {
    const Rational r2 = resolve_radius_sq(cfg);
    const Window window = resolve_window(cfg);
    const auto reports = verify_all(r2, window, {resolve_checks(cfg), cfg.threads});
    const bool pass = all_pass(reports);
    err << "penta verify: radius_sq=" << r2.str() << " window_sq=" << window.w().str()
        << (pass ? " PASS" : " FAIL") << '\n';
    nlohmann::json doc{{"parameters", {{"radius_sq", r2.str()}, {"window_sq", window.w().str()}}},
                       {"pass", pass},
                       {"version", std::string(kVersion)},
                       {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    emit(cfg, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
    return pass ? kExitOk : kExitCheckFailed;
  }
  if (cmd == "stats") {
    Snapshot snap = load_or_enumerate(cfg);
    if (cfg.in.empty()) snap = analyze(std::move(snap), {cfg.threads});
    err << "penta stats: radius_sq=" << snap.radius_sq.str() << " window_sq=" << snap.window.w().str() << '\n';
    emit(cfg, out, [&](std::ostream& os) { os << stats_json(snap).dump(2) << '\n'; });
    return kExitOk;
  }
  // render
  Snapshot snap = load_or_enumerate(cfg);
  if (cfg.color_classes && cfg.in.empty()) snap = analyze(std::move(snap), {cfg.threads});
  RenderOptions opts;
  opts.canvas = cfg.canvas;
  opts.dot_radius = cfg.dot_radius;
  opts.highlight_radius = cfg.highlight_radius;
  opts.highlight_roots = cfg.highlight_roots;
  opts.color_classes = cfg.color_classes;
  err << "penta render: radius_sq=" << snap.radius_sq.str() << " window_sq=" << snap.window.w().str()
      << " canvas=" << opts.canvas << '\n';
  emit(cfg, out, [&](std::ostream& os) { os << render_svg(snap, opts); });
  return kExitOk;
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and runs one subcommand.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Exact enumeration and verification of the cyclotomic model set S in Z[zeta_5]", "penta"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_region = [&](CLI::App* sub, bool allow_input) {
    auto* r = sub->add_option("--radius", cfg.radius, "Physical radius R (rational, e.g. 5 or 5/2)");
    auto* r2 = sub->add_option("--radius-sq", cfg.radius_sq, "Squared physical radius R^2 (rational)");
    r->excludes(r2);
    sub->add_option("--window-sq", cfg.window_sq, "Squared window radius w (rational)")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
    sub->add_option("-o,--out", cfg.out, "Output path (default: stdout)");
    if (allow_input) {
      auto* in = sub->add_option("--in", cfg.in, "Read a snapshot file instead of enumerating");
      in->excludes(r)->excludes(r2);
    }
  };

  auto* gen = app.add_subcommand("generate", "Enumerate the points of S within the radius");
  add_region(gen, false);
  gen->add_option("--format", cfg.format, "jsonl or csv")->capture_default_str();

  auto* ana = app.add_subcommand("analyze", "Enumerate and classify nearest-neighbour distances");
  add_region(ana, true);
  ana->add_option("--format", cfg.format, "jsonl or csv")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run the exact structural checks; exit 1 on any violation");
  add_region(ver, false);
  ver->add_option("--check", cfg.checks,
                  "all | separation | rotation | unit-lemma | two-distance | step-existence (repeatable)")
      ->capture_default_str();

  auto* st = app.add_subcommand("stats", "Counts, density and short:long ratio as JSON");
  add_region(st, true);

  auto* ren = app.add_subcommand("render", "Render the points as SVG");
  add_region(ren, true);
  ren->add_flag("--highlight-roots", cfg.highlight_roots, "Ring 0 and the fifth roots of unity");
  ren->add_flag("--color-classes", cfg.color_classes, "Colour points by distance class");
  ren->add_option("--canvas", cfg.canvas, "Canvas size in pixels")->check(CLI::PositiveNumber)->capture_default_str();
  ren->add_option("--dot-radius", cfg.dot_radius, "Dot radius")->check(CLI::PositiveNumber)->capture_default_str();
  ren->add_option("--highlight-radius", cfg.highlight_radius, "Highlight ring radius")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    return detail::dispatch(cfg, out, err);
  } catch (const overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace penta
