#pragma once

// Exact checks of the structural properties of S over a finite snapshot.
// Accept/reject decisions never use floating point; floats only appear in
// report annotations.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "penta/model_set.hpp"
#include "penta/units.hpp"

namespace penta {

struct Violation {
  std::vector<CycInt> points;
  std::optional<GoldenInt> value;  // offending exact squared distance, if any
  std::optional<std::int64_t> norm;
  std::string detail;
};

struct VerificationReport {
  /// Only the first kMaxListed violations are kept; violation_count has the total.
  static constexpr std::size_t kMaxListed = 64;

  std::string check_name;
  bool pass = true;
  bool skipped = false;
  std::size_t tested_count = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  Rational radius_sq{0};
  Rational window_sq{1};
  nlohmann::json notes = nlohmann::json::object();

  void add(Violation v) {
    ++violation_count;
    pass = false;
    if (violations.size() < kMaxListed) violations.push_back(std::move(v));
  }
};

namespace detail {

inline VerificationReport start_report(std::string name, const Snapshot& snap) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.radius_sq = snap.radius_sq;
  r.window_sq = snap.window.w();
  return r;
}

inline void require_unit_window(const Snapshot& snap, const char* check) {
  if (snap.window.w() != Rational(1))
    throw std::invalid_argument(std::string(check) + " requires the unit window (w = 1)");
}

inline nlohmann::json golden_json(const GoldenInt& g) { return nlohmann::json::array({g.p, g.q}); }

inline Rational reciprocal(const Rational& r) { return {r.den(), r.num()}; }

}  // namespace detail

/// Uniform discreteness: every pair is at squared distance at least
/// 1 / (4 diam^2) = 1 / (16 w). Whether the stronger 1 / diam^2 = 1 / (4 w)
/// also holds is recorded in the notes; it does not affect `pass`.
inline VerificationReport verify_separation(const Snapshot& snap) {
  auto report = detail::start_report("separation", snap);
  const Rational weak = detail::reciprocal(snap.window.diam_sq() * Rational(4));
  const Rational strong = detail::reciprocal(snap.window.diam_sq());
  std::optional<GoldenInt> min_sq;
  std::size_t strong_failures = 0;
  const auto& pts = snap.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      ++report.tested_count;
      const GoldenInt d = abs_sq(pts[i].z - pts[j].z, Embedding::physical);
      if (!min_sq || d < *min_sq) min_sq = d;
      if (golden_cmp(d, weak) == std::strong_ordering::less)
        report.add({{pts[i].z, pts[j].z}, d, std::nullopt,
                    "squared distance below 1/(16w) = " + weak.str()});
      if (golden_cmp(d, strong) == std::strong_ordering::less) ++strong_failures;
    }
  report.notes["bound_sq"] = weak.str();
  report.notes["strong_bound_sq"] = strong.str();
  report.notes["strong_bound_holds"] = strong_failures == 0;
  report.notes["strong_bound_violations"] = strong_failures;
  if (min_sq) {
    report.notes["observed_min_sq"] = detail::golden_json(*min_sq);
    report.notes["observed_min_sq_approx"] = min_sq->to_double();
  } else {
    report.notes["observed_min_sq"] = nullptr;
  }
  return report;
}

/// Closure of the snapshot under multiplication by each tenth root of unity.
inline VerificationReport verify_rotation(const Snapshot& snap) {
  auto report = detail::start_report("rotation", snap);
  std::unordered_set<CycInt> present;
  for (const auto& p : snap.points) present.insert(p.z);
  for (const auto& p : snap.points)
    for (long j = 0; j < 10; ++j) {
      ++report.tested_count;
      const CycInt image = CycInt::tenth_root(j) * p.z;
      if (!present.contains(image))
        report.add({{p.z, image}, std::nullopt, std::nullopt,
                    "rotation by exp(pi i " + std::to_string(j) + "/5) leaves the snapshot"});
    }
  return report;
}

/// Pairs closer than sqrt(5)/2 differ by a unit, and no difference has norm
/// 2, 3 or 4.
inline VerificationReport verify_unit_lemma(const Snapshot& snap) {
  detail::require_unit_window(snap, "verify_unit_lemma");
  auto report = detail::start_report("unit-lemma", snap);
  const Rational close(5, 4);
  std::size_t close_pairs = 0, non_units = 0;
  const auto& pts = snap.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      ++report.tested_count;
      const CycInt delta = pts[i].z - pts[j].z;
      const std::int64_t n = field_norm(delta);
      const GoldenInt d = abs_sq(delta, Embedding::physical);
      if (golden_cmp(d, close) == std::strong_ordering::less) {
        ++close_pairs;
        if (n != 1)
          report.add({{pts[i].z, pts[j].z}, d, n, "close pair whose difference is not a unit"});
      }
      if (n != 1) {
        ++non_units;
        if (n < 5) report.add({{pts[i].z, pts[j].z}, d, n, "difference has norm strictly between 1 and 5"});
      }
    }
  report.notes["close_pairs"] = close_pairs;
  report.notes["non_unit_pairs"] = non_units;
  return report;
}

/// Every inner point's nearest neighbour sits at squared distance exactly
/// 2 - phi or 1.
///
/// Distances are recomputed by a plain scan over the snapshot, independently
/// of analyze(); a stored min_dist_sq that disagrees is itself a violation.
/// Once R >= 2 both values must occur.
inline VerificationReport verify_two_distance(const Snapshot& snap) {
  detail::require_unit_window(snap, "verify_two_distance");
  auto report = detail::start_report("two-distance", snap);
  std::size_t n_short = 0, n_long = 0;
  const auto& pts = snap.points;
  for (const auto& p : pts) {
    if (!is_inner(p.abs_sq_physical, snap.radius_sq)) continue;
    ++report.tested_count;
    std::optional<GoldenInt> best;
    CycInt witness;
    for (const auto& q : pts) {
      if (q.z == p.z) continue;
      const GoldenInt d = abs_sq(q.z - p.z, Embedding::physical);
      if (!best || d < *best) {
        best = d;
        witness = q.z;
      }
    }
    if (!best) {
      report.add({{p.z}, std::nullopt, std::nullopt, "inner point without neighbours"});
      continue;
    }
    if (*best == kShortDistSq) {
      ++n_short;
    } else if (*best == kLongDistSq) {
      ++n_long;
    } else {
      report.add({{p.z, witness}, *best, std::nullopt, "nearest-neighbour distance is neither short nor long"});
      continue;
    }
    if (p.min_dist_sq && *p.min_dist_sq != *best)
      report.add({{p.z}, *p.min_dist_sq, std::nullopt, "stored nearest-neighbour distance disagrees with scan"});
  }
  if (snap.radius_sq >= Rational(4)) {
    if (n_short == 0) report.add({{}, kShortDistSq, std::nullopt, "short class is empty"});
    if (n_long == 0) report.add({{}, kLongDistSq, std::nullopt, "long class is empty"});
  }
  report.notes["short"] = n_short;
  report.notes["long"] = n_long;
  return report;
}

/// Some tenth-root step z + exp(pi i j / 5) stays in S, for every point
/// (boundary points included; membership is tested directly).
inline VerificationReport verify_step_existence(const Snapshot& snap) {
  detail::require_unit_window(snap, "verify_step_existence");
  auto report = detail::start_report("step-existence", snap);
  for (const auto& p : snap.points) {
    ++report.tested_count;
    bool found = false;
    for (long j = 0; j < 10 && !found; ++j) found = contains(p.z + CycInt::tenth_root(j), snap.window);
    if (!found) report.add({{p.z}, std::nullopt, std::nullopt, "no tenth-root step stays in the set"});
  }
  return report;
}

enum class Check { separation, rotation, unit_lemma, two_distance, step_existence };

inline constexpr Check kAllChecks[] = {Check::separation, Check::rotation, Check::unit_lemma,
                                       Check::two_distance, Check::step_existence};

inline std::string_view to_string(Check c) {
  switch (c) {
    case Check::separation: return "separation";
    case Check::rotation: return "rotation";
    case Check::unit_lemma: return "unit-lemma";
    case Check::two_distance: return "two-distance";
    case Check::step_existence: break;
  }
  return "step-existence";
}

inline std::optional<Check> parse_check(std::string_view s) {
  for (Check c : kAllChecks)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

inline bool needs_unit_window(Check c) {
  return c == Check::unit_lemma || c == Check::two_distance || c == Check::step_existence;
}

inline VerificationReport run_check(Check c, const Snapshot& snap) {
  if (needs_unit_window(c) && snap.window.w() != Rational(1)) {
    auto r = detail::start_report(std::string(to_string(c)), snap);
    r.skipped = true;
    r.notes["reason"] = "requires w = 1";
    return r;
  }
  switch (c) {
    case Check::separation: return verify_separation(snap);
    case Check::rotation: return verify_rotation(snap);
    case Check::unit_lemma: return verify_unit_lemma(snap);
    case Check::two_distance: return verify_two_distance(snap);
    case Check::step_existence: break;
  }
  return verify_step_existence(snap);
}

struct VerifyOptions {
  std::vector<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  unsigned threads = 1;
};

/// Enumerates, analyzes and runs the selected checks in a fixed order.
/// Unit-window checks are reported as skipped when w != 1.
inline std::vector<VerificationReport> verify_all(const Rational& radius_sq, const Window& window,
                                                  const VerifyOptions& opts = {}) {
  const Snapshot snap = analyze(enumerate(radius_sq, window, {EnumStrategy::fincke_pohst, opts.threads}),
                                {opts.threads});
  std::vector<VerificationReport> out;
  for (Check c : opts.checks) out.push_back(run_check(c, snap));
  return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& z : x.points) pts.push_back(z.coords());
    nlohmann::json item{{"points", pts}, {"detail", x.detail}};
    item["value"] = x.value ? detail::golden_json(*x.value) : nlohmann::json(nullptr);
    if (x.norm) item["norm"] = *x.norm;
    v.push_back(std::move(item));
  }
  return {{"check", r.check_name},
          {"pass", r.pass},
          {"skipped", r.skipped},
          {"tested_count", r.tested_count},
          {"violation_count", r.violation_count},
          {"violations", v},
          {"parameters", {{"radius_sq", r.radius_sq.str()}, {"window_sq", r.window_sq.str()}}},
          {"notes", r.notes}};
}

}  // namespace penta
