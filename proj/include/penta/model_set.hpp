#pragma once

// The point set S = { z in Z[zeta] : |z^sigma|^2 <= w }: exact membership,
// bounded enumeration, nearest-neighbour distances and their classification.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "penta/cyclotomic.hpp"
#include "penta/golden.hpp"
#include "penta/rational.hpp"

namespace penta {

/// Closed disc |u|^2 <= w in the internal embedding.
class Window {
 public:
  Window() = default;
  explicit Window(Rational w) : w_(w) {
    if (w_ <= Rational(0)) throw std::invalid_argument("window: w must be positive");
  }

  const Rational& w() const noexcept { return w_; }
  Rational diam_sq() const { return w_ * Rational(4); }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Rational w_{1};
};

enum class DistClass { Short, Long, Other, Unknown };

inline std::string_view to_string(DistClass c) {
  switch (c) {
    case DistClass::Short: return "short";
    case DistClass::Long: return "long";
    case DistClass::Other: return "other";
    case DistClass::Unknown: break;
  }
  return "unknown";
}

inline std::optional<DistClass> parse_dist_class(std::string_view s) {
  if (s == "short") return DistClass::Short;
  if (s == "long") return DistClass::Long;
  if (s == "other") return DistClass::Other;
  if (s == "unknown") return DistClass::Unknown;
  return std::nullopt;
}

/// Squared lengths of the two nearest-neighbour distances:
/// ((sqrt 5 - 1) / 2)^2 = 2 - phi and 1.
inline const GoldenInt kShortDistSq{2, -1};
inline const GoldenInt kLongDistSq{1, 0};

struct PointRecord {
  CycInt z;
  GoldenInt abs_sq_physical;
  GoldenInt abs_sq_internal;
  double x = 0.0;
  double y = 0.0;
  std::optional<GoldenInt> min_dist_sq;
  DistClass dist_class = DistClass::Unknown;

  static PointRecord from(const CycInt& z) {
    const auto xy = embed_approx(z, Embedding::physical);
    return {z, abs_sq(z, Embedding::physical), abs_sq(z, Embedding::internal),
            xy.real(), xy.imag(), std::nullopt, DistClass::Unknown};
  }

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// Order used everywhere a point list is materialised: Q(a), then coordinates.
inline bool canonical_less(const CycInt& a, const CycInt& b) {
  const auto qa = quadratic_form(a);
  const auto qb = quadratic_form(b);
  if (qa != qb) return qa < qb;
  return a < b;
}

/// Finite view { z in S : |z|^2 <= radius_sq } in canonical order.
struct Snapshot {
  Window window;
  Rational radius_sq{0};
  std::vector<PointRecord> points;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

inline bool contains(const CycInt& z, const Window& window) {
  return golden_cmp(abs_sq(z, Embedding::internal), window.w()) !=
         std::strong_ordering::greater;
}

enum class EnumStrategy {
  /// Every integer vector with ||a||^2 <= 2 * bound. Reference path.
  box,
  /// Layered search on the LDL^T factorisation of the form 5I - J.
  fincke_pohst,
};

struct EnumerateOptions {
  EnumStrategy strategy = EnumStrategy::fincke_pohst;
  unsigned threads = 1;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Runs body(worker_index) on `threads` workers and joins.
template <class Body>
void parallel_for_workers(unsigned threads, Body&& body) {
  if (threads <= 1) {
    body(0U);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&body, t] { body(t); });
}

struct FormFactor {
  std::array<double, 4> d{};
  std::array<std::array<double, 4>, 4> u{};  // unit upper triangular part
};

// 5I - J = U^T diag(d) U.
inline FormFactor factor_form() {
  std::array<std::array<double, 4>, 4> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (i == j ? 5.0 : 0.0) - 1.0;
  FormFactor f;
  for (int i = 0; i < 4; ++i) {
    double di = m[i][i];
    for (int k = 0; k < i; ++k) di -= f.u[k][i] * f.u[k][i] * f.d[k];
    f.d[i] = di;
    f.u[i][i] = 1.0;
    for (int j = i + 1; j < 4; ++j) {
      double v = m[i][j];
      for (int k = 0; k < i; ++k) v -= f.u[k][i] * f.u[k][j] * f.d[k];
      f.u[i][j] = v / di;
    }
  }
  return f;
}

// Calls emit(z) for every z with Q(z) <= q_max. `outer` restricts the last
// coordinate to values v with (v - lo) % stride == offset.
template <class Emit>
void enumerate_form(std::int64_t q_max, EnumStrategy strategy, unsigned offset,
                    unsigned stride, Emit&& emit) {
  if (q_max < 0) return;
  const std::int64_t two_q = num::mul<std::int64_t>(2, q_max, "enumerate bound");
  if (strategy == EnumStrategy::box) {
    const std::int64_t r = isqrt(two_q);
    for (std::int64_t a3 = -r + offset; a3 <= r; a3 += stride)
      for (std::int64_t a2 = -r; a2 <= r; ++a2)
        for (std::int64_t a1 = -r; a1 <= r; ++a1)
          for (std::int64_t a0 = -r; a0 <= r; ++a0) {
            if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 > two_q) continue;
            const CycInt z{a0, a1, a2, a3};
            if (quadratic_form(z) <= q_max) emit(z);
          }
    return;
  }

  static const FormFactor f = factor_form();
  constexpr double slack = 1e-7;
  std::array<std::int64_t, 4> a{};
  // Level i fixes a[i] given a[i+1..3]; `rem` is the unused part of 2Q.
  auto level = [&](auto&& self, int i, double rem) -> void {
    double centre = 0.0;
    for (int j = i + 1; j < 4; ++j) centre -= f.u[i][j] * static_cast<double>(a[j]);
    const double half = std::sqrt(std::max(rem, 0.0) / f.d[i]);
    auto lo = static_cast<std::int64_t>(std::ceil(centre - half - slack));
    const auto hi = static_cast<std::int64_t>(std::floor(centre + half + slack));
    if (i == 3) {
      const std::int64_t first = lo;
      lo = first + offset;
      for (std::int64_t v = lo; v <= hi; v += stride) {
        a[3] = v;
        const double t = static_cast<double>(v) - centre;
        self(self, 2, rem - f.d[3] * t * t);
      }
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      a[i] = v;
      const double t = static_cast<double>(v) - centre;
      if (i == 0) {
        const CycInt z{a[0], a[1], a[2], a[3]};
        if (quadratic_form(z) <= q_max) emit(z);
      } else {
        self(self, i - 1, rem - f.d[i] * t * t);
      }
    }
  };
  level(level, 3, static_cast<double>(two_q));
}

inline void sort_canonical(std::vector<CycInt>& zs) {
  std::vector<std::pair<std::int64_t, CycInt>> keyed;
  keyed.reserve(zs.size());
  for (const auto& z : zs) keyed.emplace_back(quadratic_form(z), z);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < zs.size(); ++i) zs[i] = keyed[i].second;
}

}  // namespace detail

/// Exactly the z with |z|^2 <= radius_sq and |z^sigma|^2 <= w, sorted
/// canonically.
///
/// Q(a) = |z|^2 + |z^sigma|^2 <= radius_sq + w bounds the search; both
/// constraints are then tested exactly. The result does not depend on the
/// strategy or the thread count.
inline std::vector<CycInt> enumerate_points(const Rational& radius_sq, const Window& window,
                                            const EnumerateOptions& opts = {}) {
  if (radius_sq < Rational(0)) throw std::invalid_argument("enumerate: radius_sq must be >= 0");
  const std::int64_t q_max = (radius_sq + window.w()).floor();
  const unsigned threads = std::max(1U, opts.threads);
  std::vector<std::vector<CycInt>> parts(threads);
  detail::parallel_for_workers(threads, [&](unsigned t) {
    detail::enumerate_form(q_max, opts.strategy, t, threads, [&](const CycInt& z) {
      if (!contains(z, window)) return;
      if (golden_cmp(abs_sq(z, Embedding::physical), radius_sq) == std::strong_ordering::greater)
        return;
      parts[t].push_back(z);
    });
  });
  std::vector<CycInt> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  detail::sort_canonical(out);
  return out;
}

inline Snapshot enumerate(const Rational& radius_sq, const Window& window,
                          const EnumerateOptions& opts = {}) {
  Snapshot snap{window, radius_sq, {}};
  const auto zs = enumerate_points(radius_sq, window, opts);
  snap.points.reserve(zs.size());
  for (const auto& z : zs) snap.points.push_back(PointRecord::from(z));
  return snap;
}

struct MinDistance {
  GoldenInt dist_sq;
  CycInt witness;

  friend bool operator==(const MinDistance&, const MinDistance&) = default;
};

/// Nearest-neighbour queries against the whole (infinite) set S.
///
/// Any neighbour z' within squared distance rho of z gives a displacement d
/// with |d|^2 <= rho and |d^sigma|^2 <= 4w, so Q(d) <= rho + 4w and the
/// candidates form a finite precomputable set. The search starts at rho = 1
/// (enough for w = 1, where some tenth-root step always stays in S) and
/// quadruples rho until a neighbour turns up.
class NeighborSearch {
 public:
  explicit NeighborSearch(Window window) : window_(window) { level(0); }

  const Window& window() const noexcept { return window_; }

  /// Displacements d != 0 with |d|^2 <= 4^lvl and |d^sigma|^2 <= 4w.
  const std::vector<CycInt>& displacements(std::size_t lvl) const { return level(lvl); }

  MinDistance min_distance(const CycInt& z) const {
    if (!contains(z, window_))
      throw std::invalid_argument("min_distance: point is not in the set");
    for (std::size_t lvl = 0; lvl < kMaxLevels; ++lvl) {
      std::optional<MinDistance> best;
      for (const auto& d : level(lvl)) {
        const CycInt other = z + d;
        if (!contains(other, window_)) continue;
        const GoldenInt dist = abs_sq(d, Embedding::physical);
        if (!best || dist < best->dist_sq ||
            (dist == best->dist_sq && other < best->witness))
          best = MinDistance{dist, other};
      }
      if (best) return *best;
    }
    throw internal_error("min_distance: no neighbour found");
  }

 private:
  static constexpr std::size_t kMaxLevels = 12;

  const std::vector<CycInt>& level(std::size_t lvl) const {
    std::lock_guard lock(mutex_);
    while (levels_.size() <= lvl) {
      Rational rho(1);
      for (std::size_t i = 0; i < levels_.size(); ++i) rho = rho * Rational(4);
      std::vector<CycInt> ds = enumerate_points(rho, Window(window_.diam_sq()));
      std::erase_if(ds, [](const CycInt& d) { return d.is_zero(); });
      levels_.push_back(std::move(ds));
    }
    return levels_[lvl];
  }

  Window window_;
  mutable std::mutex mutex_;
  mutable std::deque<std::vector<CycInt>> levels_;
};

inline MinDistance min_distance(const CycInt& z, const Window& window) {
  return NeighborSearch(window).min_distance(z);
}

inline DistClass classify_distance(const GoldenInt& d_sq) {
  if (d_sq.sign() <= 0) throw std::invalid_argument("classify_distance: distance must be positive");
  if (d_sq == kShortDistSq) return DistClass::Short;
  if (d_sq == kLongDistSq) return DistClass::Long;
  return DistClass::Other;
}

/// |z| <= R - 1 for R = sqrt(radius_sq), decided exactly.
///
/// With radius_sq = n/d and s = |z|^2 this is sqrt(s) + 1 <= sqrt(n/d), i.e.
/// g = (n - d) - d*s >= 0 and 4*d^2*s <= g^2.
inline bool is_inner(const GoldenInt& abs_sq_physical, const Rational& radius_sq) {
  const std::int64_t n = radius_sq.num();
  const std::int64_t d = radius_sq.den();
  const GoldenInt dd{d, 0};
  const GoldenInt g = GoldenInt{num::sub(n, d, "is_inner"), 0} - dd * abs_sq_physical;
  if (g.sign() < 0) return false;
  return (g * g - GoldenInt{4, 0} * dd * dd * abs_sq_physical).sign() >= 0;
}

struct AnalyzeOptions {
  unsigned threads = 1;
};

/// Fills min_dist_sq and dist_class for every point at least 1 inside the
/// physical radius; the rest stay `unknown`.
///
/// Neighbours within distance 1 of an inner point all lie in the snapshot, so
/// they are found through a unit-cell grid over the float coordinates and then
/// compared exactly. The grid only proposes candidates; cells one step wider
/// than needed are scanned so float error cannot drop one. Points without a
/// neighbour inside distance 1 fall back to NeighborSearch.
inline Snapshot analyze(Snapshot snap, const AnalyzeOptions& opts = {}) {
  auto& pts = snap.points;
  std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < pts.size(); ++i)
    grid[{std::lround(std::floor(pts[i].x)), std::lround(std::floor(pts[i].y))}].push_back(i);

  std::optional<NeighborSearch> fallback;
  std::once_flag fallback_once;
  const unsigned threads = std::max(1U, opts.threads);
  detail::parallel_for_workers(threads, [&](unsigned t) {
    for (std::size_t i = t; i < pts.size(); i += threads) {
      PointRecord& p = pts[i];
      p.min_dist_sq.reset();
      p.dist_class = DistClass::Unknown;
      if (!is_inner(p.abs_sq_physical, snap.radius_sq)) continue;
      std::optional<MinDistance> best;
      const long cx = std::lround(std::floor(p.x));
      const long cy = std::lround(std::floor(p.y));
      for (long gx = cx - 2; gx <= cx + 2; ++gx)
        for (long gy = cy - 2; gy <= cy + 2; ++gy) {
          const auto it = grid.find({gx, gy});
          if (it == grid.end()) continue;
          for (std::size_t j : it->second) {
            if (j == i) continue;
            const GoldenInt dist = abs_sq(pts[j].z - p.z, Embedding::physical);
            if (dist > kLongDistSq) continue;
            if (!best || dist < best->dist_sq ||
                (dist == best->dist_sq && pts[j].z < best->witness))
              best = MinDistance{dist, pts[j].z};
          }
        }
      if (!best) {
        std::call_once(fallback_once, [&] { fallback.emplace(snap.window); });
        best = fallback->min_distance(p.z);
      }
      p.min_dist_sq = best->dist_sq;
      p.dist_class = classify_distance(best->dist_sq);
    }
  });
  return snap;
}

struct ClassCounts {
  std::size_t short_count = 0;
  std::size_t long_count = 0;
  std::size_t other_count = 0;
  std::size_t unknown_count = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

inline ClassCounts count_classes(const Snapshot& snap) {
  ClassCounts c;
  for (const auto& p : snap.points) {
    switch (p.dist_class) {
      case DistClass::Short: ++c.short_count; break;
      case DistClass::Long: ++c.long_count; break;
      case DistClass::Other: ++c.other_count; break;
      case DistClass::Unknown: ++c.unknown_count; break;
    }
  }
  return c;
}

struct Stats {
  std::size_t count = 0;
  ClassCounts classes;
  /// count / (pi R^2); empty when R = 0.
  std::optional<double> density;
  /// short / long; empty when no long points were classified.
  std::optional<double> short_long_ratio;
};

inline Stats stats(const Snapshot& snap) {
  Stats s;
  s.count = snap.points.size();
  s.classes = count_classes(snap);
  if (snap.radius_sq > Rational(0))
    s.density = static_cast<double>(s.count) /
                (std::numbers::pi * snap.radius_sq.to_double());
  if (s.classes.long_count > 0)
    s.short_long_ratio = static_cast<double>(s.classes.short_count) /
                         static_cast<double>(s.classes.long_count);
  return s;
}

}  // namespace penta
