#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "penta/model_set.hpp"

using namespace penta;

namespace {

const CycInt kEps{-1, 0, -1, -1};
const Window kUnit{Rational(1)};

std::set<CycInt> as_set(const Snapshot& s) {
  std::set<CycInt> out;
  for (const auto& p : s.points) out.insert(p.z);
  return out;
}

std::set<CycInt> brute_force(long double radius_sq, long double window_sq) {
  const int box = static_cast<int>(std::ceil(std::sqrt(2.0L * (radius_sq + window_sq))));
  std::set<CycInt> out;
  for (const auto& a : oracle::brute_force_points(radius_sq, window_sq, box)) out.insert(CycInt(a));
  return out;
}

// Minimum over a plain pairwise scan of an enumerated snapshot.
std::optional<MinDistance> pairwise_min(const CycInt& z, const Snapshot& snap) {
  std::optional<MinDistance> best;
  for (const auto& p : snap.points) {
    if (p.z == z) continue;
    const GoldenInt d = abs_sq(p.z - z, Embedding::physical);
    if (!best || d < best->dist_sq || (d == best->dist_sq && p.z < best->witness))
      best = MinDistance{d, p.z};
  }
  return best;
}

}  // namespace

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(CycInt(), kUnit));
  EXPECT_TRUE(contains(CycInt::one(), kUnit));
  EXPECT_FALSE(contains(kEps, kUnit));
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(contains(CycInt::zeta_pow(k), kUnit));
  EXPECT_TRUE(contains(kEps, Window(Rational(3))));
}

TEST(Window, RejectsNonPositive) {
  EXPECT_THROW(Window(Rational(0)), std::invalid_argument);
  EXPECT_THROW(Window(Rational(-1, 2)), std::invalid_argument);
  EXPECT_EQ(Window().w(), Rational(1));
  EXPECT_EQ(Window(Rational(3, 2)).diam_sq(), Rational(6));
}

TEST(Enumerate, OriginOnly) {
  const Snapshot s = enumerate(Rational(0), kUnit);
  ASSERT_EQ(s.points.size(), 1U);
  EXPECT_EQ(s.points[0].z, CycInt());
}

TEST(Enumerate, UnitRadiusGivesTenthRootsAndZero) {
  const Snapshot s = enumerate(Rational(1), kUnit);
  const auto oracle_set = brute_force(1.0L, 1.0L);
  EXPECT_EQ(oracle_set.size(), 11U);
  EXPECT_EQ(as_set(s), oracle_set);
  std::set<CycInt> expected{CycInt()};
  for (long j = 0; j < 10; ++j) expected.insert(CycInt::tenth_root(j));
  EXPECT_EQ(as_set(s), expected);
}

TEST(Enumerate, ClosedUnderNegationAndRotation) {
  const auto pts = as_set(enumerate(Rational(1), kUnit));
  for (const auto& z : pts) {
    EXPECT_TRUE(pts.count(-z));
    EXPECT_TRUE(pts.count(CycInt::zeta() * z));
  }
}

TEST(Enumerate, MatchesFloatBruteForce) {
  for (const auto& [r, w] : std::vector<std::pair<Rational, Rational>>{
           {Rational(9), Rational(1)}, {Rational(16), Rational(1, 4)}, {Rational(7, 2), Rational(4)}}) {
    const auto s = enumerate(r, Window(w));
    EXPECT_EQ(as_set(s), brute_force(r.to_double(), w.to_double())) << r.str() << ' ' << w.str();
  }
}

TEST(Enumerate, StrategiesAndThreadCountsAgree) {
  for (std::int64_t r2 = 0; r2 <= 36; r2 += 3) {
    for (const Rational w : {Rational(1), Rational(1, 4), Rational(4)}) {
      const Window win(w);
      const Snapshot fast = enumerate(Rational(r2), win);
      EXPECT_EQ(fast, enumerate(Rational(r2), win, {EnumStrategy::box, 1}));
      EXPECT_EQ(fast, enumerate(Rational(r2), win, {EnumStrategy::fincke_pohst, 3}));
      EXPECT_EQ(fast, enumerate(Rational(r2), win, {EnumStrategy::box, 4}));
    }
  }
}

TEST(Enumerate, RecordsAreExactAndCanonicallyOrdered) {
  const Rational r2(49, 2);
  const Snapshot s = enumerate(r2, kUnit);
  ASSERT_FALSE(s.points.empty());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    EXPECT_NE(golden_cmp(p.abs_sq_internal, Rational(1)), std::strong_ordering::greater);
    EXPECT_NE(golden_cmp(p.abs_sq_physical, r2), std::strong_ordering::greater);
    const auto xy = embed_approx(p.z, Embedding::physical);
    EXPECT_NEAR(p.x, xy.real(), 1e-9);
    EXPECT_NEAR(p.y, xy.imag(), 1e-9);
    if (i > 0) {
      EXPECT_TRUE(canonical_less(s.points[i - 1].z, p.z));
    }
  }
}

TEST(Enumerate, SymmetryClosure) {
  const auto pts = as_set(enumerate(Rational(36), kUnit));
  for (const auto& z : pts) {
    EXPECT_TRUE(pts.count(CycInt::zeta() * z));
    EXPECT_TRUE(pts.count(-z));
    EXPECT_TRUE(pts.count(conj(z)));
  }
}

TEST(Enumerate, RejectsNegativeRadius) {
  EXPECT_THROW(enumerate(Rational(-1), kUnit), std::invalid_argument);
}

TEST(MinDistance, OriginIsLong) {
  const MinDistance m = min_distance(CycInt(), kUnit);
  EXPECT_EQ(m.dist_sq, kLongDistSq);
  // Lexicographically smallest tenth root of unity is zeta^4 = (-1,-1,-1,-1).
  EXPECT_EQ(m.witness, CycInt(-1, -1, -1, -1));
  const auto brute = pairwise_min(CycInt(), enumerate(Rational(4), kUnit));
  ASSERT_TRUE(brute);
  EXPECT_EQ(*brute, m);
}

TEST(MinDistance, OneIsShort) {
  const MinDistance m = min_distance(CycInt::one(), kUnit);
  EXPECT_EQ(m.dist_sq, kShortDistSq);
  EXPECT_EQ(m.witness, CycInt(0, 0, -1, -1));
  EXPECT_EQ(abs_sq(CycInt(0, 0, -1, -1) - CycInt::one(), Embedding::physical), GoldenInt(2, -1));
}

TEST(MinDistance, RequiresMembership) {
  EXPECT_THROW(min_distance(kEps, kUnit), std::invalid_argument);
}

TEST(MinDistance, InvariantUnderRotation) {
  const Snapshot s = enumerate(Rational(16), kUnit);
  NeighborSearch search(kUnit);
  for (const auto& p : s.points) {
    const auto m = search.min_distance(p.z);
    for (long j = 1; j < 10; ++j)
      EXPECT_EQ(search.min_distance(CycInt::tenth_root(j) * p.z).dist_sq, m.dist_sq);
  }
}

TEST(MinDistance, DisplacementSetMatchesPairwiseScan) {
  for (const Rational w : {Rational(1), Rational(1, 4), Rational(4), Rational(3, 2)}) {
    const Window win(w);
    NeighborSearch search(win);
    for (const auto& p : enumerate(Rational(25), win).points) {
      const double modulus = std::sqrt(p.abs_sq_physical.to_double());
      // Generous neighbourhood: nearest neighbours in small windows can sit
      // further than 1 away.
      const double reach = modulus + 1.5 + (w < Rational(1) ? 2.0 : 0.0);
      const auto big = enumerate(Rational(static_cast<std::int64_t>(std::ceil(reach * reach))), win);
      const auto brute = pairwise_min(p.z, big);
      ASSERT_TRUE(brute);
      EXPECT_EQ(search.min_distance(p.z), *brute) << p.z << " w=" << w.str();
    }
  }
}

TEST(ClassifyDistance, Examples) {
  EXPECT_EQ(classify_distance(GoldenInt(2, -1)), DistClass::Short);
  EXPECT_EQ(classify_distance(GoldenInt(1, 0)), DistClass::Long);
  EXPECT_EQ(classify_distance(GoldenInt(3, -1)), DistClass::Other);
  EXPECT_THROW(classify_distance(GoldenInt(0, 0)), std::invalid_argument);
  EXPECT_THROW(classify_distance(GoldenInt(1, -1)), std::invalid_argument);
}

TEST(IsInner, AgreesWithFloat) {
  for (const Rational r2 : {Rational(0), Rational(1), Rational(4), Rational(25, 4), Rational(30)}) {
    for (const auto& p : enumerate(r2, kUnit).points) {
      const double margin = std::sqrt(r2.to_double()) - 1.0 - std::sqrt(p.abs_sq_physical.to_double());
      if (std::abs(margin) < 1e-9) continue;
      EXPECT_EQ(is_inner(p.abs_sq_physical, r2), margin > 0) << p.z << ' ' << r2.str();
    }
  }
  EXPECT_TRUE(is_inner(GoldenInt(1, 0), Rational(4)));   // |z| = 1 = R - 1
  EXPECT_TRUE(is_inner(GoldenInt(0, 0), Rational(1)));   // R - 1 = 0
  EXPECT_FALSE(is_inner(GoldenInt(0, 0), Rational(1, 2)));
}

TEST(Analyze, NoOtherDistancesAndMatchesPairwise) {
  const Snapshot s = analyze(enumerate(Rational(4), kUnit));
  const ClassCounts c = count_classes(s);
  EXPECT_EQ(c.other_count, 0U);
  const Snapshot wide = enumerate(Rational(9), kUnit);
  for (const auto& p : s.points) {
    if (p.dist_class == DistClass::Unknown) continue;
    const auto brute = pairwise_min(p.z, wide);
    ASSERT_TRUE(brute);
    EXPECT_EQ(*p.min_dist_sq, brute->dist_sq);
  }
  EXPECT_GT(c.short_count, 0U);
  EXPECT_GT(c.long_count, 0U);
}

TEST(Analyze, OriginOnlySnapshotIsUnknown) {
  const Snapshot s = analyze(enumerate(Rational(0), kUnit));
  ASSERT_EQ(s.points.size(), 1U);
  EXPECT_EQ(s.points[0].dist_class, DistClass::Unknown);
  EXPECT_FALSE(s.points[0].min_dist_sq);
}

TEST(Analyze, ClassesPartitionInnerPoints) {
  const Rational r2(49);
  const Snapshot s = analyze(enumerate(r2, kUnit));
  std::size_t inner = 0;
  for (const auto& p : s.points) inner += is_inner(p.abs_sq_physical, r2);
  const ClassCounts c = count_classes(s);
  EXPECT_EQ(c.short_count + c.long_count, inner);
  EXPECT_EQ(c.unknown_count, s.points.size() - inner);
}

TEST(Analyze, GridRouteMatchesDisplacementRoute) {
  for (const Rational w : {Rational(1), Rational(1, 4), Rational(4)}) {
    const Window win(w);
    const Snapshot s = analyze(enumerate(Rational(36), win));
    NeighborSearch search(win);
    for (const auto& p : s.points) {
      if (p.dist_class == DistClass::Unknown) continue;
      EXPECT_EQ(*p.min_dist_sq, search.min_distance(p.z).dist_sq) << p.z << " w=" << w.str();
    }
  }
}

TEST(Analyze, ThreadCountDoesNotChangeResult) {
  const Snapshot raw = enumerate(Rational(100), kUnit);
  EXPECT_EQ(analyze(raw), analyze(raw, {4}));
}

TEST(Stats, Examples) {
  const Stats s1 = stats(analyze(enumerate(Rational(1), kUnit)));
  EXPECT_EQ(s1.count, 11U);
  ASSERT_TRUE(s1.density);
  EXPECT_NEAR(*s1.density, 11.0 / std::numbers::pi, 1e-12);

  const Stats s0 = stats(enumerate(Rational(0), kUnit));
  EXPECT_EQ(s0.count, 1U);
  EXPECT_FALSE(s0.density);
  EXPECT_FALSE(s0.short_long_ratio);
}

TEST(Stats, DensityNearWindowAreaOverCovolume) {
  const Stats s = stats(enumerate(Rational(900), kUnit));
  const double expected = 4.0 * std::numbers::pi / std::sqrt(125.0);
  ASSERT_TRUE(s.density);
  EXPECT_NEAR(*s.density, expected, 0.1 * expected);
}

TEST(Stats, IndependentOfPointOrder) {
  Snapshot s = analyze(enumerate(Rational(64), kUnit));
  const Stats before = stats(s);
  std::mt19937_64 rng(3);
  std::shuffle(s.points.begin(), s.points.end(), rng);
  const Stats after = stats(s);
  EXPECT_EQ(before.count, after.count);
  EXPECT_EQ(before.classes, after.classes);
  EXPECT_EQ(before.density, after.density);
  EXPECT_EQ(before.short_long_ratio, after.short_long_ratio);
}
