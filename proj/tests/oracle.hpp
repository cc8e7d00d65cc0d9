#pragma once

// Test-only reference computations. None of these call into the library's
// arithmetic; they exist to produce expected values independently.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace penta::oracle {

using Coords = std::array<std::int64_t, 4>;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

/// Polynomial product followed by reduction modulo 1 + x + x^2 + x^3 + x^4,
/// eliminating the top degree one step at a time.
inline Coords mul_mod_cyclotomic(const Coords& x, const Coords& y) {
  std::array<std::int64_t, 7> c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i + j] += x[i] * y[j];
  for (int deg = 6; deg >= 4; --deg) {
    const std::int64_t lead = c[deg];
    c[deg] = 0;
    for (int k = 1; k <= 4; ++k) c[deg - k] -= lead;
  }
  return {c[0], c[1], c[2], c[3]};
}

/// Evaluates sum a_k * exp(i * k * angle) in long double.
inline std::complex<long double> evaluate(const Coords& a, long double angle) {
  std::complex<long double> acc{0.0L, 0.0L};
  for (int k = 0; k < 4; ++k)
    acc += static_cast<long double>(a[k]) * std::polar(1.0L, angle * k);
  return acc;
}

inline long double physical_angle() { return 2.0L * std::numbers::pi_v<long double> / 5.0L; }
inline long double internal_angle() { return 4.0L * std::numbers::pi_v<long double> / 5.0L; }

inline long double abs_sq_physical(const Coords& a) { return std::norm(evaluate(a, physical_angle())); }
inline long double abs_sq_internal(const Coords& a) { return std::norm(evaluate(a, internal_angle())); }

/// Field norm as the product of the two squared moduli, rounded. Exact for
/// small coordinates.
inline std::int64_t norm_float(const Coords& a) {
  return std::llround(abs_sq_physical(a) * abs_sq_internal(a));
}

inline BigFloat golden_value(std::int64_t p, std::int64_t q) {
  const BigFloat phi = (BigFloat(1) + boost::multiprecision::sqrt(BigFloat(5))) / 2;
  return BigFloat(p) + BigFloat(q) * phi;
}

/// Squared modulus of the physical embedding, brute-forced over every
/// integer vector in a box; used to count points of the set directly.
inline std::vector<Coords> brute_force_points(long double radius_sq, long double window_sq, int box) {
  std::vector<Coords> out;
  for (int a0 = -box; a0 <= box; ++a0)
    for (int a1 = -box; a1 <= box; ++a1)
      for (int a2 = -box; a2 <= box; ++a2)
        for (int a3 = -box; a3 <= box; ++a3) {
          const Coords a{a0, a1, a2, a3};
          if (abs_sq_physical(a) <= radius_sq + 1e-9L && abs_sq_internal(a) <= window_sq + 1e-9L)
            out.push_back(a);
        }
  return out;
}

inline Coords random_coords(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

}  // namespace penta::oracle
