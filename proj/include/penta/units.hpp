#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "penta/cyclotomic.hpp"

namespace penta {

/// True iff z is a unit. Norms are non-negative here, so this is N(z) == 1.
template <class Int>
bool is_unit(const BasicCycInt<Int>& z) {
  return !z.is_zero() && field_norm(z) == Int(1);
}

/// Fundamental unit zeta + zeta^4 = phi - 1, of modulus (sqrt 5 - 1) / 2.
template <class Int>
BasicCycInt<Int> fundamental_unit() {
  return {Int(-1), Int(0), Int(-1), Int(-1)};
}

/// Inverse of the fundamental unit: -(zeta^2 + zeta^3) = phi.
template <class Int>
BasicCycInt<Int> fundamental_unit_inverse() {
  return {Int(0), Int(0), Int(-1), Int(-1)};
}

/// u = sign * zeta^k * eps^j with sign in {+1, -1} and k in [0, 5).
struct UnitDecomposition {
  int sign = 1;
  int k = 0;
  long j = 0;

  friend bool operator==(const UnitDecomposition&, const UnitDecomposition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const UnitDecomposition& d) {
    return os << (d.sign < 0 ? "-" : "+") << "zeta^" << d.k << " eps^" << d.j;
  }
};

/// eps^j for any signed j, by repeated squaring.
template <class Int>
BasicCycInt<Int> fundamental_unit_pow(long j) {
  BasicCycInt<Int> base = j >= 0 ? fundamental_unit<Int>() : fundamental_unit_inverse<Int>();
  unsigned long e = j >= 0 ? static_cast<unsigned long>(j) : static_cast<unsigned long>(-j);
  BasicCycInt<Int> acc = BasicCycInt<Int>::one();
  while (e) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return acc;
}

template <class Int>
BasicCycInt<Int> recompose(const UnitDecomposition& d) {
  BasicCycInt<Int> u = BasicCycInt<Int>::zeta_pow(d.k) * fundamental_unit_pow<Int>(d.j);
  return d.sign < 0 ? -u : u;
}

/// Splits a unit into a root of unity times a power of eps.
///
/// The exponent is first guessed from log|u| / log(phi - 1); the guess and
/// its two neighbours are then tried exactly, so the answer never depends on
/// floating point. Throws std::invalid_argument for non-units and
/// internal_error if no candidate recomposes (the unit group would not be
/// mu_10 x <eps>).
template <class Int>
UnitDecomposition decompose_unit(const BasicCycInt<Int>& u) {
  if (!is_unit(u)) throw std::invalid_argument("decompose_unit: argument is not a unit");
  const double log_eps = std::log((std::sqrt(5.0) - 1.0) / 2.0);
  const long guess = std::lround(std::log(std::abs(embed_approx(u, Embedding::physical))) / log_eps);
  for (long j : {guess, guess - 1, guess + 1}) {
    const BasicCycInt<Int> root = u * fundamental_unit_pow<Int>(-j);
    for (int k = 0; k < 5; ++k) {
      const BasicCycInt<Int> zk = BasicCycInt<Int>::zeta_pow(k);
      if (root == zk) return {1, k, j};
      if (root == -zk) return {-1, k, j};
    }
  }
  throw internal_error("decompose_unit: no root-of-unity cofactor found");
}

}  // namespace penta
