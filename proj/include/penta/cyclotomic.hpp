#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(2*pi*i/5), in the canonical
// Z-basis (1, zeta, zeta^2, zeta^3). zeta^4 is always rewritten as
// -1 - zeta - zeta^2 - zeta^3.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "penta/checked.hpp"
#include "penta/errors.hpp"
#include "penta/golden.hpp"

namespace penta {

/// Which complex embedding of Q(zeta) to use. `physical` is the identity
/// (where points are drawn); `internal` sends zeta to zeta^2 (where the
/// window constraint lives).
enum class Embedding { physical, internal };

template <class Int>
class BasicCycInt {
 public:
  using value_type = Int;
  using coords_type = std::array<Int, 4>;

  BasicCycInt() : a_{Int(0), Int(0), Int(0), Int(0)} {}
  BasicCycInt(Int a0, Int a1, Int a2, Int a3) : a_{a0, a1, a2, a3} {}
  explicit BasicCycInt(const coords_type& a) : a_(a) {}

  template <class Other>
  explicit BasicCycInt(const BasicCycInt<Other>& o)
      : a_{Int(o[0]), Int(o[1]), Int(o[2]), Int(o[3])} {}

  /// Rational integer n.
  static BasicCycInt integer(Int n) { return {n, Int(0), Int(0), Int(0)}; }
  static BasicCycInt one() { return integer(Int(1)); }
  static BasicCycInt zeta() { return {Int(0), Int(1), Int(0), Int(0)}; }

  /// zeta^k for any integer k.
  static BasicCycInt zeta_pow(long k) {
    std::array<Int, 5> c{};
    c[static_cast<std::size_t>(((k % 5) + 5) % 5)] = Int(1);
    return reduce(c);
  }

  /// exp(pi*i*j/5) = (-1)^j * zeta^(3j), the tenth roots of unity.
  static BasicCycInt tenth_root(long j) {
    const BasicCycInt z = zeta_pow(3 * j);
    return (((j % 2) + 2) % 2) ? -z : z;
  }

  /// Embeds p + q*phi using phi = -(zeta^2 + zeta^3).
  static BasicCycInt from_golden(const BasicGoldenInt<Int>& g) {
    const Int mq = num::neg(g.q, "from_golden");
    return {g.p, Int(0), mq, mq};
  }

  const Int& operator[](std::size_t i) const { return a_[i]; }
  const coords_type& coords() const noexcept { return a_; }

  bool is_zero() const {
    return a_[0] == Int(0) && a_[1] == Int(0) && a_[2] == Int(0) && a_[3] == Int(0);
  }

  friend BasicCycInt operator+(const BasicCycInt& x, const BasicCycInt& y) {
    BasicCycInt r;
    for (std::size_t i = 0; i < 4; ++i) r.a_[i] = num::add(x.a_[i], y.a_[i], "cyclotomic add");
    return r;
  }
  friend BasicCycInt operator-(const BasicCycInt& x, const BasicCycInt& y) {
    BasicCycInt r;
    for (std::size_t i = 0; i < 4; ++i) r.a_[i] = num::sub(x.a_[i], y.a_[i], "cyclotomic sub");
    return r;
  }
  friend BasicCycInt operator-(const BasicCycInt& x) {
    BasicCycInt r;
    for (std::size_t i = 0; i < 4; ++i) r.a_[i] = num::neg(x.a_[i], "cyclotomic neg");
    return r;
  }

  // Schoolbook product in the wide type, folded with zeta^5 = 1, then reduced.
  friend BasicCycInt operator*(const BasicCycInt& x, const BasicCycInt& y) {
    using W = num::wide_t<Int>;
    const char* op = "cyclotomic mul";
    std::array<W, 5> c{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (x.a_[i] == Int(0)) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        auto& slot = c[(i + j) % 5];
        slot = num::add(slot, num::mul(W(x.a_[i]), W(y.a_[j]), op), op);
      }
    }
    BasicCycInt r;
    for (std::size_t i = 0; i < 4; ++i)
      r.a_[i] = num::narrow<Int>(num::sub(c[i], c[4], op), op);
    return r;
  }

  BasicCycInt& operator+=(const BasicCycInt& o) { return *this = *this + o; }
  BasicCycInt& operator-=(const BasicCycInt& o) { return *this = *this - o; }
  BasicCycInt& operator*=(const BasicCycInt& o) { return *this = *this * o; }

  friend bool operator==(const BasicCycInt&, const BasicCycInt&) = default;
  /// Lexicographic on (a0, a1, a2, a3).
  friend auto operator<=>(const BasicCycInt& x, const BasicCycInt& y) { return x.a_ <=> y.a_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicCycInt& z) {
    return os << '(' << z.a_[0] << ',' << z.a_[1] << ',' << z.a_[2] << ',' << z.a_[3] << ')';
  }

  /// Rewrites coefficients of 1..zeta^4 into the canonical basis.
  template <class C>
  static BasicCycInt reduce(const std::array<C, 5>& c) {
    BasicCycInt r;
    for (std::size_t i = 0; i < 4; ++i)
      r.a_[i] = num::narrow<Int>(num::sub(C(c[i]), C(c[4]), "cyclotomic reduce"),
                                 "cyclotomic reduce");
    return r;
  }

 private:
  coords_type a_;
};

using CycInt = BasicCycInt<std::int64_t>;

/// Substitutes zeta -> zeta^k. k = 2 is the internal embedding's
/// automorphism, k = 4 is complex conjugation.
template <class Int>
BasicCycInt<Int> galois_apply(const BasicCycInt<Int>& z, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("galois_apply: k must be in {1,2,3,4}");
  std::array<Int, 5> c{};
  for (std::size_t i = 0; i < 4; ++i) c[(i * static_cast<std::size_t>(k)) % 5] = z[i];
  return BasicCycInt<Int>::reduce(c);
}

template <class Int>
BasicCycInt<Int> conj(const BasicCycInt<Int>& z) {
  return galois_apply(z, 4);
}

namespace detail {

// A real element has the form b0 + b2*(zeta^2 + zeta^3) = b0 - b2*phi.
template <class Int>
BasicGoldenInt<Int> real_to_golden(const BasicCycInt<Int>& r, const char* what) {
  if (r[1] != Int(0) || r[2] != r[3])
    throw internal_error(std::string(what) + ": conjugate product is not real");
  return {r[0], num::neg(r[2], what)};
}

}  // namespace detail

/// |z|^2 (physical) or |z^sigma|^2 (internal) as an element of Z[phi].
template <class Int>
BasicGoldenInt<Int> abs_sq(const BasicCycInt<Int>& z, Embedding which) {
  if (which == Embedding::physical)
    return detail::real_to_golden(z * galois_apply(z, 4), "abs_sq");
  return detail::real_to_golden(galois_apply(z, 2) * galois_apply(z, 3), "abs_sq");
}

/// N(z) = z * sigma_2(z) * sigma_3(z) * sigma_4(z), a non-negative rational
/// integer, positive for z != 0.
///
/// The two real halves are multiplied in the wide type; the product must
/// collapse to a rational integer.
template <class Int>
Int field_norm(const BasicCycInt<Int>& z) {
  using W = num::wide_t<Int>;
  const BasicCycInt<W> outer(z * galois_apply(z, 4));
  const BasicCycInt<W> inner(galois_apply(z, 2) * galois_apply(z, 3));
  const BasicCycInt<W> n = outer * inner;
  if (n[1] != W(0) || n[2] != W(0) || n[3] != W(0))
    throw internal_error("field_norm: product of conjugates is not rational");
  return num::narrow<Int>(n[0], "field_norm");
}

/// (5 * sum a_i^2 - (sum a_i)^2) / 2, which equals |z|^2 + |z^sigma|^2.
/// Positive definite with Gram matrix (5I - J)/2.
template <class Int>
Int quadratic_form(const BasicCycInt<Int>& z) {
  const char* op = "quadratic_form";
  Int sq(0), s(0);
  for (std::size_t i = 0; i < 4; ++i) {
    sq = num::add(sq, num::mul(z[i], z[i], op), op);
    s = num::add(s, z[i], op);
  }
  return num::sub(num::mul(Int(5), sq, op), num::mul(s, s, op), op) / Int(2);
}

/// Floating evaluation at exp(2*pi*i/5) (physical) or exp(4*pi*i/5)
/// (internal). Accumulates in long double; for coordinates up to 1e6 the
/// relative error stays below 1e-12.
template <class Int>
std::complex<double> embed_approx(const BasicCycInt<Int>& z, Embedding which) {
  const long double step = (which == Embedding::physical ? 2.0L : 4.0L) *
                           std::numbers::pi_v<long double> / 5.0L;
  long double re = 0.0L, im = 0.0L;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto c = static_cast<long double>(z[k]);
    re += c * std::cos(step * static_cast<long double>(k));
    im += c * std::sin(step * static_cast<long double>(k));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace penta

template <class Int>
struct std::hash<penta::BasicCycInt<Int>> {
  std::size_t operator()(const penta::BasicCycInt<Int>& z) const noexcept {
    std::size_t h = 0;
    for (std::size_t i = 0; i < 4; ++i)
      h = h * 0x9E3779B97F4A7C15ULL + std::hash<Int>{}(z[i]) + (h >> 29);
    return h;
  }
};
