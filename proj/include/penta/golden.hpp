#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>

#include "penta/checked.hpp"
#include "penta/rational.hpp"

namespace penta {

/// Sign of A + B*sqrt(5), decided exactly.
///
/// Same-sign operands settle it directly; otherwise the term with the larger
/// square wins (A^2 = 5B^2 only when both vanish, since sqrt(5) is irrational).
template <class W>
int sign_sqrt5(const W& a, const W& b) {
  const int sa = num::sign(a);
  const int sb = num::sign(b);
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  const W a2 = num::mul(a, a, "sign_sqrt5");
  const W b2 = num::mul(W(5), num::mul(b, b, "sign_sqrt5"), "sign_sqrt5");
  return a2 > b2 ? sa : sb;
}

/// Element p + q*phi of Z[phi], phi = (1 + sqrt 5) / 2. Squared moduli and
/// squared distances of cyclotomic integers land here.
template <class Int>
struct BasicGoldenInt {
  Int p{0};
  Int q{0};

  static BasicGoldenInt phi() { return {Int(0), Int(1)}; }

  friend BasicGoldenInt operator+(const BasicGoldenInt& x, const BasicGoldenInt& y) {
    return {num::add(x.p, y.p, "golden add"), num::add(x.q, y.q, "golden add")};
  }
  friend BasicGoldenInt operator-(const BasicGoldenInt& x, const BasicGoldenInt& y) {
    return {num::sub(x.p, y.p, "golden sub"), num::sub(x.q, y.q, "golden sub")};
  }
  friend BasicGoldenInt operator-(const BasicGoldenInt& x) {
    return {num::neg(x.p, "golden neg"), num::neg(x.q, "golden neg")};
  }
  // phi^2 = phi + 1
  friend BasicGoldenInt operator*(const BasicGoldenInt& x, const BasicGoldenInt& y) {
    const char* op = "golden mul";
    const Int qq = num::mul(x.q, y.q, op);
    return {num::add(num::mul(x.p, y.p, op), qq, op),
            num::add(num::add(num::mul(x.p, y.q, op), num::mul(x.q, y.p, op), op),
                     qq, op)};
  }

  /// Image under phi -> 1 - phi.
  BasicGoldenInt conjugate() const {
    return {num::add(p, q, "golden conjugate"), num::neg(q, "golden conjugate")};
  }

  /// Exact sign of the real number p + q*phi.
  int sign() const {
    using W = num::wide_t<Int>;
    const W a = num::add(num::mul(W(2), W(p), "golden sign"), W(q), "golden sign");
    return sign_sqrt5<W>(a, W(q));
  }

  bool is_zero() const { return p == Int(0) && q == Int(0); }

  long double to_long_double() const {
    const long double phi_ld = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return static_cast<long double>(p) + static_cast<long double>(q) * phi_ld;
  }
  double to_double() const { return static_cast<double>(to_long_double()); }

  friend bool operator==(const BasicGoldenInt&, const BasicGoldenInt&) = default;

  /// Orders by real value.
  friend std::strong_ordering operator<=>(const BasicGoldenInt& x,
                                          const BasicGoldenInt& y) {
    return (x - y).sign() <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicGoldenInt& g) {
    return os << '(' << g.p << ", " << g.q << ')';
  }
};

using GoldenInt = BasicGoldenInt<std::int64_t>;

/// Exact comparison of p + q*phi against num/den.
///
/// Scaling by 2*den turns the difference into A + B*sqrt(5) with
/// A = 2*den*p + den*q - 2*num and B = den*q.
template <class Int>
std::strong_ordering golden_cmp(const BasicGoldenInt<Int>& g, const Rational& r) {
  using W = num::wide_t<Int>;
  const char* op = "golden_cmp";
  const W den = W(r.den());
  const W dq = num::mul(den, W(g.q), op);
  const W a = num::sub(
      num::add(num::mul(num::mul(W(2), den, op), W(g.p), op), dq, op),
      num::mul(W(2), W(r.num()), op), op);
  return sign_sqrt5<W>(a, dq) <=> 0;
}

}  // namespace penta
