#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "penta/checked.hpp"

namespace penta {

/// Reduced fraction num/den with den > 0. Used for radii and window sizes,
/// where exactness matters but magnitudes stay small.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = num::neg(num, "rational sign");
      den = num::neg(den, "rational sign");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {num::add(num::mul(a.num_, b.den_, "rational add"),
                     num::mul(b.num_, a.den_, "rational add"), "rational add"),
            num::mul(a.den_, b.den_, "rational add")};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(num::neg(b.num_, "rational sub"), b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {num::mul(a.num_, b.num_, "rational mul"),
            num::mul(a.den_, b.den_, "rational mul")};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "n", "n/d" and finite decimals such as "2.25".
  static Rational parse(std::string_view text) {
    auto bad = [&] {
      return std::invalid_argument("not a rational number: '" +
                                   std::string(text) + "'");
    };
    auto to_int = [&](std::string_view s) {
      std::int64_t v = 0;
      if (s.empty()) throw bad();
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos)
      return {to_int(text.substr(0, slash)), to_int(text.substr(slash + 1))};
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string digits(text.substr(0, dot));
      std::string_view frac = text.substr(dot + 1);
      if (frac.empty() || frac.find_first_not_of("0123456789") != frac.npos)
        throw bad();
      digits.append(frac);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i)
        den = num::mul<std::int64_t>(den, 10, "rational parse");
      return {to_int(digits), den};
    }
    return Rational(to_int(text));
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace penta
