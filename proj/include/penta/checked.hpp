#pragma once

// Integer helpers shared by the exact arithmetic types. Built-in signed
// integers are overflow-checked; any other integer type (e.g. a
// boost::multiprecision backend) is assumed unbounded and uses plain operators.

#include <concepts>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "penta/errors.hpp"

namespace penta::num {

template <class Int>
inline constexpr bool is_fixed_width_v =
    std::is_same_v<Int, std::int64_t> || std::is_same_v<Int, __int128> ||
    std::is_same_v<Int, std::int32_t>;

template <class Int>
Int add(const Int& a, const Int& b, const char* op = "add") {
  if constexpr (is_fixed_width_v<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error(op);
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int sub(const Int& a, const Int& b, const char* op = "sub") {
  if constexpr (is_fixed_width_v<Int>) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error(op);
    return r;
  } else {
    return a - b;
  }
}

template <class Int>
Int mul(const Int& a, const Int& b, const char* op = "mul") {
  if constexpr (is_fixed_width_v<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error(op);
    return r;
  } else {
    return a * b;
  }
}

template <class Int>
Int neg(const Int& a, const char* op = "neg") {
  return sub(Int(0), a, op);
}

/// Type used for intermediate products that would square the magnitude of
/// an `Int`. 64-bit values widen to 128 bits (still checked).
template <class Int>
struct wide {
  using type = Int;
};
template <>
struct wide<std::int64_t> {
  using type = __int128;
};
template <class Int>
using wide_t = typename wide<Int>::type;

/// Narrowing conversion back from a wide intermediate; throws if out of range.
template <class Int, class W>
Int narrow(const W& v, const char* op = "narrow") {
  if constexpr (std::is_same_v<Int, W>) {
    return v;
  } else {
    if (v > W(std::numeric_limits<Int>::max()) ||
        v < W(std::numeric_limits<Int>::min()))
      throw overflow_error(op);
    return static_cast<Int>(v);
  }
}

template <class Int>
int sign(const Int& v) {
  return (v > Int(0)) - (v < Int(0));
}

}  // namespace penta::num
