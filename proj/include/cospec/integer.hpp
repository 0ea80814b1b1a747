#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerOverflow : std::overflow_error {
  IntegerOverflow() : std::overflow_error("fixed-width integer overflow") {}
};

/// Fixed-width signed integer whose arithmetic throws IntegerOverflow instead
/// of wrapping. Exact algorithms run on Checked<int64_t> / Checked<__int128>
/// first and are re-run on BigInt when a bound is exceeded.
template <typename I>
class Checked {
  static_assert(std::is_integral_v<I> || std::is_same_v<I, __int128>);

 public:
  constexpr Checked() = default;
  constexpr Checked(long long v) : v_(static_cast<I>(v)) {}  // NOLINT(implicit)

  constexpr I value() const { return v_; }

  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw IntegerOverflow();
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw IntegerOverflow();
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw IntegerOverflow();
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (b.v_ == -1) return -a;
    Checked r;
    r.v_ = a.v_ / b.v_;
    return r;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v_ == -1) return Checked(0);
    Checked r;
    r.v_ = a.v_ % b.v_;
    return r;
  }
  Checked operator-() const { return Checked(0) - *this; }
  Checked& operator+=(Checked o) { return *this = *this + o; }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  Checked& operator*=(Checked o) { return *this = *this * o; }

  friend bool operator==(Checked a, Checked b) { return a.v_ == b.v_; }
  friend auto operator<=>(Checked a, Checked b) { return a.v_ <=> b.v_; }
  explicit operator bool() const { return v_ != 0; }

 private:
  I v_ = 0;
};

using Int64 = Checked<std::int64_t>;
using Int128 = Checked<__int128>;

inline BigInt to_bigint(const BigInt& v) { return v; }

template <typename I>
BigInt to_bigint(Checked<I> v) {
  if constexpr (sizeof(I) <= 8) {
    return BigInt(static_cast<long long>(v.value()));
  } else {
    const __int128 x = v.value();
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    BigInt r = BigInt(static_cast<unsigned long long>(u >> 64));
    r <<= 64;
    r += BigInt(static_cast<unsigned long long>(u));
    return neg ? BigInt(-r) : r;
  }
}

template <typename T>
T from_long(long long v) {
  return T(v);
}

template <typename T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <typename T>
T gcd_value(T a, T b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != T(0)) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

template <typename I>
std::string to_decimal(Checked<I> v) {
  if constexpr (sizeof(I) <= 8) {
    return std::to_string(static_cast<long long>(v.value()));
  } else {
    __int128 x = v.value();
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      return std::to_string(static_cast<long long>(x));
    return to_bigint(v).str();
  }
}

}  // namespace cospec
