#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "mfs/errors.hpp"

namespace mfs {

// Exact rational over 64-bit integers.  All intermediates go through
// __int128 and narrow back with a range check, so overflow throws instead
// of wrapping.  Values are kept normalized (den > 0, gcd(num,den) = 1),
// which makes equality and ordering plain field comparisons.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long as_integer() const {
    if (den_ != 1) throw LatticeMismatch("rational " + str() + " is not an integer");
    return num_;
  }

  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p" or "p/q" with optional sign.
  static Rat parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos)
        return Rat(std::stoll(std::string(s)));
      return Rat(std::stoll(std::string(s.substr(0, slash))),
                 std::stoll(std::string(s.substr(slash + 1))));
    } catch (const std::exception&) {
      throw ParseError("cannot parse rational '" + std::string(s) + "'");
    }
  }

 private:
  using i128 = __int128;
  long long num_ = 0;
  long long den_ = 1;

  static long long narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw ArithmeticOverflow("rational arithmetic overflow");
    return static_cast<long long>(v);
  }
  static Rat make(i128 n, i128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() { *this = make(num_, den_); }
};

}  // namespace mfs
