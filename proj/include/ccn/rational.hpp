#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccn {

// Exact rational with 64-bit components. The symbolic layer only ever builds
// small integers (Jacobian entries, 3x3 determinant expansions), so overflow
// is a logic error; intermediates go through __int128 and are range-checked.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }
  double to_double() const { return double(num_) / double(den_); }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rat from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("rational overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  void assign(long long n, long long d) {
    *this = from128(n, d);
  }

  long long num_ = 0;
  long long den_ = 1;  // always positive
};

// Exact integer square root of a perfect square; returns false otherwise.
inline bool perfect_sqrt(long long v, long long& root) {
  if (v < 0) return false;
  long long r = (long long)(__builtin_sqrtl((long double)v));
  for (long long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == v) {
      root = c;
      return true;
    }
  return false;
}

// Square root of a rational if exact: num and den both perfect squares.
inline bool rational_sqrt(const Rat& v, Rat& root) {
  if (v.sign() < 0) return false;
  long long p, q;
  if (!perfect_sqrt(v.num(), p) || !perfect_sqrt(v.den(), q)) return false;
  root = Rat(p, q);
  return true;
}

}  // namespace ccn
