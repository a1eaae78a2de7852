#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g2 {

// Exact rational arithmetic on 128-bit integers. All contract-bearing
// values in this project are small (weights, Gamma-argument products),
// but intermediate products in ratio arithmetic need the extra headroom.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_int128(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long num_ll() const { return checked_ll(num_); }
  long long den_ll() const { return checked_ll(den_); }

  Rational operator-() const { return from_int128(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return from_int128(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return from_int128(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return from_int128(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_int128(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Largest integer <= value.
  Int floor128() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long floor_ll() const { return checked_ll(floor128()); }
  long long ceil_ll() const { return checked_ll(-(-*this).floor128()); }

  std::string to_string() const {
    std::string s = int128_to_string(num_);
    if (den_ != 1) s += "/" + int128_to_string(den_);
    return s;
  }

  static std::string int128_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    return neg ? "-" + s : s;
  }

 private:
  static Int gcd128(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long checked_ll(Int v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rational: value out of 64-bit range");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

// Exact half-integer: value = twice/2. Closed under addition/subtraction
// and integer scaling; the lattice arithmetic of critical sets lives here.
class HalfInt {
 public:
  HalfInt() : twice_(0) {}
  HalfInt(long long n) : twice_(2 * n) {}

  static HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static HalfInt half(long long numerator) { return from_twice(numerator); }

  long long twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  long long as_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt: not an integer");
    return twice_ / 2;
  }

  Rational to_rational() const { return Rational(twice_, 2); }

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt operator+(const HalfInt& o) const {
    return from_twice(twice_ + o.twice_);
  }
  HalfInt operator-(const HalfInt& o) const {
    return from_twice(twice_ - o.twice_);
  }
  HalfInt operator*(long long k) const { return from_twice(twice_ * k); }

  bool operator==(const HalfInt& o) const { return twice_ == o.twice_; }
  bool operator!=(const HalfInt& o) const { return twice_ != o.twice_; }
  bool operator<(const HalfInt& o) const { return twice_ < o.twice_; }
  bool operator<=(const HalfInt& o) const { return twice_ <= o.twice_; }
  bool operator>(const HalfInt& o) const { return twice_ > o.twice_; }
  bool operator>=(const HalfInt& o) const { return twice_ >= o.twice_; }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  long long twice_;
};

inline HalfInt operator*(long long k, const HalfInt& h) { return h * k; }
inline HalfInt operator+(long long k, const HalfInt& h) {
  return HalfInt(k) + h;
}
inline HalfInt operator-(long long k, const HalfInt& h) {
  return HalfInt(k) - h;
}

// Smallest lattice point >= q and largest <= q, for the two lattices that
// carry critical sets: the integers and the half-odd integers.
inline HalfInt ceil_to_integers(const Rational& q) {
  return HalfInt(q.ceil_ll());
}
inline HalfInt floor_to_integers(const Rational& q) {
  return HalfInt(q.floor_ll());
}
inline HalfInt ceil_to_half_odd(const Rational& q) {
  // smallest t odd with t/2 >= q, i.e. t >= 2q
  Rational t = q * Rational(2);
  long long c = t.ceil_ll();
  if (c % 2 == 0) ++c;
  return HalfInt::from_twice(c);
}
inline HalfInt floor_to_half_odd(const Rational& q) {
  Rational t = q * Rational(2);
  long long f = t.floor_ll();
  if (f % 2 == 0) --f;
  return HalfInt::from_twice(f);
}

}  // namespace g2
