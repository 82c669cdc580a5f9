/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic on 64-bit integers. All coefficient arithmetic in
 * the library goes through this type; overflow throws instead of wrapping.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sbg {

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in rational arithmetic");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in rational arithmetic");
  return r;
}
} // namespace detail

class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool negative() const { return num_ < 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational operator+(const Rational& o) const {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t l = detail::checked_mul(den_ / g, o.den_);
    std::int64_t a = detail::checked_mul(num_, o.den_ / g);
    std::int64_t b = detail::checked_mul(o.num_, den_ / g);
    return Rational(detail::checked_add(a, b), l);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    std::int64_t g1 = std::gcd(std::abs(num_), o.den_);
    std::int64_t g2 = std::gcd(std::abs(o.num_), den_);
    Rational r;
    r.num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
    r.den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
    return r;
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
  }

  Rational pow(int e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : Rational(den_, num_);
    int n = e > 0 ? e : -e;
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= base;
    return r;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void reduce() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace sbg
