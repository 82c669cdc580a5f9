/*
 * scalar.hpp
 * ----------
 * The exact coefficient algebra: sums of terms
 *
 *     (rational) * (power product of commuting symbols)
 *                * (product of exp(l*u) factors)
 *                * (product of cos(m*u)^c sin(m*u)^s factors, s <= 1)
 *                * (sorted Grassmann monomial of odd symbols)
 *
 * over a parameter-polynomial denominator. The form is canonical: two scalars
 * are equal iff their representations compare equal. Normalization merges exp
 * factors per coordinate, rewrites sin^2 as 1 - cos^2, sorts Grassmann factors
 * with the transposition sign, and reduces the fraction by a polynomial gcd.
 *
 * Values are immutable once built; all operations are pure.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superbialg/parampoly.hpp"

namespace sbg {

struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExpFactor {
  SymId coord;
  ParamPoly lambda; // exponent coefficient, nonzero
  bool operator==(const ExpFactor& o) const { return coord == o.coord && lambda == o.lambda; }
  bool operator<(const ExpFactor& o) const {
    if (coord != o.coord) return coord < o.coord;
    return lambda < o.lambda;
  }
};

struct TrigFactor {
  SymId coord;
  ParamPoly freq; // positive-leading canonical frequency, nonzero
  int cospow = 0;
  int sinpow = 0; // 0 or 1 after normalization
  bool operator==(const TrigFactor& o) const {
    return coord == o.coord && freq == o.freq && cospow == o.cospow && sinpow == o.sinpow;
  }
  bool operator<(const TrigFactor& o) const {
    if (coord != o.coord) return coord < o.coord;
    if (!(freq == o.freq)) return freq < o.freq;
    if (cospow != o.cospow) return cospow < o.cospow;
    return sinpow < o.sinpow;
  }
};

struct Term {
  Rational coeff;
  std::vector<std::pair<SymId, int>> mono; // sorted; exponents > 0
  std::vector<ExpFactor> exps;             // sorted by coord
  std::vector<TrigFactor> trig;            // sorted
  std::vector<SymId> grass;                // sorted by Grassmann order, distinct

  Parity parity() const { return grass.size() % 2 ? Parity::odd : Parity::even; }
};

// Value of a scalar at a numeric point: components on Grassmann basis masks.
using GrassValue = std::map<std::uint32_t, double>;

class Scalar {
public:
  Scalar() : den_(Rational(1)) {}
  Scalar(Rational c);
  Scalar(std::int64_t n) : Scalar(Rational(n)) {}
  static Scalar symbol(SymId s, int exp = 1);
  static Scalar symbol(const std::string& name, int exp = 1);
  static Scalar exp_factor(ParamPoly lambda, SymId coord);
  static Scalar cos_factor(ParamPoly freq, SymId coord);
  static Scalar sin_factor(ParamPoly freq, SymId coord);
  static Scalar from_parampoly(const ParamPoly& p);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return num_; }
  const ParamPoly& denominator() const { return den_; }

  // Homogeneous parity: nullopt for mixed sums, even for zero.
  std::optional<Parity> parity() const;
  Parity parity_or_throw(const char* context) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const; // order-sensitive for odd factors
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const; // arbitrary total order (for sorting)

  Scalar pow(int e) const;
  // Multiplicative inverse; throws DivisionError when *this is not a unit of
  // the supported subring (parameter rational times an exp monomial times
  // one-plus-nilpotent).
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  // Left/right derivative with respect to a coordinate symbol.
  Scalar derive(SymId u, bool left) const;

  // Substitutions (all pure).
  Scalar substitute_param(SymId p, const Rational& v) const;
  Scalar substitute_coord_zero(SymId u) const;
  // u -> c * v for a coordinate v (v may equal u).
  Scalar substitute_coord_scaled(SymId u, const Rational& c, SymId v) const;
  // u -> u1 + u2 (distinct coordinates of the same parity as u; even only).
  Scalar substitute_coord_sum(SymId u, SymId u1, SymId u2) const;
  // odd symbol -> c * (another odd symbol), or zero when c == 0.
  Scalar substitute_odd(SymId z, const Rational& c, SymId w) const;

  // Drops every term containing an odd symbol (the "body").
  Scalar body() const;
  bool has_odd() const;
  bool is_param_rational() const; // no coordinates, exp, trig or odd symbols
  bool depends_on(SymId s) const;

  // Numeric evaluation for test oracles. Even symbols take values from
  // `point`; each odd symbol must be mapped to a distinct generator bit.
  GrassValue eval(const std::vector<std::pair<SymId, double>>& point,
                  const std::vector<std::pair<SymId, int>>& odd_bits) const;

  std::string str() const;

private:
  void normalize();
  void reduce_fraction();
  static std::vector<Term> mul_terms(const Term& a, const Term& b);

  std::vector<Term> num_;
  ParamPoly den_;
  friend Scalar make_scalar(std::vector<Term> terms, ParamPoly den);
};

Scalar make_scalar(std::vector<Term> terms, ParamPoly den);

// Expression grammar I/O (see README): integers, rationals n/d, symbols,
// + - * / ^, exp/cos/sin, parentheses. parse_scalar(print) round-trips.
Scalar parse_scalar(const std::string& text);

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

} // namespace sbg
