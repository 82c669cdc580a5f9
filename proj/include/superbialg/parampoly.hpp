/*
 * parampoly.hpp
 * -------------
 * Polynomials in parameter symbols with rational coefficients. Used for
 * exponent/frequency slots of exp/cos/sin factors, for denominators of the
 * scalar fraction field, and for pivot constraints of the linear solver.
 *
 * Canonical form: terms sorted by monomial, no zero coefficients. Exact
 * division and a multivariate gcd (primitive euclidean recursion) keep
 * fractions reduced; degrees in this problem domain stay tiny.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "superbialg/rational.hpp"
#include "superbialg/symbols.hpp"

namespace sbg {

// Sorted power product of parameter symbols, exponents > 0.
using ParamMono = std::vector<std::pair<SymId, int>>;

// Graded lexicographic monomial order (a proper monomial order, so leading
// terms are multiplicative and exact division terminates).
inline bool mono_less(const ParamMono& a, const ParamMono& b) {
  int da = 0, db = 0;
  for (auto& [s, e] : a) da += e;
  for (auto& [s, e] : b) db += e;
  if (da != db) return da < db;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first > b[j].first; // missing symbol = exponent 0
    if (a[i].second != b[j].second) return a[i].second < b[j].second;
    ++i;
    ++j;
  }
  return false; // equal degree and equal on the shared prefix implies equal
}

class ParamPoly {
public:
  struct Term {
    Rational c;
    ParamMono m;
  };

  ParamPoly() = default;
  ParamPoly(Rational c) {
    if (!c.is_zero()) terms_.push_back({c, {}});
  }
  ParamPoly(std::int64_t n) : ParamPoly(Rational(n)) {}
  static ParamPoly variable(SymId s, int exp = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.empty()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.empty() && terms_[0].c.is_one(); }
  Rational constant_value() const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const { return *this + (-o); }
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const Rational& r) const;
  bool operator==(const ParamPoly& o) const { return equal(terms_, o.terms_); }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  bool operator<(const ParamPoly& o) const;

  // Substitute one parameter by a rational value.
  ParamPoly substitute(SymId s, const Rational& v) const;
  std::vector<SymId> variables() const;
  int degree_in(SymId s) const;

  double eval(const std::vector<std::pair<SymId, double>>& point) const;

  std::string str() const;

  // Exact division; returns nullopt when o does not divide *this.
  std::optional<ParamPoly> divided_by(const ParamPoly& o) const;

  // Square root of a perfect-square polynomial, if one exists.
  std::optional<ParamPoly> sqrt() const;

  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  // Splits numeric content so that the primitive part has integer, coprime,
  // positive-leading coefficients.
  Rational content() const;
  ParamPoly primitive_part() const;

private:
  static bool equal(const std::vector<Term>& a, const std::vector<Term>& b);
  void normalize();
  std::vector<Term> terms_;
  friend class ParamPolyBuilder;
};

class ParamPolyBuilder {
public:
  void add(Rational c, ParamMono m) {
    if (!c.is_zero()) p_.terms_.push_back({std::move(c), std::move(m)});
  }
  ParamPoly take() {
    p_.normalize();
    return std::move(p_);
  }

private:
  ParamPoly p_;
};

} // namespace sbg
