#include <doctest.h>

#include <random>

#include "superbialg/scalar.hpp"

using namespace sbg;

namespace {

// small random scalars for property tests
Scalar random_scalar(std::mt19937& rng, bool odd_parity) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(-3, 3);
  const char* odd_syms[] = {"psi", "chi", "zeta"};
  const char* even_syms[] = {"x", "p", "a"};
  Scalar acc;
  for (int t = 0; t < 2; ++t) {
    Scalar term(Rational(small(rng)));
    term = term * Scalar::symbol(even_syms[coin(rng)], coin(rng));
    if (odd_parity) {
      term = term * Scalar::symbol(odd_syms[static_cast<std::size_t>(small(rng) & 1)]);
    } else if (coin(rng)) {
      term = term * Scalar::symbol("psi") * Scalar::symbol("chi");
    }
    acc += term;
  }
  return acc;
}

double body_at(const Scalar& s, double xv, double pv, double av) {
  GrassValue v = s.eval({{sym("x"), xv}, {sym("p"), pv}, {sym("a"), av}, {sym("y"), 0.3}},
                        {{sym("psi"), 0}, {sym("chi"), 1}, {sym("zeta"), 2}, {sym("eta"), 3}});
  auto it = v.find(0);
  return it == v.end() ? 0.0 : it->second;
}

} // namespace

TEST_CASE("odd symbols square to zero and anticommute") {
  Scalar psi = Scalar::symbol("psi");
  Scalar zeta = Scalar::symbol("zeta");
  CHECK((psi * psi).is_zero());
  CHECK((zeta * psi + psi * zeta).is_zero());
  CHECK(psi * zeta == -(zeta * psi));
}

TEST_CASE("exponential factors merge") {
  Scalar e = Scalar::exp_factor(ParamPoly(Rational(-1)), sym("x"));
  Scalar e2 = e * e;
  CHECK(e2 == parse_scalar("exp(-2*x)"));
  // numeric oracle at x in {0, 1, 2}
  for (double xv : {0.0, 1.0, 2.0}) {
    double lhs = body_at(e, xv, 1, 1) * body_at(e, xv, 1, 1);
    double rhs = body_at(e2, xv, 1, 1);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("derivatives") {
  SymId x = sym("x");
  SymId chi = sym("chi");
  CHECK(parse_scalar("exp(-2*x)").derive(x, true) == parse_scalar("-2*exp(-2*x)"));
  Scalar pc = Scalar::symbol("psi") * Scalar::symbol("chi");
  // one odd factor precedes chi, so the left derivative picks up a sign
  CHECK(pc.derive(chi, true) == -Scalar::symbol("psi"));
  CHECK(pc.derive(chi, false) == Scalar::symbol("psi"));
  // nilpotency of odd differentiation
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    Scalar s = random_scalar(rng, i % 2);
    CHECK(s.derive(chi, true).derive(chi, true).is_zero());
  }
  // parameters are never differentiated
  CHECK_THROWS_AS(parse_scalar("p").derive(sym("p"), true), std::invalid_argument);
  // trig chain rule with sin^2 normalization
  Scalar c = parse_scalar("cos(x)^2");
  CHECK(c.derive(x, true) == parse_scalar("-2*sin(x)*cos(x)"));
  Scalar s2 = parse_scalar("sin(x)*sin(x)");
  CHECK(s2 == parse_scalar("1 - cos(x)^2"));
}

TEST_CASE("graded commutativity of the product") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    bool po = i % 2, qo = (i / 2) % 2;
    Scalar s = random_scalar(rng, po);
    Scalar t = random_scalar(rng, qo);
    Scalar lhs = s * t;
    Scalar rhs = t * s;
    if (po && qo) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical equality and round trip") {
  const char* samples[] = {
      "1/2*exp(-2*x)*psi - p^2*chi + cos((1+p)*x)^2",
      "x^2*y - 3/4*psi*chi + exp(1/2*x)",
      "(1+p)*x/(1+p)",
      "-1/(4*p)",
      "a*zeta*eta + sin(x)*cos(x)",
      "beta*x^2/(1+p^2)",
  };
  for (const char* s : samples) {
    Scalar v = parse_scalar(s);
    CHECK(parse_scalar(v.str()) == v);
  }
  CHECK(parse_scalar("(1+p)*x/(1+p)") == parse_scalar("x"));
  CHECK(parse_scalar("sin(x)^2+cos(x)^2") == Scalar(1));
  CHECK(parse_scalar("x-x").is_zero());
}

TEST_CASE("division is restricted") {
  CHECK_THROWS_AS(parse_scalar("1/x"), DivisionError);
  CHECK_THROWS_AS(parse_scalar("1/psi"), DivisionError);
  CHECK_THROWS_AS(parse_scalar("1/cos(x)"), DivisionError);
  CHECK(parse_scalar("1/(2*p)") * parse_scalar("2*p") == Scalar(1));
  CHECK(parse_scalar("1/exp(x)") == parse_scalar("exp(-x)"));
  // one-plus-nilpotent inverts by a terminating series
  Scalar s = parse_scalar("1 + psi*chi");
  CHECK(s * s.inverse() == Scalar(1));
}

TEST_CASE("parity bookkeeping") {
  CHECK(parse_scalar("psi*chi").parity() == Parity::even);
  CHECK(parse_scalar("zeta").parity() == Parity::odd);
  CHECK(!parse_scalar("1 + psi").parity().has_value());
  CHECK_THROWS_AS(parse_scalar("1 + psi").parity_or_throw("test"), ParityError);
}

TEST_CASE("substitutions") {
  SymId p = sym("p");
  CHECK(parse_scalar("-1/(4*p)").substitute_param(p, Rational(2)) == Scalar(Rational(-1, 8)));
  CHECK_THROWS_AS(parse_scalar("1/p").substitute_param(p, Rational(0)), DivisionError);
  CHECK(parse_scalar("exp(-p*x)*cos(x)").substitute_coord_zero(sym("x")) == Scalar(1));
  CHECK(parse_scalar("sin(x)*x").substitute_coord_zero(sym("x")).is_zero());
  // angle addition keeps exact equality under u -> u + v
  Scalar lhs = parse_scalar("cos(x)").substitute_coord_sum(sym("x"), sym("x"), sym("y"));
  CHECK(lhs == parse_scalar("cos(x)*cos(y) - sin(x)*sin(y)"));
  CHECK(parse_scalar("zeta*psi").substitute_odd(sym("zeta"), Rational(0), sym("zeta")).is_zero());
  // eta -> -zeta
  CHECK(parse_scalar("eta*psi").substitute_odd(sym("eta"), Rational(-1), sym("zeta")) ==
        parse_scalar("-zeta*psi"));
}

TEST_CASE("numeric Grassmann cross-check of symbolic equality") {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    Scalar s = random_scalar(rng, i % 2);
    Scalar t = random_scalar(rng, (i + 1) % 2);
    Scalar prod = s * t;
    // evaluate both sides over a 4-generator Grassmann basis
    std::vector<std::pair<SymId, double>> pt = {
        {sym("x"), 0.7}, {sym("p"), 1.3}, {sym("a"), -0.4}, {sym("y"), 0.2}};
    std::vector<std::pair<SymId, int>> bits = {
        {sym("psi"), 0}, {sym("chi"), 1}, {sym("zeta"), 2}, {sym("eta"), 3}};
    GrassValue lhs = prod.eval(pt, bits);
    GrassValue a = s.eval(pt, bits);
    GrassValue b = t.eval(pt, bits);
    // multiply numerically in the Grassmann algebra
    GrassValue rhs;
    for (auto& [ma, va] : a)
      for (auto& [mb, vb] : b) {
        if (ma & mb) continue;
        // count transpositions to interleave the sorted bit sets
        int sign = 1;
        for (int bit_b = 0; bit_b < 4; ++bit_b)
          if (mb & (1u << bit_b))
            for (int bit_a = bit_b + 1; bit_a < 4; ++bit_a)
              if (ma & (1u << bit_a)) sign = -sign;
        rhs[ma | mb] += sign * va * vb;
      }
    for (auto& [m, v] : lhs) CHECK(std::abs(v - rhs[m]) < 1e-9);
    for (auto& [m, v] : rhs) CHECK(std::abs(v - lhs[m]) < 1e-9);
  }
}
