#include <doctest.h>

#include "superbialg/matexp.hpp"
#include "superbialg/superalgebra.hpp"

using namespace sbg;

TEST_CASE("trivial and diagonal exponentials") {
  SMatrix z(1, 1);
  CHECK(matrix_exponential(z, sym("x")) == SMatrix::identity(1));

  SMatrix m(2, 2);
  m.at(0, 0) = Scalar(Rational(-1));
  m.at(1, 1) = Scalar::symbol("p") * Scalar(Rational(-1));
  SMatrix e = matrix_exponential(m, sym("x"));
  CHECK(e.at(0, 0) == parse_scalar("exp(-x)"));
  CHECK(e.at(1, 1) == parse_scalar("exp(-p*x)"));
}

TEST_CASE("rotation block of the C^5 family") {
  SMatrix m(2, 2);
  m.at(0, 0) = -Scalar::symbol("p");
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(Rational(-1));
  m.at(1, 1) = -Scalar::symbol("p");
  SMatrix e = matrix_exponential(m, sym("x"));
  CHECK(e.at(0, 0) == parse_scalar("exp(-p*x)*cos(x)"));
  CHECK(e.at(0, 1) == parse_scalar("exp(-p*x)*sin(x)"));
  CHECK(e.at(1, 0) == parse_scalar("-exp(-p*x)*sin(x)"));
  CHECK(e.at(1, 1) == parse_scalar("exp(-p*x)*cos(x)"));
}

TEST_CASE("jordan and nilpotent blocks") {
  SMatrix j(2, 2);
  j.at(0, 0) = Scalar(1);
  j.at(0, 1) = Scalar(1);
  j.at(1, 1) = Scalar(1);
  SMatrix e = matrix_exponential(j, sym("x"));
  CHECK(e.at(0, 1) == parse_scalar("x*exp(x)"));

  SMatrix n(3, 3);
  n.at(0, 1) = Scalar(1);
  n.at(1, 2) = Scalar(1);
  SMatrix en = matrix_exponential(n, sym("x"));
  CHECK(en.at(0, 2) == parse_scalar("1/2*x^2"));
}

TEST_CASE("unsupported spectrum is rejected") {
  SMatrix m(2, 2);
  m.at(0, 1) = Scalar::symbol("p");
  m.at(1, 0) = Scalar(1);
  m.at(0, 0) = Scalar();
  m.at(1, 1) = Scalar();
  // K^2 = p I with p not a perfect square
  CHECK_THROWS_AS(matrix_exponential(m, sym("x")), UnsupportedSpectrumError);
}

TEST_CASE("ODE and group law on every registry adjoint") {
  SymId x = sym("x");
  SymId y = sym("y");
  for (const auto& name : registry_names()) {
    SuperAlgebra a = registry(name);
    for (int i = 0; i < a.dim; ++i) {
      if (a.grading[static_cast<std::size_t>(i)] == Parity::odd) continue;
      SMatrix m = ad_matrix(a, i);
      SMatrix e = matrix_exponential(m, x);
      // E(0) = I
      CHECK(e.at_origin({x}) == SMatrix::identity(a.dim));
      // dE/dx = M E
      SMatrix de = e.map([&](const Scalar& s) { return s.derive(x, true); });
      CHECK((de - m * e).is_zero());
      // E(x + y) = E(x) E(y)
      SMatrix ey = matrix_exponential(m, y);
      SMatrix exy = e.map([&](const Scalar& s) { return s.substitute_coord_sum(x, x, y); });
      CHECK((exy - e * ey).is_zero());
    }
  }
}
