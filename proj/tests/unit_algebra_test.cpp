#include <doctest.h>

#include <random>

#include "superbialg/superalgebra.hpp"

using namespace sbg;

namespace {

SuperAlgebra abelian(int dim, const std::string& grading) {
  SuperAlgebra a;
  a.name = "abelian";
  a.dim = dim;
  for (char c : grading) a.grading.push_back(c == 'o' ? Parity::odd : Parity::even);
  a.f.assign(static_cast<std::size_t>(dim * dim * dim), Scalar());
  return a;
}

// second product with the (-1)^k sign inside the contraction
SMatrix signed_product(const SMatrix& a, const SMatrix& b, const std::vector<Parity>& inner) {
  SMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (int k = 0; k < a.cols(); ++k) {
        Scalar t = a.at(i, k) * b.at(k, j);
        if (parity_int(inner[static_cast<std::size_t>(k)])) t = -t;
        acc += t;
      }
      r.at(i, j) = acc;
    }
  return r;
}

} // namespace

TEST_CASE("validate: catalog algebras pass, mutants fail") {
  CHECK(validate(registry("B")).empty());
  CHECK(validate(abelian(3, "eoo")).empty());
  for (const auto& name : registry_names()) CHECK_MESSAGE(validate(registry(name)).empty(), name);

  // (A_{1,1}+A) plus an extra [X1,X2] = X2 breaks the super Jacobi identity
  SuperAlgebra mutant = registry("(A_{1,1}+A)");
  mutant.set_bracket(0, 1, 1, Scalar(1));
  ValidationReport rep = validate(mutant);
  bool found = false;
  for (const auto& v : rep)
    if (v.rule == "jacobi" && v.indices.size() == 4 && v.indices[1] == 0 && v.indices[2] == 1 &&
        v.indices[3] == 1)
      found = true;
  CHECK(found);

  // direct antisymmetry violation
  SuperAlgebra bad = abelian(2, "eo");
  bad.fc(1, 0, 1) = Scalar(1); // f^2_{12} without the partner entry
  bool anti = false;
  for (const auto& v : validate(bad))
    if (v.rule == "antisymmetry") anti = true;
  CHECK(anti);

  // grading violation: odd bracket landing on an even generator
  SuperAlgebra bad2 = abelian(2, "eo");
  bad2.fc(1, 0, 0) = Scalar(1); // [X1,X1] ~ X2 is even-even -> odd
  bool grading = false;
  for (const auto& v : validate(bad2))
    if (v.rule == "grading") grading = true;
  CHECK(grading);
}

TEST_CASE("adjoint matrices") {
  SuperAlgebra b = registry("B");
  SMatrix ad1 = adjoint(b, 0);
  CHECK(ad1.at(1, 1) == Scalar(Rational(-1)));
  CHECK(ad1.at(0, 0).is_zero());
  CHECK(adjoint(abelian(2, "eo"), 1).is_zero());
  CHECK_THROWS_AS(adjoint(b, 5), std::out_of_range);

  SuperAlgebra c5 = registry("C^5_p");
  SMatrix a1 = adjoint(c5, 0);
  CHECK(a1.at(1, 1) == parse_scalar("-p"));
  CHECK(a1.at(1, 2) == parse_scalar("1"));
  CHECK(a1.at(2, 1) == parse_scalar("-1"));
  CHECK(a1.at(2, 2) == parse_scalar("-p"));
}

TEST_CASE("adjoint matrices represent the bracket") {
  for (const auto& name : registry_names()) {
    SuperAlgebra a = registry(name);
    auto gr = [&](int i) { return parity_int(a.grading[static_cast<std::size_t>(i)]); };
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        SMatrix lhs = ad_matrix(a, i) * ad_matrix(a, j);
        SMatrix rhs_swap = ad_matrix(a, j) * ad_matrix(a, i);
        SMatrix comm = (gr(i) && gr(j)) ? lhs + rhs_swap : lhs - rhs_swap;
        SMatrix expect(a.dim, a.dim);
        for (int k = 0; k < a.dim; ++k) expect = expect + ad_matrix(a, k).scaled(a.fc(k, i, j));
        CHECK_MESSAGE((comm - expect).is_zero(), name);
      }
  }
}

TEST_CASE("supertranspose") {
  SuperAlgebra b = registry("B");
  SMatrix z(2, 2);
  z.set_gradings(b.grading, b.grading);
  CHECK(z.supertranspose().is_zero());

  // purely even gradings: ordinary transpose
  SMatrix m(2, 2);
  m.set_gradings({Parity::even, Parity::even}, {Parity::even, Parity::even});
  m.at(0, 1) = parse_scalar("p");
  SMatrix t = m.supertranspose();
  CHECK(t.at(1, 0) == parse_scalar("p"));

  // involution and the product rule on random graded 3x3 matrices:
  // (AB)^st = B^st * A^st with the (-1)^k sign inside the contraction
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<Parity> g = {Parity::even, Parity::even, Parity::odd};
  auto random_graded = [&]() {
    SMatrix a(3, 3);
    a.set_gradings(g, g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int par = (parity_int(g[static_cast<std::size_t>(i)]) + parity_int(g[static_cast<std::size_t>(j)])) % 2;
        Scalar s(Rational(coeff(rng)));
        if (par) s = s * Scalar::symbol("psi");
        a.at(i, j) = s;
      }
    return a;
  };
  for (int trial = 0; trial < 10; ++trial) {
    SMatrix a = random_graded();
    SMatrix bm = random_graded();
    CHECK(a.supertranspose().supertranspose() == a);
    SMatrix lhs = (a * bm).supertranspose();
    SMatrix rhs = signed_product(bm.supertranspose(), a.supertranspose(), g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("registry contents") {
  SuperAlgebra b = registry("B");
  CHECK(b.dim == 2);
  CHECK(b.grading == std::vector<Parity>{Parity::even, Parity::odd});
  CHECK(b.fc(1, 0, 1) == Scalar(1));

  SuperAlgebra a2 = registry("(A_{1,1}+2A)^2");
  CHECK(a2.fc(0, 1, 1) == Scalar(1));
  CHECK(a2.fc(0, 2, 2) == Scalar(Rational(-1)));

  SuperAlgebra c0k = registry("C^1_{0,k}");
  CHECK(c0k.fc(1, 0, 1) == parse_scalar("k"));
  CHECK_FALSE(c0k.constraints.empty());

  CHECK_THROWS_AS(registry("nope"), std::out_of_range);
  CHECK(registry_pairs().size() == 74);
  int t11 = 0;
  for (const auto& p : registry_pairs())
    if (p.type == "(1,1)") ++t11;
  CHECK(t11 == 4);
}

TEST_CASE("parameter binding respects constraints") {
  CHECK_THROWS_AS(registry("C^1_p").bind_params({{sym("p"), Rational(0)}}), std::invalid_argument);
  SuperAlgebra c1 = registry("C^1_p").bind_params({{sym("p"), Rational(1)}});
  CHECK(c1.fc(2, 0, 2) == Scalar(1));
}
