#include <doctest.h>

#include "superbialg/report.hpp"

using namespace sbg;

TEST_CASE("algebra JSON round trip") {
  SuperAlgebra b = registry("C^1_{1/2}");
  std::string text = algebra_to_json(b);
  SuperAlgebra back = algebra_from_json(text);
  CHECK(back.dim == b.dim);
  CHECK(back.grading == b.grading);
  for (int k = 0; k < b.dim; ++k)
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) CHECK(back.fc(k, i, j) == b.fc(k, i, j));
  CHECK(validate(back).empty());
}

TEST_CASE("corrupted algebra file fails validation") {
  std::string corrupt = R"({
    "name": "broken",
    "dim": 3,
    "grading": ["even", "even", "odd"],
    "brackets": [
      {"i": 1, "j": 2, "k": 2, "coeff": "1"},
      {"i": 3, "j": 3, "k": 1, "coeff": "1"}
    ]
  })";
  SuperAlgebra a = algebra_from_json(corrupt);
  CHECK_FALSE(validate(a).empty());
}

TEST_CASE("matrix parsing helper") {
  SMatrix m = parse_matrix(2, 2, "1,-psi;0,-exp(-x)");
  CHECK(m.at(0, 1) == parse_scalar("-psi"));
  CHECK(m.at(1, 1) == parse_scalar("-exp(-x)"));
  CHECK_THROWS_AS(parse_matrix(2, 2, "1;2"), std::invalid_argument);
}

TEST_CASE("serializers are stable") {
  auto b = bialgebra_from_pair_name("(B,(A_{1,1}+A))");
  auto set = solve_coboundary(b, Side::dual);
  std::string once = solution_set_json_string(set);
  std::string twice = solution_set_json_string(solve_coboundary(b, Side::dual));
  CHECK(once == twice);
  CHECK(once.find("\"consistent\": true") != std::string::npos);
}

TEST_CASE("grammar accepts the documented forms") {
  CHECK(parse_scalar("3/4") == Scalar(Rational(3, 4)));
  CHECK(parse_scalar("2*x - 1/2*psi*chi + exp(-x)*cos(2*x)") ==
        parse_scalar("exp(-x)*cos(2*x) + 2*x - 1/2*psi*chi"));
  CHECK_THROWS(parse_scalar("q"));       // undeclared symbol
  CHECK_THROWS(parse_scalar("exp(psi)")); // odd coordinate in exp
  CHECK_THROWS(parse_scalar("cos(x*y)")); // nonlinear trig argument
}
