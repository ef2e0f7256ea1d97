#include <catch2/catch_amalgamated.hpp>

#include "ccn/expr.hpp"
#include "ccn/rng.hpp"

using namespace ccn;

TEST_CASE("expression evaluation handles the coefficient grammar") {
  std::vector<double> f{2.0, 3.0, 5.0};
  CHECK(Expr::parse("f0+f1+f2").eval(f) == 10.0);
  CHECK(Expr::parse("4f1f2").eval(f) == 60.0);
  CHECK(Expr::parse("f1^2 + 4f2^2").eval(f) == 109.0);
  CHECK(Expr::parse("(f1 + f2)^2").eval(f) == 64.0);
  CHECK(Expr::parse("-f1 + 2").eval(f) == -1.0);
  CHECK(Expr::parse("- f0 - f1").eval(f) == -5.0);
  CHECK(Expr::parse("f1*f2 - f0/f1").eval(f) ==
        Catch::Approx(15.0 - 2.0 / 3.0));
  CHECK(Expr::parse("2^3").eval(f) == 8.0);
  CHECK(Expr::parse("f2").max_var() == 2);
}

TEST_CASE("division tracks the smallest denominator magnitude") {
  double md = 0;
  Expr e = Expr::parse("-f2/f1");
  std::vector<double> f{0.0, 1e-3, 5.0};
  CHECK(e.eval(f, &md) == Catch::Approx(-5000.0));
  CHECK(md == Catch::Approx(1e-3));
  // Nested divisions report the smallest of all denominators met.
  Expr e2 = Expr::parse("f0/f1/f2");
  std::vector<double> g{1.0, 4.0, 0.5};
  e2.eval(g, &md);
  CHECK(md == Catch::Approx(0.5));
}

TEST_CASE("malformed expressions are rejected") {
  CHECK_THROWS_AS(Expr::parse("f1)"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("f1 +"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("f"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("f1^f2"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("(f1"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("@"), std::invalid_argument);
}

TEST_CASE("exact evaluation flags poles and missing variables") {
  Expr e = Expr::parse("1/f1");
  CHECK_THROWS_AS(e.eval_exact({Rat(1), Rat(0)}), std::domain_error);
  CHECK(e.eval_exact({Rat(1), Rat(4)}) == Rat(1, 4));
  CHECK_THROWS_AS(Expr::parse("f5").eval_exact({Rat(1), Rat(2)}),
                  std::out_of_range);
}

TEST_CASE("linear forms round trip through their canonical text") {
  LinearForm l = linear_form_from_expr("f0 - f2", 2);
  CHECK(l.c[0] == Rat(1));
  CHECK(l.c[1] == Rat(0));
  CHECK(l.c[2] == Rat(-1));
  CHECK(to_string(l) == "f0 - f2");

  CHECK_THROWS_AS(linear_form_from_expr("f1f2", 2), std::invalid_argument);
  CHECK_THROWS_AS(linear_form_from_expr("f1 + 1", 2), std::invalid_argument);
  CHECK_THROWS_AS(linear_form_from_expr("f1^2", 2), std::invalid_argument);

  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    LinearForm a(2);
    for (auto& c : a.c) c = Rat(rng.pick(11) - 5);
    LinearForm back = linear_form_from_expr(to_string(a), 2);
    CHECK(back == a);
  }
}

TEST_CASE("quadratic forms round trip through their canonical text") {
  QuadraticForm q = quadratic_form_from_expr("4f1f2 - 8f1^2", 2);
  CHECK(q.m[1][1] == Rat(-8));
  CHECK(q.m[1][2] == Rat(2));
  CHECK(q.m[2][1] == Rat(2));
  CHECK(q.m[0][0] == Rat(0));
  // Canonical order lists the diagonal term of f1 first.
  CHECK(to_string(q) == "-8f1^2 + 4f1f2");

  CHECK(to_string(quadratic_form_from_expr("f1^2 + 4f2^2", 2)) ==
        "f1^2 + 4f2^2");
  CHECK(to_string(quadratic_form_from_expr("-3f2^2", 2)) == "-3f2^2");

  CHECK_THROWS_AS(quadratic_form_from_expr("f1 + f2", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadratic_form_from_expr("f1^2 + f1", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadratic_form_from_expr("f1^3", 2), std::invalid_argument);

  Rng rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    QuadraticForm a(2);
    for (int i = 0; i <= 2; ++i) {
      a.m[i][i] = Rat(rng.pick(11) - 5);
      for (int j = i + 1; j <= 2; ++j) {
        a.m[i][j] = Rat(rng.pick(11) - 5);
        a.m[j][i] = a.m[i][j];
      }
    }
    QuadraticForm back = quadratic_form_from_expr(to_string(a), 2);
    CHECK(back == a);
  }
}

TEST_CASE("outer products square linear forms") {
  LinearForm l = linear_form_from_expr("f1 - f2", 2);
  QuadraticForm sq = outer(l, l);
  CHECK(to_string(sq) == "f1^2 - 2f1f2 + f2^2");
  std::vector<double> f{0.0, 3.0, 5.0};
  CHECK(sq.eval(f) == Catch::Approx(4.0));
}
