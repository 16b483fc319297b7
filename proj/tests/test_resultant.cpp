#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rcfw/resultant.hpp"

using namespace rcfw;

static Poly X(int ar, int v) { return Poly::variable(ar, v); }

TEST_CASE("resultant of two linear polynomials") {
  // res_x(x - a, x - b) = a - b, variables (x, a, b)
  Poly x = X(3, 0), a = X(3, 1), b = X(3, 2);
  Poly A = x - a, B = x - b;
  CHECK(resultant_keep(A, B, 0) == a - b);
  CHECK(resultant_keep(A, B, 0) == oracle::sylvester_resultant(A, B, 0));
  // dropped-variable form lives in arity 2
  CHECK(resultant(A, B, 0) == X(2, 0) - X(2, 1));
}

TEST_CASE("resultant with a derivative") {
  // res_y(y^2 - x, 2y) = -4x
  Poly x = X(2, 0), y = X(2, 1);
  Poly A = y * y - x, B = y.scaled(Rat(2));
  Poly want = x.scaled(Rat(-4));
  CHECK(resultant_keep(A, B, 1) == want);
  CHECK(resultant_keep(A, B, 1) == oracle::sylvester_resultant(A, B, 1));
  CHECK(resultant(A, B, 1) == Poly::variable(1, 0).scaled(Rat(-4)));
}

TEST_CASE("shared factor forces a zero resultant") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly f = x + y;
  Poly A = f * (x - Poly::constant(2, Rat(1)));
  Poly B = f * (x + Poly::constant(2, Rat(2)));
  CHECK(resultant_keep(A, B, 0).is_zero());
  CHECK(oracle::sylvester_resultant(A, B, 0).is_zero());
}

TEST_CASE("degree zero in the eliminated variable") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly A = x * x * x - y;
  Poly B = Poly::constant(2, Rat(5));
  CHECK(resultant_keep(A, B, 0) == Poly::constant(2, Rat(125)));
  CHECK(resultant_keep(A, B, 0) == oracle::sylvester_resultant(A, B, 0));
  CHECK(resultant_keep(B, A, 0) == Poly::constant(2, Rat(125)));
}

TEST_CASE("swapped arguments flip by parity") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly A = x * x - y;          // degree 2 in x
  Poly B = x * y + Poly::constant(2, Rat(1));  // degree 1 in x
  Poly r1 = resultant_keep(A, B, 0);
  Poly r2 = resultant_keep(B, A, 0);
  // (-1)^(2*1) = 1
  CHECK(r1 == r2);
  CHECK(r1 == oracle::sylvester_resultant(A, B, 0));
  Poly C = x - y;
  // (-1)^(1*1) = -1
  CHECK(resultant_keep(C, B, 0) == -resultant_keep(B, C, 0));
}

static Poly random_poly(std::mt19937& rng, int ar, unsigned maxdeg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  Poly p = Poly::zero(ar);
  int terms = 2 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Poly::Expo e(static_cast<std::size_t>(ar));
    for (auto& k : e) k = deg(rng);
    int c = coef(rng);
    if (c) p.set_term(e, Rat(c));
  }
  return p;
}

TEST_CASE("random resultants agree with the sylvester determinant") {
  std::mt19937 rng(20260823);
  int done = 0;
  while (done < 40) {
    Poly A = random_poly(rng, 2, 2);
    Poly B = random_poly(rng, 2, 2);
    if (A.is_zero() || B.is_zero()) continue;
    int var = static_cast<int>(rng() % 2);
    CAPTURE(A.str());
    CAPTURE(B.str());
    CAPTURE(var);
    CHECK(resultant_keep(A, B, var) == oracle::sylvester_resultant(A, B, var));
    ++done;
  }
  // a few denser trivariate cases
  done = 0;
  while (done < 8) {
    Poly A = random_poly(rng, 3, 2);
    Poly B = random_poly(rng, 3, 1);
    if (A.is_zero() || B.is_zero()) continue;
    CHECK(resultant_keep(A, B, 2) == oracle::sylvester_resultant(A, B, 2));
    ++done;
  }
}

TEST_CASE("resultant vanishes exactly at common roots") {
  // res_y of the circle and a line through (1,0)
  Poly x = X(2, 0), y = X(2, 1);
  Poly circle = x * x + y * y - Poly::constant(2, Rat(1));
  Poly line = x + y - Poly::constant(2, Rat(1));
  Poly r = resultant(circle, line, 1);
  // intersections at x = 0 and x = 1
  CHECK(r.eval({Rat(0)}) == 0);
  CHECK(r.eval({Rat(1)}) == 0);
  CHECK(r.eval({Rat(1, 2)}) != 0);
}

TEST_CASE("principal subresultant coefficients end at the resultant") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly A = y * y + x * y - Poly::constant(2, Rat(2));
  Poly B = y.scaled(Rat(2)) + x;
  auto pcs = prs_principal_coeffs(A, B);
  // the PRS drops straight to degree 0 here, so the one recorded
  // coefficient is the resultant itself
  REQUIRE(pcs.size() == 1);
  CHECK(pcs[0] == -(x * x) - Poly::constant(2, Rat(8)));
  CHECK(pcs[0] == oracle::sylvester_resultant(A, B, 1));
  // none of the recorded polynomials may involve the last variable
  for (const Poly& c : pcs) CHECK(!c.uses_var(1));
}
