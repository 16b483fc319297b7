#include "doctest.h"
#include "oracles.hpp"
#include "rcfw/poly.hpp"
#include "rcfw/rat.hpp"
#include "rcfw/univar.hpp"

using namespace rcfw;

TEST_CASE("rational parsing") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-7") == Rat(-7));
  CHECK(rat_parse("+2/6") == Rat(1, 3));
  CHECK(rat_parse("0/5") == Rat(0));
  CHECK(!rat_parse("1/0"));
  CHECK(!rat_parse("abc"));
  CHECK(!rat_parse("1.5"));
  CHECK(!rat_parse("3/"));
  CHECK(!rat_parse(""));
  CHECK(!rat_parse("2 "));
  CHECK(rat_str(Rat(-3, 7)) == "-3/7");
  CHECK(rat_str(Rat(5)) == "5");
}

TEST_CASE("powers") {
  CHECK(rat_pow(Rat(2, 3), 4) == Rat(16, 81));
  CHECK(rat_pow(Rat(-2), 3) == Rat(-8));
  CHECK(rat_pow(Rat(5), 0) == Rat(1));
  CHECK(int_pow(Int(3), 5) == Int(243));
}

TEST_CASE("binomials against factorials") {
  for (unsigned n = 0; n <= 16; ++n)
    for (unsigned k = 0; k <= n + 2; ++k)
      CHECK(binomial_int(n, k) == oracle::binomial_via_factorials(n, k));
  CHECK(binomial_int(6, 2) == 15);   // block length for n=2, q=2
  CHECK(binomial_int(6, 3) == 20);   // n=3, q=3
  CHECK(binomial_int(30, 15) == Int("155117520"));
}

static Poly X(int ar, int v) { return Poly::variable(ar, v); }

TEST_CASE("poly arithmetic identities") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly a = x * x + y.scaled(Rat(2)) - Poly::constant(2, Rat(1));
  Poly b = x * y - Poly::constant(2, Rat(3));
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a * b).degree() == a.degree() + b.degree());
  CHECK(-(-a) == a);
  CHECK(a - a == Poly::zero(2));
  CHECK(a * Poly::zero(2) == Poly::zero(2));
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("poly degree conventions") {
  CHECK(Poly::zero(2).degree() == 0);
  CHECK(Poly::constant(2, Rat(5)).degree() == 0);
  Poly x = X(2, 0), y = X(2, 1);
  Poly p = x * x * y + y.pow(4);
  CHECK(p.degree() == 4);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 4);
  CHECK(p.uses_var(0));
  CHECK(!(x * x).uses_var(1));
  CHECK((x * x).effective_arity() == 1);
  CHECK(Poly::constant(3, Rat(2)).effective_arity() == 0);
}

TEST_CASE("poly eval, derivative, substitute") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly p = x.pow(3) * y - x.scaled(Rat(1, 2)) + Poly::constant(2, Rat(4));
  CHECK(p.eval({Rat(2), Rat(3)}) == Rat(2 * 2 * 2 * 3) - Rat(1) + Rat(4));
  CHECK(p.derivative(0) == x * x * y.scaled(Rat(3)) - Poly::constant(2, Rat(1, 2)));
  CHECK(p.derivative(1) == x.pow(3));
  Poly q = p.substitute(1, Rat(2));
  CHECK(q.eval({Rat(5), Rat(77)}) == p.eval({Rat(5), Rat(2)}));
  CHECK(!q.uses_var(1));
}

TEST_CASE("poly arity surgery") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly p = x * x + y.scaled(Rat(3));
  Poly p3 = p.pad_arity(3);
  CHECK(p3.arity() == 3);
  CHECK(p3.drop_unused_above(2) == p);
  // swap the two variables
  Poly sw = p.permute_vars({1, 0});
  CHECK(sw == X(2, 1) * X(2, 1) + X(2, 0).scaled(Rat(3)));
  CHECK(sw.permute_vars({1, 0}) == p);
}

TEST_CASE("poly last_coeffs round trip") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly p = x * y * y + y * y - x + Poly::constant(2, Rat(7));
  auto cs = p.last_coeffs();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].arity() == 1);
  CHECK(cs[2] == Poly::variable(1, 0) + Poly::constant(1, Rat(1)));
  CHECK(Poly::from_last_coeffs(2, cs) == p);
}

TEST_CASE("poly content and canonical form") {
  Poly x = X(1, 0);
  Poly p = x * x.scaled(Rat(-2, 3)) - Poly::constant(1, Rat(4, 3));
  CHECK(p.content() == Rat(2, 3));
  int sg = 0;
  Poly c = p.canonical(&sg);
  CHECK(c == x * x + Poly::constant(1, Rat(2)));
  CHECK(sg == -1);
  CHECK(Poly::zero(2).canonical() == Poly::zero(2));
  // canonical of an already canonical poly is itself with sign +1
  Poly d = c.canonical(&sg);
  CHECK(d == c);
  CHECK(sg == 1);
}

TEST_CASE("poly printing") {
  Poly x = X(2, 0), y = X(2, 1);
  Poly p = (x * x * y).scaled(Rat(3)) - Poly::constant(2, Rat(1, 2));
  CHECK(p.str() == "3*x^2*y - 1/2");
  CHECK(Poly::zero(2).str() == "0");
  CHECK((y - x).str() == "-x + y");
  CHECK(X(1, 0).str() == "x");
  CHECK(X(4, 3).str() == "x4");
}

TEST_CASE("monomial enumeration matches binomial counts") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned q = 0; q <= 4; ++q) {
      auto ms = monomials_upto(n, q);
      CHECK(Int(static_cast<long>(ms.size())) ==
            oracle::binomial_via_factorials(static_cast<unsigned>(n) + q, q));
      CHECK(std::is_sorted(ms.begin(), ms.end()));
      CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
    }
  // frozen order for n=2, q=2
  std::vector<Poly::Expo> want = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  CHECK(monomials_upto(2, 2) == want);
}

static UPoly up(std::initializer_list<long> cs) {
  UPoly u;
  for (long c : cs) u.push_back(Rat(c));
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

TEST_CASE("univariate division and gcd") {
  UPoly a = up({-1, 0, 1});  // x^2 - 1
  UPoly b = up({-1, 1});     // x - 1
  auto [q, r] = updivrem(a, b);
  CHECK(q == up({1, 1}));
  CHECK(upzero(r));
  CHECK(updiv_exact(a, b) == up({1, 1}));
  CHECK(upgcd(a, b) == up({-1, 1}));
  CHECK(upgcd(up({1, 0, 1}), up({-1, 1})) == up({1}));  // coprime -> 1
  // gcd is monic regardless of input scaling
  CHECK(upgcd(upscale(a, Rat(6)), upscale(b, Rat(-2, 7))) == up({-1, 1}));
}

TEST_CASE("square-free part") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  UPoly p = up({2, -3, 0, 1});
  CHECK(upsquarefree(p) == up({-2, 1, 1}));  // (x-1)(x+2)
  CHECK(upsquarefree(up({-2, 0, 1})) == up({-2, 0, 1}));
}

TEST_CASE("sturm counts") {
  UPoly p = up({0, -1, 0, 1});  // x^3 - x, roots -1, 0, 1
  SturmChain ch = sturm_chain(p);
  CHECK(sturm_count(ch, Rat(-2), Rat(2)) == 3);
  CHECK(sturm_count(ch, Rat(-1), Rat(1)) == 2);  // half open: -1 excluded
  CHECK(sturm_count(ch, Rat(-1), Rat(0)) == 1);
  CHECK(sturm_count(ch, Rat(1), Rat(5)) == 0);
  CHECK(sturm_count_all(ch) == 3);
  CHECK(sturm_count_below(ch, Rat(0)) == 2);
  CHECK(sturm_count_above(ch, Rat(0)) == 1);
  SturmChain c2 = sturm_chain(up({2, 0, 1}));  // x^2 + 2, no real roots
  CHECK(sturm_count_all(c2) == 0);
}

TEST_CASE("cauchy bound") {
  CHECK(cauchy_root_bound(up({-2, 0, 1})) == Rat(3));
  CHECK(cauchy_root_bound(up({6, -11, 0, 2})) == Rat(1) + Rat(11, 2));
}

TEST_CASE("root isolation") {
  UPoly p = up({-2, 0, 1});  // x^2 - 2
  auto ivs = isolate_upoly_roots(p);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].hi <= ivs[1].lo);
  CHECK(upeval(p, ivs[0].lo) * upeval(p, ivs[0].hi) < 0);
  CHECK(upeval(p, ivs[1].lo) * upeval(p, ivs[1].hi) < 0);

  // rational root hit exactly by bisection midpoint
  UPoly q = up({0, -2, 0, 1});  // x(x^2 - 2)
  auto jv = isolate_upoly_roots(q);
  REQUIRE(jv.size() == 3);
  CHECK(jv[1].exact());
  CHECK(jv[1].lo == Rat(0));
  CHECK(jv[0].hi < 0);
  CHECK(jv[2].lo > 0);

  SUBCASE("many roots stay separated") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    UPoly r = up({-6, 11, -6, 1});
    auto kv = isolate_upoly_roots(r);
    REQUIRE(kv.size() == 3);
    SturmChain ch = sturm_chain(r);
    for (int i = 0; i < 3; ++i) {
      if (kv[i].exact())
        CHECK(upeval(r, kv[i].lo) == 0);
      else
        CHECK(sturm_count(ch, kv[i].lo, kv[i].hi) == 1);
    }
    CHECK(kv[0].hi <= kv[1].lo);
    CHECK(kv[1].hi <= kv[2].lo);
  }
}
