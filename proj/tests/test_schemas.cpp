#include "doctest.h"
#include "rcfw/errors.hpp"
#include "rcfw/schemas.hpp"

using namespace rcfw;

static PredicateInstance sub_inst(int n, int m, int r, Binding s) {
  PredicateInstance i;
  i.schema = SchemaId::Submanifold;
  i.n = n;
  i.m = m;
  i.r = r;
  i.set = std::move(s);
  return i;
}

static PredicateInstance bnd_inst(int n, int m, int r, Binding s) {
  PredicateInstance i = sub_inst(n, m, r, std::move(s));
  i.schema = SchemaId::Boundary;
  return i;
}

static Binding set1(const std::string& src) { return bind_set(parse_description(src)); }

TEST_CASE("selector sign tuple enumeration") {
  CHECK(selector_sign_tuples(1, Int(2)) == std::vector<std::vector<int>>{{0}});
  CHECK(selector_sign_tuples(1, Int(4)) == std::vector<std::vector<int>>{{1}});
  CHECK(selector_sign_tuples(1, Int(7)) ==
        std::vector<std::vector<int>>{{-1}, {0}, {1}});
  // first coordinate most significant: (-1, 1) is tuple index 2
  CHECK(selector_sign_tuples(2, Int(4)) == std::vector<std::vector<int>>{{-1, 1}});
  CHECK(selector_sign_tuples(2, Int(0)).empty());
  CHECK_THROWS_AS(selector_sign_tuples(1, Int(256)), std::invalid_argument);
  CHECK_THROWS_AS(selector_sign_tuples(9, Int(1)), CapacityError);
}

TEST_CASE("open interval openness sentence") {
  FormulaPtr f = compile_submanifold(sub_inst(1, 1, 0, set1("set S in R^1 := { x^2 - 1 < 0 }")));
  CHECK(free_vars(f).empty());
  REQUIRE(f->kind == Formula::Kind::ForAll);
  CHECK(f->bound == std::vector<std::string>{"x1"});
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));
}

TEST_CASE("isolation sentence for zero-dimensional sets") {
  FormulaPtr f = compile_submanifold(sub_inst(1, 0, 0, set1("set S in R^1 := { x = 0 }")));
  CHECK(free_vars(f).empty());
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));
}

TEST_CASE("graph schema over each coordinate subset") {
  FormulaPtr f = compile_submanifold(
      sub_inst(2, 1, 0, set1("set S in R^2 := { x^2 + y^2 - 1 = 0 }")));
  REQUIRE(f->kind == Formula::Kind::ForAll);
  CHECK(f->bound == std::vector<std::string>({"x1", "x2"}));
  // body is membership -> (phi_{x1} or phi_{x2})
  const FormulaPtr& body = f->kids[0];
  REQUIRE(body->kind == Formula::Kind::Or);
  const FormulaPtr& disj = body->kids[1];
  REQUIRE(disj->kind == Formula::Kind::Or);
  CHECK(disj->kids.size() == 2);
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));
}

TEST_CASE("compiled sentences are closed and stable in shape") {
  auto mk = [](const std::string& src) {
    return compile_submanifold(sub_inst(1, 1, 0, set1(src)));
  };
  FormulaPtr a = mk("set S in R^1 := { x^2 - 1 < 0 }");
  FormulaPtr b = mk("set S in R^1 := { x^2 - 2*x < 0 }");
  CHECK(same_shape(a, b));
  CHECK(!f_equal(a, b));
  FormulaPtr c = compile_submanifold(
      sub_inst(2, 1, 0, set1("set S in R^2 := { x^2 + y^2 - 1 = 0 }")));
  FormulaPtr d = compile_submanifold(
      sub_inst(2, 1, 0, set1("set S in R^2 := { x^2 + 2*y^2 - 1 = 0 }")));
  CHECK(same_shape(c, d));
}

TEST_CASE("differentiability clause emits and round trips") {
  FormulaPtr f = compile_submanifold(
      sub_inst(2, 1, 1, set1("set S in R^2 := { x^2 + y^2 - 1 = 0 }")));
  CHECK(free_vars(f).empty());
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));
  // the C^1 sentence strictly extends the C^0 one
  FormulaPtr f0 = compile_submanifold(
      sub_inst(2, 1, 0, set1("set S in R^2 := { x^2 + y^2 - 1 = 0 }")));
  CHECK(!same_shape(f, f0));
}

TEST_CASE("boundary sentence shapes") {
  Binding seg = set1("set S in R^1 := { x^2 - 1 < 0 } | { x^2 - 1 = 0 }");
  Binding ends = set1("set T in R^1 := { x^2 - 1 = 0 }");
  FormulaPtr f = compile_boundary(bnd_inst(1, 1, 0, seg), ends);
  CHECK(free_vars(f).empty());
  REQUIRE(f->kind == Formula::Kind::And);
  CHECK(f->kids.size() == 2);
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));

  // every builder path: interior-only collar (n = m), z-coordinates, and
  // the first-derivative clauses with the collar re-coordinatization
  Binding disk = set1("set S in R^2 := { x^2 + y^2 - 1 < 0 } | { x^2 + y^2 - 1 = 0 }");
  Binding circ = set1("set T in R^2 := { x^2 + y^2 - 1 = 0 }");
  FormulaPtr g = compile_boundary(bnd_inst(2, 2, 0, disk), circ);
  CHECK(f_equal(parse_formula_sexpr(serialize(g)), g));
  FormulaPtr h = compile_boundary(bnd_inst(2, 1, 1, circ), set1("set T in R^2 := { x = 0, y = 0 }"));
  CHECK(f_equal(parse_formula_sexpr(serialize(h)), h));
  Binding cap = set1("set S in R^3 := { x^2 + y^2 + z^2 - 1 = 0, z > 0 } | { x^2 + y^2 + z^2 - 1 = 0, z = 0 }");
  Binding rim = set1("set T in R^3 := { x^2 + y^2 - 1 = 0, z = 0 }");
  FormulaPtr k = compile_boundary(bnd_inst(3, 2, 1, cap), rim);
  CHECK(free_vars(k).empty());
  CHECK(f_equal(parse_formula_sexpr(serialize(k)), k));
}

TEST_CASE("schema validation errors") {
  Binding s = set1("set S in R^1 := { x > 0 }");
  CHECK_THROWS_AS(compile_submanifold(sub_inst(1, 2, 0, s)), std::invalid_argument);
  CHECK_THROWS_AS(compile_submanifold(sub_inst(1, 1, 2, s)), UnsupportedError);
  CHECK_THROWS_AS(compile_boundary(bnd_inst(1, 0, 0, s), s), UnsupportedError);
  CHECK_THROWS_AS(compile_submanifold(bnd_inst(1, 1, 0, s)), std::invalid_argument);
  CHECK_THROWS_AS(compile_submanifold(sub_inst(2, 1, 0, s)), std::invalid_argument);
  PredicateInstance nash = sub_inst(1, 1, 0, s);
  nash.nash = true;
  nash.nash_l = 5;
  CHECK_THROWS_AS(compile_submanifold(nash), UnsupportedError);
  nash.nash_l = 1;
  CHECK(compile_submanifold(nash) != nullptr);
}

TEST_CASE("symbolic membership matches the decoded set") {
  // one block, degree 2, sign condition { P > 0 }
  Binding sym = bind_symbol("a", 1, 1, 2, Int(4));
  FormulaPtr mem = bound_membership(sym, {"x"});
  CHECK(free_vars(mem) == std::set<std::string>{"a_0_0", "a_0_1", "a_0_2", "x"});

  ParamPoint pp;
  pp.n = 1;
  pp.p = 1;
  pp.q = 2;
  pp.blocks = {{Rat(-1), Rat(0), Rat(1)}};  // x^2 - 1
  pp.selector = 4;
  SaDescription dec = decode(pp);
  for (int num = -8; num <= 8; ++num) {
    Rat xv(num, 3);
    std::map<std::string, Rat> asg = {
        {"a_0_0", Rat(-1)}, {"a_0_1", Rat(0)}, {"a_0_2", Rat(1)}, {"x", xv}};
    CHECK(eval_qf(mem, asg) == member(dec, {xv}));
  }
}

TEST_CASE("symbolic membership with two blocks") {
  // tuples (0, 1) and (1, 1): bit 1*3+2 = 5 and 2*3+2 = 8
  Int sel = (Int(1) << 5) | (Int(1) << 8);
  Binding sym = bind_symbol("b", 1, 2, 1, sel);
  FormulaPtr mem = bound_membership(sym, {"x"});

  ParamPoint pp;
  pp.n = 1;
  pp.p = 2;
  pp.q = 1;
  pp.blocks = {{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}};  // x and 1 - x
  pp.selector = sel;
  SaDescription dec = decode(pp);
  for (int num = -6; num <= 6; ++num) {
    Rat xv(num, 2);
    std::map<std::string, Rat> asg = {{"b_0_0", Rat(0)},
                                      {"b_0_1", Rat(1)},
                                      {"b_1_0", Rat(1)},
                                      {"b_1_1", Rat(-1)},
                                      {"x", xv}};
    CHECK(eval_qf(mem, asg) == member(dec, {xv}));
  }
}

TEST_CASE("symbolic submanifold sentence is closed in the point variables") {
  Binding sym = bind_symbol("a", 1, 1, 2, Int(4));
  FormulaPtr f = compile_submanifold(sub_inst(1, 1, 0, sym));
  auto fv = free_vars(f);
  CHECK(fv == std::set<std::string>{"a_0_0", "a_0_1", "a_0_2"});
  CHECK(f_equal(parse_formula_sexpr(serialize(f)), f));
}

TEST_CASE("homeomorphism clause list") {
  Binding X = set1("set X in R^1 := { x = 0 }");
  Binding Y = set1("set Y in R^1 := { x = 0 }");
  Binding G = set1("set G in R^2 := { x = 0, y = 0 }");
  auto cls = homeo_clauses(X, Y, G, 1);
  REQUIRE(cls.size() == 7);
  for (const auto& c : cls) {
    CHECK(free_vars(c).empty());
    CHECK(f_equal(parse_formula_sexpr(serialize(c)), c));
  }
  FormulaPtr lam = compile_homeomorphism(X, Y, G, 1);
  REQUIRE(lam->kind == Formula::Kind::And);
  CHECK(lam->kids.size() == 7);
  CHECK_THROWS_AS(homeo_clauses(X, Y, Y, 1), std::invalid_argument);
}

TEST_CASE("symbolic homeomorphism free variable families") {
  FormulaPtr lam = compile_homeomorphism("fa", "fb", "fc", 1);
  bool a = false, b = false, c = false;
  for (const auto& v : free_vars(lam)) {
    if (v.rfind("fa_", 0) == 0)
      a = true;
    else if (v.rfind("fb_", 0) == 0)
      b = true;
    else if (v.rfind("fc_", 0) == 0)
      c = true;
    else
      FAIL("unexpected free variable ", v);
  }
  CHECK(a);
  CHECK(b);
  CHECK(c);
  CHECK(f_equal(parse_formula_sexpr(serialize(lam)), lam));
}

TEST_CASE("collapse clause list") {
  Binding X = set1("set X in R^1 := { x > 0, x - 1 < 0 } | { x = 0 } | { x - 1 = 0 }");
  Binding Y = set1("set Y in R^1 := { x = 0 }");
  Binding G = set1("set G in R^2 := { y - x = 0, x > 0, x - 1 < 0 } | { y - x = 0, x = 0 } | { y - x = 0, x - 1 = 0 }");
  auto cls = collapse_clauses(X, Y, G, 1);
  REQUIRE(cls.size() == 9);
  for (const auto& c : cls) {
    CHECK(free_vars(c).empty());
    CHECK(f_equal(parse_formula_sexpr(serialize(c)), c));
  }
  FormulaPtr beta = compile_collapse("ga", "gb", "gc", 1);
  bool a = false, b = false, c2 = false;
  for (const auto& v : free_vars(beta)) {
    if (v.rfind("ga_", 0) == 0)
      a = true;
    else if (v.rfind("gb_", 0) == 0)
      b = true;
    else if (v.rfind("gc_", 0) == 0)
      c2 = true;
    else
      FAIL("unexpected free variable ", v);
  }
  CHECK((a && b && c2));
}
