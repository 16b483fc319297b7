#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"
#include "rcfw/cad.hpp"
#include "rcfw/errors.hpp"
#include "rcfw/formula.hpp"
#include "rcfw/resultant.hpp"
#include "rcfw/sa.hpp"

using namespace rcfw;

static Poly X(int ar, int v) { return Poly::variable(ar, v); }
static Poly C(int ar, long c) { return Poly::constant(ar, Rat(c)); }
static Rat frac(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

static Poly circle_poly() { return X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1) - C(2, 1); }

static std::vector<int> stack_sizes(const CadTree& t) {
  std::vector<int> out;
  for (const CadCell& c : t.cells) {
    int b = c.path[0];
    if ((int)out.size() <= b) out.resize(b + 1, 0);
    out[b]++;
  }
  return out;
}

static std::map<int, int> dim_histogram(const CadTree& t) {
  std::map<int, int> h;
  for (const CadCell& c : t.cells) h[c.dim]++;
  return h;
}

static void check_same_tree(const CadTree& a, const CadTree& b) {
  CHECK(a.n == b.n);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const CadCell &ca = a.cells[i], &cb = b.cells[i];
    CHECK(ca.path == cb.path);
    CHECK(ca.section == cb.section);
    CHECK(ca.signs == cb.signs);
    CHECK(ca.dim == cb.dim);
    REQUIRE(ca.sample.size() == cb.sample.size());
    for (std::size_t k = 0; k < ca.sample.size(); ++k) {
      CHECK(AlgReal::compare(ca.sample[k], cb.sample[k]) == 0);
      CHECK(ca.sample[k].defining_upoly() == cb.sample[k].defining_upoly());
    }
  }
}

TEST_CASE("multivariate gcd on constructed products") {
  // univariate, non-monic common factor survives normalization
  Poly x = X(1, 0);
  Poly f = x.scaled(Rat(2)) - C(1, 1);  // 2x - 1
  CHECK(gcd_mv(f * (x + C(1, 1)), f * (x - C(1, 5))) == f);
  // bivariate
  Poly u = X(2, 0), v = X(2, 1);
  CHECK(gcd_mv((u + v) * (u - v), (u + v) * (u + C(2, 1))) == u + v);
  CHECK(gcd_mv(u * u + v * v + C(2, 1), u - v) == C(2, 1));
  // common factor hiding in the top-variable content
  CHECK(gcd_mv(v * (u + C(2, 1)), v * (u - C(2, 1))) == v);
  // multiplicities
  Poly w = u + v;
  CHECK(gcd_mv(w * w, w * w * w) == w * w);
  // trivariate
  Poly a = X(3, 0), b = X(3, 1), c = X(3, 2);
  Poly s = a + b + c;
  CHECK(gcd_mv(s * (a * b * c + C(3, 1)), s * (c * c + a)) == s);
  // degenerate inputs
  CHECK(gcd_mv(f * f, Poly::zero(1)) == (f * f));
  CHECK(gcd_mv(Poly::zero(2), Poly::zero(2)).is_zero());
  CHECK(gcd_mv(C(2, 5), u * v) == C(2, 1));
}

TEST_CASE("decomposition of the line by one linear polynomial") {
  CadTree t = decompose({X(1, 0)}, 1);
  REQUIRE(t.cells.size() == 3);
  CHECK(t.cells[0].signs == std::vector<int>{-1});
  CHECK(t.cells[1].signs == std::vector<int>{0});
  CHECK(t.cells[2].signs == std::vector<int>{1});
  CHECK(t.cells[0].dim == 1);
  CHECK(t.cells[1].dim == 0);
  CHECK(t.cells[2].dim == 1);
  CHECK(t.cells[1].sample[0].is_rat());
  CHECK(t.cells[1].sample[0].rat_value() == 0);
}

TEST_CASE("decomposition induced by the unit circle") {
  CadTree t = decompose({circle_poly()}, 2);
  REQUIRE(t.cells.size() == 13);
  CHECK(stack_sizes(t) == std::vector<int>{1, 3, 5, 3, 1});
  std::map<int, int> dims = dim_histogram(t);
  CHECK(dims[0] == 2);
  CHECK(dims[1] == 6);
  CHECK(dims[2] == 5);
  // every sample here lands on a rational point
  for (const CadCell& c : t.cells)
    for (const AlgReal& s : c.sample) CHECK(s.is_rat());
  // the only negative cell is the middle of the inner stack
  std::vector<int> neg, zer;
  for (int i = 0; i < 13; ++i) {
    if (t.cells[i].signs[0] < 0) neg.push_back(i);
    if (t.cells[i].signs[0] == 0) zer.push_back(i);
  }
  CHECK(neg == std::vector<int>{6});
  CHECK(zer == std::vector<int>{2, 5, 7, 10});

  SaDescription disk = parse_description("set D in R^2 := { x^2 + y^2 - 1 < 0 }");
  CHECK(set_cells(t, disk) == std::vector<int>{6});
  SaDescription rim = parse_description("set C in R^2 := { x^2 + y^2 - 1 = 0 }");
  CHECK(set_cells(t, rim) == std::vector<int>{2, 5, 7, 10});

  CHECK(locate(t, {Rat(0), Rat(0)}) == 6);
  CHECK(locate(t, {Rat(1), Rat(0)}) == 10);
  CHECK(t.cells[10].dim == 0);
  CHECK(locate(t, {Rat(1), Rat(5)}) == 11);
  CHECK(locate(t, {Rat(-7), Rat(-7)}) == 0);
}

TEST_CASE("decomposition with no input polynomials") {
  SaDescription none = parse_description("set E in R^2 := empty");
  CadTree t = decompose_for(none);
  REQUIRE(t.cells.size() == 1);
  CHECK(t.cells[0].dim == 2);
  CHECK(set_cells(t, none).empty());
  CHECK(dimension(none) == -1);
  CHECK(is_empty(none));
}

TEST_CASE("decomposition of the unit sphere") {
  Poly sphere =
      X(3, 0) * X(3, 0) + X(3, 1) * X(3, 1) + X(3, 2) * X(3, 2) - C(3, 1);
  CadTree t = decompose({sphere}, 3);
  REQUIRE(t.cells.size() == 25);
  std::map<int, int> dims = dim_histogram(t);
  CHECK(dims[0] == 2);
  CHECK(dims[1] == 6);
  CHECK(dims[2] == 10);
  CHECK(dims[3] == 7);
  for (const CadCell& c : t.cells)
    for (const AlgReal& s : c.sample) CHECK(s.is_rat());
  SaDescription shell =
      parse_description("set S in R^3 := { x^2 + y^2 + z^2 - 1 = 0 }");
  CHECK(dimension(shell) == 2);
  CHECK(!is_empty(shell));
  SaDescription nowhere =
      parse_description("set N in R^3 := { x^2 + y^2 + z^2 + 1 = 0 }");
  CHECK(dimension(nowhere) == -1);
}

TEST_CASE("input vanishing identically over a base point") {
  // x*z + y vanishes on the whole z-line over the origin of the (x, y) plane
  Poly f = X(3, 0) * X(3, 2) + X(3, 1);
  CadTree t = decompose({f}, 3);
  CHECK(t.cells.size() == 21);
  int at = locate(t, {Rat(0), Rat(0), Rat(0)});
  CHECK(t.cells[at].signs[0] == 0);
  CHECK(t.cells[at].dim == 1);
  // elsewhere over x = 0 the input is constant in z
  int side = locate(t, {Rat(0), Rat(2), Rat(9)});
  CHECK(t.cells[side].signs[0] == 1);
}

TEST_CASE("squarefree reduction keeps the cell structure") {
  Poly c2 = circle_poly() * circle_poly();
  CadTree t = decompose({c2}, 2);
  REQUIRE(t.cells.size() == 13);
  CHECK(stack_sizes(t) == std::vector<int>{1, 3, 5, 3, 1});
  // the square never goes negative
  for (const CadCell& c : t.cells) CHECK(c.signs[0] >= 0);
  CHECK(t.cells[6].signs[0] == 1);
  CHECK(t.cells[7].signs[0] == 0);
}

TEST_CASE("membership and location agree on a rational grid") {
  SaDescription d = parse_description(
      "set S in R^2 := { x^2 + y^2 - 1 < 0 } | { x^2 + y^2 - 1 = 0, x > 0 }");
  CadTree t = decompose_for(d);
  std::vector<int> sel = set_cells(t, d);
  std::set<int> inset(sel.begin(), sel.end());
  std::vector<Rat> grid = {Rat(-2), Rat(-1), frac(-1, 2), Rat(0), frac(1, 2), Rat(1), Rat(2)};
  for (const Rat& gx : grid)
    for (const Rat& gy : grid) {
      int cell = locate(t, {gx, gy});
      CHECK(member(d, {gx, gy}) == (inset.count(cell) > 0));
    }
}

TEST_CASE("adjacent cells on the line") {
  CadTree t = decompose({X(1, 0) * X(1, 0) - C(1, 1)}, 1);
  REQUIRE(t.cells.size() == 5);
  std::vector<std::pair<int, int>> want = {{0, 1}, {2, 1}, {2, 3}, {4, 3}};
  CHECK(frontier_pairs(t) == want);
}

TEST_CASE("adjacent cells around the circle") {
  CadTree t = decompose({circle_poly()}, 2);
  std::vector<std::pair<int, int>> fp = frontier_pairs(t);
  std::set<std::pair<int, int>> edges(fp.begin(), fp.end());
  // closures only reach lower-dimensional cells
  for (const auto& [a, b] : edges) CHECK(t.cells[a].dim > t.cells[b].dim);
  // the open disk touches both arcs and both poles
  for (int b : {2, 5, 7, 10}) CHECK(edges.count({6, b}) > 0);
  // the far left region closes onto the whole left pole stack
  CHECK(edges.count({0, 1}) > 0);
  CHECK(edges.count({0, 2}) > 0);
  CHECK(edges.count({0, 3}) > 0);
  // the region under the lower arc sweeps from pole to pole
  for (int b : {1, 2, 9, 10}) CHECK(edges.count({4, b}) > 0);
  // the region above the upper arc never reaches the lower rays
  CHECK(edges.count({8, 1}) == 0);
  CHECK(edges.count({8, 2}) > 0);
  CHECK(edges.count({8, 3}) > 0);
  // arcs end at the poles
  CHECK(edges.count({5, 2}) > 0);
  CHECK(edges.count({5, 10}) > 0);
  CHECK(edges.count({7, 2}) > 0);
  CHECK(edges.count({7, 10}) > 0);
}

TEST_CASE("connected component counts in low dimension") {
  CHECK(connected_components(parse_description("set P in R^1 := { x^2 - 1 = 0 }")) == 2);
  CHECK(connected_components(parse_description("set I in R^1 := { x^2 - 1 < 0 }")) == 1);
  CHECK(connected_components(parse_description("set C in R^2 := { x^2 + y^2 - 1 = 0 }")) == 1);
  CHECK(connected_components(parse_description("set H in R^2 := { x*y - 1 = 0 }")) == 2);
  CHECK(connected_components(parse_description("set A in R^2 := { x*y - 1 > 0 }")) == 2);
  CHECK(connected_components(parse_description("set B in R^2 := { x*y - 1 < 0 }")) == 1);
  CHECK(connected_components(parse_description("set E in R^2 := empty")) == 0);
  CHECK_THROWS_AS(
      connected_components(parse_description("set S in R^3 := { x = 0 }")),
      UnsupportedError);
}

TEST_CASE("hyperbola cell structure") {
  CadTree t = decompose({X(2, 0) * X(2, 1) - C(2, 1)}, 2);
  REQUIRE(t.cells.size() == 7);
  CHECK(stack_sizes(t) == std::vector<int>{3, 1, 3});
  // over x = 0 the input never vanishes, so the stack is one cell
  CHECK(t.cells[3].dim == 1);
  CHECK(t.cells[3].signs[0] == -1);
  std::vector<std::pair<int, int>> fp = frontier_pairs(t);
  std::set<std::pair<int, int>> edges(fp.begin(), fp.end());
  // the branches escape to infinity: no curve cell touches the axis stack
  CHECK(edges.count({1, 3}) == 0);
  CHECK(edges.count({5, 3}) == 0);
  // the regions below the branches pinch off before reaching the axis
  CHECK(edges.count({0, 3}) == 0);
  CHECK(edges.count({6, 3}) == 0);
  // the regions above/left reach the whole axis
  CHECK(edges.count({2, 3}) > 0);
  CHECK(edges.count({4, 3}) > 0);
}

TEST_CASE("set equality is seen through different presentations") {
  SaDescription a = parse_description("set A in R^2 := { x^2 + y^2 - 1 <= 0 }");
  SaDescription b = parse_description("set B in R^2 := { 2*x^2 + 2*y^2 - 2 <= 0 }");
  CHECK(sets_equal(a, b));
  SaDescription open_disk = parse_description("set O in R^2 := { x^2 + y^2 - 1 < 0 }");
  CHECK(!sets_equal(a, open_disk));
  SaDescription line_pair = parse_description("set L in R^1 := { x^2 - 1 = 0 }");
  CHECK_THROWS_AS(sets_equal(a, line_pair), std::invalid_argument);
}

TEST_CASE("deciding closed sentences") {
  Poly x1 = X(1, 0);
  Poly x = X(2, 0), y = X(2, 1);
  CHECK(decide(f_forall({"x"}, f_gt(x1 * x1 + C(1, 1), {"x"}))));
  CHECK(!decide(f_forall({"x"}, f_exists({"y"}, f_eq(y * y - x, {"x", "y"})))));
  CHECK(decide(f_forall({"x"}, f_exists({"y"}, f_eq(y * y * y - x, {"x", "y"})))));
  CHECK(decide(f_exists({"x"}, f_forall({"y"}, f_gt(y * y + x * y + C(2, 1), {"x", "y"})))));
  CHECK(decide(f_exists({"x"}, f_and({f_eq(x1 * x1 - C(1, 2), {"x"}), f_gt(x1, {"x"})}))));
  CHECK(decide(f_not(f_exists({"x"}, f_lt(x1 * x1, {"x"})))));
  // evaluation at an algebraic sample: x = cbrt(2) forces y = 2^(1/9)
  CHECK(decide(f_forall(
      {"x"}, f_implies(f_eq(x1 * x1 * x1 - C(1, 2), {"x"}),
                       f_exists({"y"}, f_eq(y * y * y - x, {"x", "y"}))))));
  // no rational-looking shortcuts: sqrt(2) does not satisfy x^3 = 2
  CHECK(!decide(f_exists(
      {"x"}, f_and({f_eq(x1 * x1 - C(1, 2), {"x"}), f_eq(x1 * x1 * x1 - C(1, 2), {"x"})}))));
}

TEST_CASE("quantified variable capacity") {
  Poly s4 = X(4, 0) + X(4, 1) + X(4, 2) + X(4, 3);
  CHECK_THROWS_AS(decide(f_exists({"a", "b", "c", "d"}, f_eq(s4, {"a", "b", "c", "d"}))),
                  CapacityError);
  // a boolean combination splits into pieces that fit individually
  Poly q3 = X(3, 0) * X(3, 0) + X(3, 1) * X(3, 1) + X(3, 2) * X(3, 2);
  FormulaPtr left = f_exists({"a", "b", "c"}, f_eq(q3 - C(3, 1), {"a", "b", "c"}));
  FormulaPtr right = f_forall({"p", "q", "r"}, f_ge(q3, {"p", "q", "r"}));
  CHECK(decide(f_and({left, right})));
}

TEST_CASE("binder reuse and level skipping") {
  Poly x1 = X(1, 0);
  Poly x = X(2, 0), y = X(2, 1);
  // the inner binder shadows the outer one
  FormulaPtr shadow = f_exists(
      {"u"}, f_and({f_gt(x1 - C(1, 1), {"u"}), f_forall({"u"}, f_ge(x1 * x1, {"u"}))}));
  CHECK(decide(shadow));
  // sibling scopes: the z atom never mentions the y level
  FormulaPtr skip = f_exists(
      {"x"}, f_and({f_exists({"y"}, f_eq(y - x * x, {"x", "y"})),
                    f_exists({"z"}, f_eq(x * y - C(2, 1), {"x", "z"}))}));
  CHECK(decide(skip));
  CHECK_THROWS_AS(decide(f_gt(x1, {"x"})), std::invalid_argument);
}

TEST_CASE("serial and parallel lifting build the same tree") {
  Poly shifted =
      X(3, 0) * X(3, 0) + X(3, 1) * X(3, 1) + X(3, 2) * X(3, 2) - C(3, 2);
  CadTree s = decompose({shifted}, 3, LiftMode::Serial);
  CadTree p = decompose({shifted}, 3, LiftMode::Parallel);
  REQUIRE(s.cells.size() == 25);
  check_same_tree(s, p);
  // the poles sit at irrational abscissas, so this run exercises the
  // algebraic lifting path
  bool saw_algebraic = false;
  for (const CadCell& c : s.cells)
    for (const AlgReal& a : c.sample) saw_algebraic = saw_algebraic || !a.is_rat();
  CHECK(saw_algebraic);

  setenv("RCFW_THREADS", "2", 1);
  CadTree p2 = decompose({shifted}, 3, LiftMode::Parallel);
  check_same_tree(s, p2);
  setenv("RCFW_THREADS", "not-a-number", 1);
  CadTree p3 = decompose({circle_poly()}, 2, LiftMode::Parallel);
  CHECK(p3.cells.size() == 13);
  unsetenv("RCFW_THREADS");
}

TEST_CASE("batch membership matches pointwise membership") {
  SaDescription d = parse_description("set D in R^2 := { x^2 + y^2 - 1 <= 0 }");
  std::vector<std::vector<Rat>> pts;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) pts.push_back({frac(i, 2), frac(j, 2)});
  std::vector<char> serial = batch_member(d, pts, LiftMode::Serial);
  std::vector<char> parallel = batch_member(d, pts, LiftMode::Parallel);
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK((serial[i] != 0) == member(d, pts[i]));
}

TEST_CASE("dimension queries") {
  CHECK(dimension(parse_description("set D in R^2 := { x^2 + y^2 - 1 <= 0 }")) == 2);
  CHECK(dimension(parse_description("set C in R^2 := { x^2 + y^2 - 1 = 0 }")) == 1);
  CHECK(dimension(parse_description("set P in R^1 := { x^2 - 1 = 0 }")) == 0);
  CHECK(dimension(parse_description("set E in R^1 := { x^2 + 1 = 0 }")) == -1);
  // a union can only grow the dimension
  CHECK(dimension(parse_description(
            "set U in R^2 := { x^2 + y^2 - 1 = 0 } | { x = 0, y = 0 }")) == 1);
}

TEST_CASE("capacity and validation errors") {
  CHECK_THROWS_AS(decompose({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(decompose({}, 4), CapacityError);
  CHECK_THROWS_AS(decompose({X(2, 0)}, 1), std::invalid_argument);
  Poly big(1);
  Poly::Expo e(1, 0);
  e[0] = 33;
  big.set_term(e, Rat(1));
  CHECK_THROWS_AS(decompose({big}, 1), CapacityError);
  CadTree t = decompose({circle_poly()}, 2);
  CHECK_THROWS_AS(locate(t, {Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(frontier_pairs(decompose({X(3, 0)}, 3)), UnsupportedError);
  SaDescription foreign = parse_description("set F in R^2 := { x - 77 = 0 }");
  CHECK_THROWS_AS(set_cells(t, foreign), std::invalid_argument);
}
