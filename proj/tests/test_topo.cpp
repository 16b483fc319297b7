#include <string>
#include <vector>

#include "doctest.h"
#include "rcfw/cad.hpp"
#include "rcfw/errors.hpp"
#include "rcfw/sa.hpp"
#include "rcfw/schemas.hpp"
#include "rcfw/topo.hpp"

using namespace rcfw;

static Poly X(int ar, int v) { return Poly::variable(ar, v); }
static Poly C(int ar, long c) { return Poly::constant(ar, Rat(c)); }

static SaDescription desc(const std::string& src) { return parse_description(src); }

static bool rat_point(const std::vector<AlgReal>& p, const std::vector<long>& want) {
  if (p.size() != want.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_rat() || p[i].rat_value() != Rat(want[i])) return false;
  return true;
}

// swap the two plane coordinates in every condition
static SaDescription transpose2(const SaDescription& d) {
  SaDescription o = d;
  for (auto& conj : o.conjuncts)
    for (auto& sc : conj) sc.poly = sc.poly.permute_vars({1, 0});
  return o;
}

static const char* kLemniscate =
    "set L in R^2 := { x^4 + 2*x^2*y^2 + y^4 - x^2 + y^2 = 0 }";

TEST_CASE("curve classification on the line") {
  using K = ManifoldVerdict::Kind;

  ManifoldVerdict v = check_curve_manifold(desc("set I in R^1 := { x >= 0, 1 - x >= 0 }"));
  CHECK(v.kind == K::WithBoundary);
  REQUIRE(v.boundary.size() == 2);
  CHECK(rat_point(v.boundary[0], {0}));
  CHECK(rat_point(v.boundary[1], {1}));

  // open ends are interior points of the interval itself
  v = check_curve_manifold(desc("set I in R^1 := { x > 0, 1 - x > 0 }"));
  CHECK(v.kind == K::NoBoundary);

  v = check_curve_manifold(desc("set H in R^1 := { x >= 0 }"));
  CHECK(v.kind == K::WithBoundary);
  REQUIRE(v.boundary.size() == 1);
  CHECK(rat_point(v.boundary[0], {0}));

  v = check_curve_manifold(desc("set P in R^1 := { x^2 - 1 = 0 }"));
  CHECK(v.kind == K::NoBoundary);
  CHECK(v.boundary.empty());

  // an isolated point glued to a segment is neither a 0- nor a 1-manifold
  v = check_curve_manifold(desc("set S in R^1 := { x - 1 >= 0, 2 - x >= 0 } | { x = 0 }"));
  CHECK(v.kind == K::NotManifold);
  CHECK(rat_point(v.witness, {0}));

  // the whole line assembled from two overlapping open pieces
  v = check_curve_manifold(desc("set S in R^1 := { x + 1 > 0 } | { 1 - x > 0 }"));
  CHECK(v.kind == K::NoBoundary);
}

TEST_CASE("curve classification in the plane") {
  using K = ManifoldVerdict::Kind;

  ManifoldVerdict v = check_curve_manifold(desc("set S in R^2 := { x^2 + y^2 - 1 = 0 }"));
  CHECK(v.kind == K::NoBoundary);
  CHECK(v.boundary.empty());

  v = check_curve_manifold(desc("set M in R^2 := { y = 0, x >= 0, 1 - x >= 0 }"));
  CHECK(v.kind == K::WithBoundary);
  REQUIRE(v.boundary.size() == 2);
  CHECK(rat_point(v.boundary[0], {0, 0}));
  CHECK(rat_point(v.boundary[1], {1, 0}));

  // in the plane a missing closure point disqualifies the curve
  v = check_curve_manifold(desc("set S in R^2 := { y = 0, x > 0, 1 - x > 0 }"));
  CHECK(v.kind == K::NotManifold);
  CHECK(rat_point(v.witness, {0, 0}));

  // a closed ray has one boundary point and an unbounded interior end
  v = check_curve_manifold(desc("set S in R^2 := { y = 0, x >= 0 }"));
  CHECK(v.kind == K::WithBoundary);
  REQUIRE(v.boundary.size() == 1);
  CHECK(rat_point(v.boundary[0], {0, 0}));

  v = check_curve_manifold(desc("set S in R^2 := { y = 0, x^2 - 1 = 0 }"));
  CHECK(v.kind == K::NoBoundary);

  v = check_curve_manifold(desc("set S in R^2 := empty"));
  CHECK(v.kind == K::NoBoundary);

  v = check_curve_manifold(desc("set D in R^2 := { x^2 + y^2 - 1 <= 0 }"));
  CHECK(v.kind == K::Unsupported);

  v = check_curve_manifold(desc("set S in R^3 := { x^2 + y^2 - 1 = 0, z = 0 }"));
  CHECK(v.kind == K::Unsupported);
}

TEST_CASE("self intersections and stray points are flagged with a witness") {
  using K = ManifoldVerdict::Kind;

  // figure eight: four half-branches meet at the origin
  ManifoldVerdict v = check_curve_manifold(desc(kLemniscate));
  CHECK(v.kind == K::NotManifold);
  CHECK(rat_point(v.witness, {0, 0}));

  v = check_curve_manifold(desc("set S in R^2 := { x*y = 0 }"));
  CHECK(v.kind == K::NotManifold);
  CHECK(rat_point(v.witness, {0, 0}));

  v = check_curve_manifold(
      desc("set S in R^2 := { y = 0, x - 1 >= 0, 2 - x >= 0 } | { x = 0, y = 0 }"));
  CHECK(v.kind == K::NotManifold);
  CHECK(rat_point(v.witness, {0, 0}));
}

TEST_CASE("gradient regularity of plane curves") {
  Poly circ = X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1) - C(2, 1);
  RegularityVerdict r = regularity_check(circ, desc("set S in R^2 := { x^2 + y^2 - 1 = 0 }"));
  CHECK(r.pass);

  Poly x = X(2, 0), y = X(2, 1);
  Poly lem = (x * x + y * y) * (x * x + y * y) - x * x + y * y;
  r = regularity_check(lem, desc(kLemniscate));
  CHECK_FALSE(r.pass);
  CHECK(rat_point(r.witness, {0, 0}));

  r = regularity_check(x * y, desc("set S in R^2 := { x*y = 0 }"));
  CHECK_FALSE(r.pass);
  CHECK(rat_point(r.witness, {0, 0}));

  // the set must lie inside the zero locus of f
  CHECK_THROWS_AS(regularity_check(circ, desc("set D in R^2 := { x^2 + y^2 - 1 <= 0 }")),
                  std::invalid_argument);
  CHECK_THROWS_AS(regularity_check(X(1, 0), desc("set S in R^2 := { x = 0 }")),
                  std::invalid_argument);
}

TEST_CASE("compactness verdicts") {
  CompactnessVerdict c = compactness_check(desc("set S in R^2 := { x^2 + y^2 - 1 = 0 }"));
  CHECK(c.closed);
  CHECK(c.bounded);

  c = compactness_check(desc("set D in R^2 := { x^2 + y^2 - 1 < 0 }"));
  CHECK_FALSE(c.closed);
  CHECK(c.bounded);

  c = compactness_check(desc("set D in R^2 := { x^2 + y^2 - 1 <= 0 }"));
  CHECK(c.closed);
  CHECK(c.bounded);

  c = compactness_check(desc("set H in R^1 := { x >= 0 }"));
  CHECK(c.closed);
  CHECK_FALSE(c.bounded);

  c = compactness_check(desc("set H in R^2 := { x*y - 1 = 0 }"));
  CHECK(c.closed);
  CHECK_FALSE(c.bounded);

  c = compactness_check(desc("set E in R^2 := empty"));
  CHECK(c.closed);
  CHECK(c.bounded);

  CHECK_THROWS_AS(compactness_check(desc("set B in R^3 := { x^2 + y^2 + z^2 - 1 <= 0 }")),
                  UnsupportedError);
}

TEST_CASE("verifying interval homeomorphisms") {
  using H = HomeoVerdict::Kind;
  SaDescription X11 = desc("set X in R^1 := { x + 1 >= 0, 1 - x >= 0 }");
  SaDescription Y01 = desc("set Y in R^1 := { x >= 0, 1 - x >= 0 }");
  SaDescription cubic = desc("set G in R^2 := { y - x^3 = 0, x + 1 >= 0, 1 - x >= 0 }");

  HomeoVerdict h = verify_homeo(X11, X11, cubic);
  CHECK(h.kind == H::Accept);

  // the inverse relation is the cube root, also a homeomorphism
  h = verify_homeo(X11, X11, transpose2(cubic));
  CHECK(h.kind == H::Accept);

  h = verify_homeo(Y01, Y01, desc("set G in R^2 := { y - x = 0, x >= 0, 1 - x >= 0 }"));
  CHECK(h.kind == H::Accept);

  h = verify_homeo(Y01, desc("set Y in R^1 := { x >= 0, 2 - x >= 0 }"),
                   desc("set G in R^2 := { y - 2*x = 0, x >= 0, 1 - x >= 0 }"));
  CHECK(h.kind == H::Accept);
}

TEST_CASE("homeomorphism rejections name the failing clause") {
  using H = HomeoVerdict::Kind;
  SaDescription X11 = desc("set X in R^1 := { x + 1 >= 0, 1 - x >= 0 }");
  SaDescription Y01 = desc("set Y in R^1 := { x >= 0, 1 - x >= 0 }");
  SaDescription cubic = desc("set G in R^2 := { y - x^3 = 0, x + 1 >= 0, 1 - x >= 0 }");
  SaDescription square = desc("set G in R^2 := { y - x^2 = 0, x + 1 >= 0, 1 - x >= 0 }");

  HomeoVerdict h = verify_homeo(X11, Y01, square);
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("injective") != std::string::npos);

  h = verify_homeo(X11, Y01, cubic);
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("leaves X x Y") != std::string::npos);

  h = verify_homeo(X11, X11, desc("set G in R^2 := { y - x = 0, x >= 0, 1 - x >= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("total") != std::string::npos);

  h = verify_homeo(X11, desc("set Y in R^1 := { x + 1 >= 0, 2 - x >= 0 }"), cubic);
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("cover") != std::string::npos);

  // a discontinuous bijection: swap the endpoints of the unit interval
  h = verify_homeo(Y01, Y01,
                   desc("set G in R^2 := { y - x = 0, x > 0, 1 - x > 0 }"
                        " | { x = 0, y - 1 = 0 } | { x - 1 = 0, y = 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("closed") != std::string::npos);

  h = verify_homeo(desc("set X in R^1 := { x >= 0 }"), Y01,
                   desc("set G in R^2 := { y - x = 0, x >= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("X is not compact") != std::string::npos);

  h = verify_homeo(Y01, desc("set Y in R^1 := { x >= 0 }"),
                   desc("set G in R^2 := { y - x = 0, x >= 0, 1 - x >= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("Y is not compact") != std::string::npos);

  // a half open domain is not closed, hence not compact
  h = verify_homeo(desc("set X in R^1 := { x > 0, 1 - x >= 0 }"), Y01,
                   desc("set G in R^2 := { y - x = 0, x > 0, 1 - x >= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("X is not compact") != std::string::npos);

  CHECK_THROWS_AS(verify_homeo(Y01, Y01, desc("set G in R^1 := { x = 0 }")),
                  std::invalid_argument);
}

TEST_CASE("lattice sampling beyond the exact ambient range") {
  using H = HomeoVerdict::Kind;
  SaDescription disk = desc("set D in R^2 := { x^2 + y^2 - 1 <= 0 }");

  // the identity map on the disk survives sampling but cannot be certified
  HomeoVerdict h = verify_homeo(
      disk, disk, desc("set G in R^4 := { x3 - x1 = 0, x4 - x2 = 0, x1^2 + x2^2 - 1 <= 0 }"));
  CHECK(h.kind == H::Unsupported);
  CHECK(h.reason.find("lattice") != std::string::npos);

  // a product of disks relates one x to many y and back
  h = verify_homeo(disk, disk,
                   desc("set G in R^4 := { x1^2 + x2^2 - 1 <= 0, x3^2 + x4^2 - 1 <= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("injective") != std::string::npos);

  // doubling pushes sampled image points outside Y
  h = verify_homeo(
      disk, disk,
      desc("set G in R^4 := { x3 - 2*x1 = 0, x4 - 2*x2 = 0, x1^2 + x2^2 - 1 <= 0 }"));
  CHECK(h.kind == H::Reject);
  CHECK(h.reason.find("leaves X x Y") != std::string::npos);

  SaDescription ball = desc("set B in R^3 := { x^2 + y^2 + z^2 - 1 <= 0 }");
  h = verify_homeo(ball, ball,
                   desc("set G in R^6 := { x4 - x1 = 0, x5 - x2 = 0, x6 - x3 = 0,"
                        " x1^2 + x2^2 + x3^2 - 1 <= 0 }"));
  CHECK(h.kind == H::Unsupported);
}

TEST_CASE("cobordism verification on a shared decomposition") {
  SaDescription seg = desc("set M in R^2 := { y = 0, x >= 0, 1 - x >= 0 }");
  SaDescription left = desc("set A in R^2 := { x = 0, y = 0 }");
  SaDescription right = desc("set B in R^2 := { x - 1 = 0, y = 0 }");
  SaDescription none = desc("set E in R^2 := empty");
  SaDescription circ = desc("set S in R^2 := { x^2 + y^2 - 1 = 0 }");

  CobordismVerdict c = check_cobordism(seg, left, right);
  CHECK(c.accept);
  CHECK(c.reason.empty());

  c = check_cobordism(circ, none, none);
  CHECK(c.accept);

  c = check_cobordism(circ, right, none);
  CHECK_FALSE(c.accept);
  CHECK(c.reason.find("boundary") != std::string::npos);

  // both endpoints on one side plus one of them again on the other
  c = check_cobordism(seg, desc("set A in R^2 := { y = 0, x^2 - x = 0 }"), left);
  CHECK_FALSE(c.accept);
  CHECK(c.reason.find("intersect") != std::string::npos);

  c = check_cobordism(desc(kLemniscate), none, none);
  CHECK_FALSE(c.accept);
  CHECK(c.reason.find("not a manifold") != std::string::npos);
  CHECK(c.reason.find("(0, 0)") != std::string::npos);

  c = check_cobordism(desc("set M in R^2 := { y = 0, x >= 0 }"), left, none);
  CHECK_FALSE(c.accept);
  CHECK(c.reason.find("compact") != std::string::npos);

  c = check_cobordism(desc("set M in R^2 := { x^2 + y^2 - 1 <= 0 }"), none, none);
  CHECK_FALSE(c.accept);
  CHECK(c.reason.find("curve") != std::string::npos);

  CHECK_THROWS_AS(check_cobordism(desc("set M in R^1 := { x = 0 }"), left, right),
                  std::invalid_argument);
}

TEST_CASE("manifold verdicts agree with compiled local sentences") {
  auto inst = [](SchemaId id, int m, const SaDescription& s) {
    PredicateInstance p;
    p.schema = id;
    p.n = 1;
    p.m = m;
    p.set = bind_set(s);
    return p;
  };
  SaDescription open1 = desc("set S in R^1 := { x > 0, 1 - x > 0 }");
  SaDescription seg1 = desc("set S in R^1 := { x >= 0, 1 - x >= 0 }");
  SaDescription pts1 = desc("set S in R^1 := { x^2 - 1 = 0 }");
  SaDescription ends = desc("set T in R^1 := { x = 0 } | { x - 1 = 0 }");
  SaDescription orig = desc("set T in R^1 := { x = 0 }");

  // boundaryless curve <-> the openness sentence holds
  CHECK(decide(compile_submanifold(inst(SchemaId::Submanifold, 1, open1))));
  CHECK(check_curve_manifold(open1).kind == ManifoldVerdict::Kind::NoBoundary);

  CHECK_FALSE(decide(compile_submanifold(inst(SchemaId::Submanifold, 1, seg1))));
  CHECK(check_curve_manifold(seg1).kind == ManifoldVerdict::Kind::WithBoundary);

  // point sets <-> the isolation sentence holds
  CHECK(decide(compile_submanifold(inst(SchemaId::Submanifold, 0, pts1))));
  CHECK(check_curve_manifold(pts1).kind == ManifoldVerdict::Kind::NoBoundary);
  CHECK_FALSE(decide(compile_submanifold(inst(SchemaId::Submanifold, 0, seg1))));

  // the boundary sentence singles out exactly the two endpoints
  CHECK(decide(compile_boundary(inst(SchemaId::Boundary, 1, seg1), bind_set(ends))));
  CHECK_FALSE(decide(compile_boundary(inst(SchemaId::Boundary, 1, seg1), bind_set(orig))));
  ManifoldVerdict v = check_curve_manifold(seg1);
  REQUIRE(v.boundary.size() == 2);
  CHECK(rat_point(v.boundary[0], {0}));
  CHECK(rat_point(v.boundary[1], {1}));

  // plane instances compile but outgrow the decision capacity
  SaDescription disk = desc("set D in R^2 := { x^2 + y^2 - 1 <= 0 }");
  SaDescription circ = desc("set S in R^2 := { x^2 + y^2 - 1 = 0 }");
  PredicateInstance p2;
  p2.schema = SchemaId::Boundary;
  p2.n = 2;
  p2.m = 2;
  p2.set = bind_set(disk);
  CHECK_THROWS_AS(decide(compile_boundary(p2, bind_set(circ))), CapacityError);
}
