#pragma once

#include <string>
#include <vector>

#include "rcfw/formula.hpp"
#include "rcfw/param.hpp"

namespace rcfw {

// How a set parameter enters a compiled sentence. Concrete bindings inline
// the set's sign conditions; symbolic bindings quantify membership through
// a coefficient family instead: the set is { x : some sign tuple selected
// by l holds for the p block polynomials }, and the block coefficients stay
// free variables named <prefix>_<block>_<monomial> (ascending-lex monomial
// order, the ParamPoint block order).
struct Binding {
  bool symbolic = false;
  SaDescription desc;   // concrete case
  std::string prefix;   // symbolic case
  int n = 0;            // symbolic ambient dimension
  unsigned p = 1, q = 2;
  Int selector = 0;
};

Binding bind_set(SaDescription d);
Binding bind_symbol(std::string prefix, int n, unsigned p, unsigned q, Int selector);

// Membership of the point named by vars (one name per ambient coordinate).
FormulaPtr bound_membership(const Binding& b, const std::vector<std::string>& vars);

enum class SchemaId { Submanifold, Boundary, Homeomorphism, Collapse };

// Instance data for the local-graph schemas. r picks the smoothness clause:
// 0 emits pointwise epsilon-delta continuity of the implicit graph map,
// 1 additionally emits difference-quotient first-differentiability. The
// nash flag requests the C^l reading for an externally supplied threshold
// l; only l <= 1 is expressible here, larger l is rejected.
struct PredicateInstance {
  SchemaId schema = SchemaId::Submanifold;
  int n = 1;
  int m = 1;
  int r = 0;
  bool nash = false;
  int nash_l = 0;
  Binding set;
};

constexpr int kMaxSchemaN = 8;

// Sentence: every point of S satisfies, for some m-subset of coordinates,
// the local-graph condition with existentially chosen radii. Degenerate
// forms: m = n asserts local openness, m = 0 asserts isolation. Free
// variables are exactly the symbolic coefficient families.
FormulaPtr compile_submanifold(const PredicateInstance& inst);

// Conjunction of the interior condition (every point of S not in T is a
// local m-graph point of S) and the boundary condition (every point of T
// sees T as a local (m-1)-graph and S as a half-sided graph over it).
FormulaPtr compile_boundary(const PredicateInstance& inst, const Binding& T);

// The clauses asserting that the relation bound by G is the graph of a
// homeomorphism from the set bound by X onto the set bound by Y, ambient
// dimension n each (G lives in dimension 2n). Order: graph inside X x Y,
// totality, functionality, injectivity, surjectivity, continuity,
// continuity of the inverse. Exposed as a list so finite-capacity callers
// can decide clauses one at a time.
std::vector<FormulaPtr> homeo_clauses(const Binding& X, const Binding& Y,
                                      const Binding& G, int n);
FormulaPtr compile_homeomorphism(const Binding& X, const Binding& Y,
                                 const Binding& G, int n);
// Symbolic convenience: blocks of shape (p, q) = (1, 2), selector = zero set.
FormulaPtr compile_homeomorphism(const std::string& aName, const std::string& bName,
                                 const std::string& cName, int n);

// The clauses asserting that the map with graph bound by G, from the unit
// cube [0,1]^n into the set bound by X, realizes an elementary collapse of
// X onto Y: graph confined to cube x X, totality, functionality, map
// continuity, injectivity on the t1 > 0 part, inverse continuity there,
// the t1 = 0 face landing in Y, the t1 > 0 part missing Y, and
// X = Y union image.
std::vector<FormulaPtr> collapse_clauses(const Binding& X, const Binding& Y,
                                         const Binding& G, int n);
FormulaPtr compile_collapse(const Binding& X, const Binding& Y,
                            const Binding& G, int n);
FormulaPtr compile_collapse(const std::string& XName, const std::string& YName,
                            const std::string& cName, int n);

}  // namespace rcfw
