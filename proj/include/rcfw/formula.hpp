#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rcfw/sa.hpp"

namespace rcfw {

// First-order formulas over the ordered-ring language. Atoms compare a
// polynomial against zero; variables are referenced by name, the atom's
// vars list mapping polynomial indices to names. Nodes are immutable and
// shared; helpers below are the only constructors used in practice.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, False, Atom, And, Or, Not, Exists, ForAll };
  Kind kind;
  // Atom payload: poly over vars, poly.arity() == vars.size(), every var used
  Poly poly{0};
  Rel rel = Rel::EQ;
  std::vector<std::string> vars;
  // And/Or children (>= 2), Not child (1), quantifier body (1)
  std::vector<FormulaPtr> kids;
  // Exists/ForAll bound names (>= 1)
  std::vector<std::string> bound;
};

FormulaPtr f_true();
FormulaPtr f_false();

// Drops unused variables and folds constant atoms to True/False.
FormulaPtr f_atom(Poly p, std::vector<std::string> vars, Rel rel);

// Convenience comparisons p ? 0; le/ge/ne expand to two-atom disjunctions
// (negation-free, keeping atoms in the three-sign alphabet).
FormulaPtr f_lt(const Poly& p, const std::vector<std::string>& vars);
FormulaPtr f_eq(const Poly& p, const std::vector<std::string>& vars);
FormulaPtr f_gt(const Poly& p, const std::vector<std::string>& vars);
FormulaPtr f_le(const Poly& p, const std::vector<std::string>& vars);
FormulaPtr f_ge(const Poly& p, const std::vector<std::string>& vars);
FormulaPtr f_ne(const Poly& p, const std::vector<std::string>& vars);

// Empty -> True/False, singleton -> the child, else an n-ary node.
FormulaPtr f_and(std::vector<FormulaPtr> kids);
FormulaPtr f_or(std::vector<FormulaPtr> kids);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);  // (not a) or b
FormulaPtr f_exists(std::vector<std::string> names, FormulaPtr body);
FormulaPtr f_forall(std::vector<std::string> names, FormulaPtr body);

// x in S as a formula; vars names the ambient coordinates.
FormulaPtr membership(const SaDescription& d, const std::vector<std::string>& vars);

bool f_equal(const FormulaPtr& a, const FormulaPtr& b);
// Equal up to atom payloads (same tree, same binders).
bool same_shape(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const FormulaPtr& f);
bool is_quantifier_free(const FormulaPtr& f);

// Alpha-renames any binder that shadows a name already bound (or free)
// above it, so no root-to-leaf path binds the same name twice. Renamed
// variables get _2, _3, ... suffixes.
FormulaPtr normalize_bindings(const FormulaPtr& f);

// Classical truth of a quantifier-free formula under an exact assignment.
bool eval_qf(const FormulaPtr& f, const std::map<std::string, Rat>& assign);

// S-expression text: (> (+ (^ x 2) -2) 0), (and ...), (or ...), (not ...),
// (forall ((x Real)) ...), (exists ((y Real)) ...), true, false.
std::string serialize(const FormulaPtr& f);
FormulaPtr parse_formula_sexpr(const std::string& text);

// Concrete syntax: 'forall x y. ...' and 'exists ... .' bind to the end,
// connectives and/or/not, constants true/false, atoms <poly> op <poly>
// with op among < <= = != >= >. Any other identifier is a variable.
FormulaPtr parse_formula(const std::string& text);

}  // namespace rcfw
