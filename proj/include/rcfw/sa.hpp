#pragma once

#include <string>
#include <vector>

#include "rcfw/poly.hpp"

namespace rcfw {

// Sign relation of an atomic condition f ? 0.
enum class Rel { LT, EQ, GT };

int rel_to_sign(Rel r);       // -1, 0, +1
Rel sign_to_rel(int s);
std::string rel_str(Rel r);

struct SignCond {
  Poly poly;
  Rel rel;
  bool holds_at(const std::vector<Rat>& x) const;
  bool operator==(const SignCond& o) const { return rel == o.rel && poly == o.poly; }
};

// A semialgebraic set in disjunctive normal form: union of conjunctions of
// sign conditions. No conjuncts at all = the empty set. A conjunct is never
// an empty list.
struct SaDescription {
  int ambient = 0;
  std::vector<std::vector<SignCond>> conjuncts;

  bool operator==(const SaDescription& o) const = default;
};

struct Complexity {
  unsigned p = 0, q = 0;
  bool fits(unsigned pmax, unsigned qmax) const { return p <= pmax && q <= qmax; }
};

// p = total number of atoms, q = max degree over atoms (0 when empty).
Complexity complexity_of(const SaDescription& d);

// Exact membership at a rational point.
bool member(const SaDescription& d, const std::vector<Rat>& x);

// All distinct atom polynomials in order of first appearance.
std::vector<Poly> distinct_polys(const SaDescription& d);

// DSL:  set <name> in R^<n> := { atom ( , atom )* } ( | { ... } )*
// with atom = <poly> ('<'|'='|'>'|'<='|'>=') <poly>, normalized to f ? 0.
// `empty` in place of the clause list denotes the empty set. '#' starts a
// comment. <= and >= are sugar; they expand into the two-sign union, so
// they inflate the measured complexity accordingly.
struct NamedSet {
  std::string name;
  SaDescription desc;
};

// All `set` statements in the text, in order. Throws SyntaxError.
std::vector<NamedSet> parse_sets(const std::string& text);

// Exactly one set statement expected.
SaDescription parse_description(const std::string& text);

// Normalized text form; parse(print(d)) == d.
std::string print_description(const SaDescription& d, const std::string& name = "S");

}  // namespace rcfw
