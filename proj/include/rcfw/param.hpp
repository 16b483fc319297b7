#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rcfw/sa.hpp"

namespace rcfw {

// A point of the parameter space for sets of complexity at most (p, q) in
// R^n: p blocks of N(n, q) coefficients in the frozen ascending-lex
// monomial order, plus a selector picking a subset of the 3^p sign tuples.
//
// Tuple indexing: order {-1, 0, 1}^p lexicographically with -1 < 0 < 1,
// first coordinate most significant; tuple number k corresponds to bit k of
// the selector. p is capped at 8 so the selector stays a few kilobits.
struct ParamPoint {
  int n = 0;
  unsigned p = 0, q = 0;
  std::vector<std::vector<Rat>> blocks;  // p blocks of length N(n, q)
  Int selector = 0;

  bool operator==(const ParamPoint& o) const = default;
};

constexpr unsigned kMaxParamP = 8;

// N(n, q) = C(n + q, q), the number of monomials of degree <= q.
Int monomial_count(int n, unsigned q);

// Block vector of a polynomial of degree <= q in the frozen order.
std::vector<Rat> poly_to_block(const Poly& f, unsigned q);
Poly block_to_poly(int n, unsigned q, const std::vector<Rat>& block);

// The distinct atom polynomials become blocks (zero-padded to p); the
// selector collects every full sign tuple consistent with some conjunct,
// unconstrained coordinates ranging over all three signs. Throws
// CapacityError if complexity_of(d) exceeds (p, q) or p > kMaxParamP.
ParamPoint encode(const SaDescription& d, unsigned p, unsigned q);

// One conjunct per selected sign tuple, asserting sign(f_i) = sigma_i for
// every i. Throws CapacityError / std::invalid_argument on bad invariants.
SaDescription decode(const ParamPoint& a);

// The sign tuples whose bits are set in the selector, in tuple-index order.
// Shared by decode and the symbolic schema compilers so the bit <-> tuple
// convention lives in one place.
std::vector<std::vector<int>> selector_sign_tuples(unsigned p, const Int& selector);

// Text form: header `param n p q l`, then p lines of N(n, q) rationals.
std::string write_param(const ParamPoint& a);
ParamPoint read_param(std::istream& in);
ParamPoint read_param_text(const std::string& text);

}  // namespace rcfw
