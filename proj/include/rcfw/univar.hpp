#pragma once

#include <utility>
#include <vector>

#include "rcfw/poly.hpp"

namespace rcfw {

// Dense univariate polynomials over Rat, coefficients ascending by degree,
// no trailing zeros. Used for the root-finding layer where the sparse
// representation is just overhead.
using UPoly = std::vector<Rat>;

UPoly upoly_from(const Poly& p);       // p must have effective arity <= 1
Poly upoly_to_poly(const UPoly& u);

int updeg(const UPoly& u);             // -1 for zero
bool upzero(const UPoly& u);
void upnorm(UPoly& u);                  // strip trailing zeros

UPoly upadd(const UPoly& a, const UPoly& b);
UPoly upsub(const UPoly& a, const UPoly& b);
UPoly upmul(const UPoly& a, const UPoly& b);
UPoly upscale(const UPoly& a, const Rat& c);
Rat upeval(const UPoly& a, const Rat& x);
UPoly upderiv(const UPoly& a);
UPoly upmonic(const UPoly& a);

// quotient/remainder over Q; b nonzero
std::pair<UPoly, UPoly> updivrem(const UPoly& a, const UPoly& b);
// division known to be exact; throws if it is not
UPoly updiv_exact(const UPoly& a, const UPoly& b);

// monic gcd; gcd(0,0) = 0
UPoly upgcd(const UPoly& a, const UPoly& b);
// p / gcd(p, p'), monic
UPoly upsquarefree(const UPoly& p);

// Sturm machinery. The chain is precomputed once per polynomial and then
// evaluated at many points.
struct SturmChain {
  std::vector<UPoly> seq;
  int variations_at(const Rat& x) const;        // zeros skipped
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
};
SturmChain sturm_chain(const UPoly& p);

// Number of distinct real roots in (a, b]. Left endpoint may be a root of p
// (it is then not counted).
int sturm_count(const SturmChain& c, const Rat& a, const Rat& b);
// Distinct real roots in all of R.
int sturm_count_all(const SturmChain& c);
// Roots in (-inf, b] and (a, +inf).
int sturm_count_below(const SturmChain& c, const Rat& b);
int sturm_count_above(const SturmChain& c, const Rat& a);

// All roots lie strictly within (-bound, bound).
Rat cauchy_root_bound(const UPoly& p);

// Isolating intervals for the distinct real roots of p (any nonzero p;
// multiplicities ignored). Sorted ascending, pairwise disjoint. An exact
// rational root r is reported as the degenerate pair [r, r]; otherwise
// lo < hi, p(lo) != 0, p(hi) != 0 and exactly one root lies in (lo, hi).
// Rational roots with denominator up to 64 are always reported exactly;
// beyond that only if bisection happens to land on them.
struct RootIvl {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootIvl> isolate_upoly_roots(const UPoly& p);

}  // namespace rcfw
