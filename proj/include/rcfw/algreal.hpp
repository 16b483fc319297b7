#pragma once

#include <string>
#include <vector>

#include "rcfw/poly.hpp"
#include "rcfw/univar.hpp"

namespace rcfw {

// Closed rational interval arithmetic; enclosures only, never trusted for
// zero. Soundness contract: the true value always lies in [lo, hi].
struct Ival {
  Rat lo, hi;
};
Ival iv_add(const Ival& a, const Ival& b);
Ival iv_sub(const Ival& a, const Ival& b);
Ival iv_mul(const Ival& a, const Ival& b);
Ival iv_neg(const Ival& a);
Ival iv_pow(const Ival& a, unsigned e);
bool iv_excludes_zero(const Ival& a);
Ival poly_eval_ival(const Poly& p, const std::vector<Ival>& x);

// A real algebraic number: square-free defining polynomial over Q together
// with an isolating interval. Rationals are the degenerate case lo == hi
// with defining x - r. For a proper interval, lo < hi, neither endpoint is a
// root, and exactly one real root of the defining polynomial lies inside.
//
// Values are cheap to copy; refinement mutates only the interval, so
// algorithms refine local copies and leave stored samples alone.
class AlgReal {
 public:
  AlgReal();  // zero
  static AlgReal from_rat(const Rat& r);
  // one AlgReal per distinct real root, ascending; p any nonzero univariate
  // (square-free part is taken internally)
  static std::vector<AlgReal> roots_of(const Poly& univ);
  static std::vector<AlgReal> roots_of_upoly(const UPoly& u);

  bool is_rat() const { return lo_ == hi_; }
  Rat rat_value() const;  // requires is_rat()
  const Poly& defining() const { return defining_; }
  const UPoly& defining_upoly() const { return up_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Ival ival() const { return {lo_, hi_}; }

  void refine();  // one bisection
  void refine_below(const Rat& w);

  int sign() const;                     // exact
  double approx() const;
  std::string str() const;

  // exact three-way comparison
  static int compare(const AlgReal& a, const AlgReal& b);
  bool equals(const AlgReal& o) const { return compare(*this, o) == 0; }

 private:
  Poly defining_;   // arity 1
  UPoly up_;        // same thing, dense
  Rat lo_, hi_;
  int sign_lo_ = 0;  // sign of defining at lo_ (proper intervals only)

  AlgReal(Poly def, UPoly up, Rat lo, Rat hi);
  void collapse_to(const Rat& r);
};

// Exact: is a a root of the univariate p (not necessarily square-free)?
bool is_root_of(const AlgReal& a, const UPoly& p);

// Exact sign of p at a point with independent algebraic coordinates.
// Interval refinement first; the zero test falls back to a gcd argument
// (one algebraic coordinate) or an annihilating polynomial for t - p built
// by iterated resultants (several).
int sign_at(const Poly& p, const std::vector<AlgReal>& x);

// Some rational number strictly between a and b (requires a < b).
Rat rational_between(const AlgReal& a, const AlgReal& b);
// Strictly below / above.
Rat rational_below(const AlgReal& a);
Rat rational_above(const AlgReal& a);

}  // namespace rcfw
