#pragma once

#include <optional>
#include <vector>

#include "rcfw/poly.hpp"

namespace rcfw {

// Exact division in Q[x_1..x_n]; nullopt when d does not divide p.
std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

// Pseudo-remainder of A by B with respect to the last variable:
// lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg_x R < deg_x B.
Poly prem_last(const Poly& A, const Poly& B);

// Resultant with respect to variable var, computed by the subresultant PRS.
// Signs follow the Sylvester determinant with the rows of the first argument
// on top. The result does not involve var; the returned polynomial has
// arity n-1 with variables above var shifted down.
Poly resultant(const Poly& p, const Poly& q, int var);

// Same value but keeping the original arity (var simply unused).
Poly resultant_keep(const Poly& p, const Poly& q, int var);

// Leading coefficients of the members of the subresultant PRS of (p, q) in
// the last variable, plus the final constant member. A conservative superset
// of the principal subresultant coefficients, used by the CAD projection.
// All returned polynomials are free of the last variable (arity preserved).
std::vector<Poly> prs_principal_coeffs(const Poly& p, const Poly& q);

// Multivariate gcd over Q, primitive PRS in the last variable with the
// contents handled by recursion. Unit-normalized via Poly::canonical, so
// nonzero constant inputs give 1 and gcd(p, 0) = canonical p.
Poly gcd_mv(const Poly& a, const Poly& b);

}  // namespace rcfw
