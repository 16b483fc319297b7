#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcfw/rat.hpp"

namespace rcfw {

// Sparse multivariate polynomial over Rat with a fixed arity (number of
// ambient variables). Terms are keyed by full exponent vectors; std::map's
// ascending lexicographic key order on those vectors is also the order the
// parameter encoding enumerates monomials in, so iteration order is load
// bearing here.
//
// Conventions: the zero polynomial has an empty term map and total degree 0.
class Poly {
 public:
  using Expo = std::vector<uint32_t>;
  using Terms = std::map<Expo, Rat>;

  Poly() : arity_(0) {}
  explicit Poly(int arity) : arity_(arity) {}

  static Poly zero(int arity) { return Poly(arity); }
  static Poly constant(int arity, const Rat& c);
  static Poly variable(int arity, int var);  // x_var, 0-based
  static Poly monomial(int arity, const Expo& e, const Rat& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // includes zero
  Rat constant_value() const;  // requires is_constant()

  const Terms& terms() const { return terms_; }

  // Total degree; per convention 0 for the zero polynomial.
  unsigned degree() const;
  unsigned degree_in(int var) const;
  bool uses_var(int var) const;
  // Largest var index actually occurring, plus one. 0 for constants.
  int effective_arity() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // arbitrary total order for containers

  Rat eval(const std::vector<Rat>& x) const;
  Poly derivative(int var) const;

  // Plug a rational into one variable; arity is kept, the variable just no
  // longer occurs.
  Poly substitute(int var, const Rat& val) const;

  // Arity surgery. pad_arity grows; drop_unused_above shrinks to n and
  // requires vars >= n to be absent; permute reindexes by perm[old] = new.
  Poly pad_arity(int n) const;
  Poly drop_unused_above(int n) const;
  Poly permute_vars(const std::vector<int>& perm) const;

  // Univariate view in the last variable: c[k] is the coefficient of
  // x_{arity-1}^k, each of arity one less. Inverse of from_last_coeffs.
  std::vector<Poly> last_coeffs() const;
  static Poly from_last_coeffs(int arity, const std::vector<Poly>& cs);

  // Rational content (gcd of numerators / lcm of denominators over all
  // terms); zero for the zero polynomial.
  Rat content() const;
  // p/content with the leading (largest monomial) coefficient positive.
  // Canonical representative of p up to positive scaling; the returned sign
  // says whether p = +c*canon or -c*canon (c > 0).
  Poly canonical(int* sign_out = nullptr) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // default names x,y,z / x1..xn

  void set_term(const Expo& e, const Rat& c);  // erases on c == 0

 private:
  int arity_;
  Terms terms_;
};

// All exponent vectors of length n with total degree <= q, ascending
// lexicographic. This enumeration order defines coefficient blocks.
std::vector<Poly::Expo> monomials_upto(int n, unsigned q);

std::vector<std::string> default_var_names(int n);

}  // namespace rcfw
