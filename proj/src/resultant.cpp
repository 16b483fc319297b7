#include "rcfw/resultant.hpp"

#include <stdexcept>
#include <utility>

#include "rcfw/univar.hpp"

namespace rcfw {

std::optional<Poly> exact_divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) return std::nullopt;
  int n = p.arity();
  if (d.arity() != n) throw std::invalid_argument("exact_divide: arity mismatch");
  Poly r = p;
  Poly q(n);
  const auto& dlead = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Poly::Expo e(n);
    for (int i = 0; i < n; ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      e[i] = rlead.first[i] - dlead.first[i];
    }
    Poly t = Poly::monomial(n, e, rlead.second / dlead.second);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

namespace {

// coefficient of x_last^k as a last-var-free polynomial of the same arity
Poly coeff_at_last(const Poly& p, unsigned k) {
  int n = p.arity();
  Poly c(n);
  for (const auto& [e, v] : p.terms()) {
    if (e[n - 1] != k) continue;
    Poly::Expo d = e;
    d[n - 1] = 0;
    c.set_term(d, v);
  }
  return c;
}

Poly lc_last(const Poly& p) { return coeff_at_last(p, p.degree_in(p.arity() - 1)); }

Poly xpow_last(int n, unsigned k) {
  Poly::Expo e(n, 0);
  e[n - 1] = k;
  return Poly::monomial(n, e, Rat(1));
}

Poly must_divide(const Poly& p, const Poly& d) {
  auto q = exact_divide(p, d);
  if (!q) throw std::logic_error("subresultant PRS: inexact division");
  return *q;
}

}  // namespace

Poly prem_last(const Poly& A, const Poly& B) {
  int n = A.arity();
  int v = n - 1;
  unsigned db = B.degree_in(v);
  if (B.is_zero()) throw std::invalid_argument("prem_last: zero divisor");
  Poly b = lc_last(B);
  Poly R = A;
  long e = static_cast<long>(A.degree_in(v)) - static_cast<long>(db) + 1;
  while (!R.is_zero() && R.degree_in(v) >= db) {
    unsigned dr = R.degree_in(v);
    Poly t = lc_last(R) * xpow_last(n, dr - db);
    R = b * R - t * B;
    --e;
  }
  for (; e > 0; --e) R = b * R;
  return R;
}

// Subresultant PRS resultant (Collins/Brown-Traub recurrences, layout as in
// Cohen's Algorithm 3.3.7, contents kept in place). Exactness of the interior
// divisions is the subresultant theorem; the final power correction turns the
// last pseudo-remainder into the true resultant.
static Poly resultant_last(Poly A, Poly B) {
  int n = A.arity();
  int v = n - 1;
  const Poly one = Poly::constant(n, Rat(1));
  if (A.is_zero() || B.is_zero()) return Poly(n);
  unsigned da = A.degree_in(v), db = B.degree_in(v);
  int s = 1;
  if (da < db) {
    std::swap(A, B);
    std::swap(da, db);
    if ((da & 1) && (db & 1)) s = -s;
  }
  if (db == 0) {
    // res(A, const) = const^{deg A}
    Poly r = B.pow(da);
    return s < 0 ? -r : r;
  }
  Poly g = one, h = one;
  while (true) {
    da = A.degree_in(v);
    db = B.degree_in(v);
    unsigned d = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    Poly R = prem_last(A, B);
    A = B;
    if (R.is_zero()) {
      // positive-degree common factor: resultant vanishes identically
      return Poly(n);
    }
    B = must_divide(R, g * h.pow(d));
    g = lc_last(A);
    if (d > 0) h = must_divide(g.pow(d), h.pow(d - 1));
    if (B.degree_in(v) == 0) {
      unsigned dA = A.degree_in(v);
      // B is free of v here; h^{1-dA} * B^{dA}
      Poly r = must_divide(B.pow(dA), h.pow(dA - 1));
      return s < 0 ? -r : r;
    }
  }
}

Poly resultant_keep(const Poly& p, const Poly& q, int var) {
  int n = p.arity();
  if (q.arity() != n) throw std::invalid_argument("resultant: arity mismatch");
  if (var < 0 || var >= n) throw std::invalid_argument("resultant: bad variable");
  // rotate var into the last slot, eliminate there, rotate back
  std::vector<int> to_new(n);
  for (int i = 0; i < n; ++i) to_new[i] = i < var ? i : (i == var ? n - 1 : i - 1);
  Poly r = resultant_last(p.permute_vars(to_new), q.permute_vars(to_new));
  std::vector<int> to_old(n);
  for (int i = 0; i < n; ++i) to_old[to_new[i]] = i;
  return r.permute_vars(to_old);
}

Poly resultant(const Poly& p, const Poly& q, int var) {
  Poly keep = resultant_keep(p, q, var);
  int n = p.arity();
  // shift variables above var down by one
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = i < var ? i : (i == var ? n - 1 : i - 1);
  return keep.permute_vars(shift).drop_unused_above(n - 1);
}

namespace {

// gcd of the last-variable coefficients, one arity down
Poly content_wrt_last(const Poly& p) {
  Poly c(p.arity() - 1);
  for (const Poly& q : p.last_coeffs()) {
    if (q.is_zero()) continue;
    c = gcd_mv(c, q);
    if (c.is_constant()) return Poly::constant(p.arity() - 1, Rat(1));
  }
  return c;
}

}  // namespace

Poly gcd_mv(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("gcd_mv: arity mismatch");
  const int n = a.arity();
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  if (n == 0 || a.is_constant() || b.is_constant()) return Poly::constant(n, Rat(1));
  if (n == 1) return upoly_to_poly(upgcd(upoly_from(a), upoly_from(b))).canonical();
  const int v = n - 1;
  const bool ua = a.uses_var(v), ub = b.uses_var(v);
  if (!ua && !ub)
    return gcd_mv(a.drop_unused_above(v), b.drop_unused_above(v)).pad_arity(n);
  // a common divisor of a last-var-free polynomial is itself last-var-free,
  // so it must divide the other side's content
  if (!ua) return gcd_mv(a, content_wrt_last(b).pad_arity(n));
  if (!ub) return gcd_mv(content_wrt_last(a).pad_arity(n), b);
  Poly ca = content_wrt_last(a), cb = content_wrt_last(b);
  Poly cg = gcd_mv(ca, cb).pad_arity(n);
  Poly F = ca.is_constant() ? a : must_divide(a, ca.pad_arity(n));
  Poly G = cb.is_constant() ? b : must_divide(b, cb.pad_arity(n));
  if (F.degree_in(v) < G.degree_in(v)) std::swap(F, G);
  // primitive PRS; the last member before a zero remainder is the gcd of the
  // primitive parts
  while (true) {
    Poly R = prem_last(F, G);
    if (R.is_zero()) return (cg * G).canonical();
    if (!R.uses_var(v)) return cg.canonical();
    F = G;
    Poly cr = content_wrt_last(R);
    G = cr.is_constant() ? R : must_divide(R, cr.pad_arity(n));
  }
}

std::vector<Poly> prs_principal_coeffs(const Poly& p, const Poly& q) {
  int n = p.arity();
  int v = n - 1;
  std::vector<Poly> out;
  Poly A = p, B = q;
  if (A.is_zero() || B.is_zero()) return out;
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  if (B.degree_in(v) == 0) {
    out.push_back(B);
    return out;
  }
  const Poly one = Poly::constant(n, Rat(1));
  Poly g = one, h = one;
  while (true) {
    unsigned da = A.degree_in(v), db = B.degree_in(v);
    unsigned d = da - db;
    Poly R = prem_last(A, B);
    A = B;
    if (R.is_zero()) break;
    B = must_divide(R, g * h.pow(d));
    out.push_back(lc_last(B));
    g = lc_last(A);
    if (d > 0) h = must_divide(g.pow(d), h.pow(d - 1));
    if (B.degree_in(v) == 0) break;
  }
  return out;
}

}  // namespace rcfw
