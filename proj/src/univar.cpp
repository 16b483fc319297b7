#include "rcfw/univar.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcfw {

UPoly upoly_from(const Poly& p) {
  if (p.effective_arity() > 1) throw std::invalid_argument("upoly_from: not univariate");
  UPoly u;
  for (const auto& [e, c] : p.terms()) {
    uint32_t k = e.empty() ? 0 : e[0];
    if (u.size() <= k) u.resize(k + 1, Rat(0));
    u[k] = c;
  }
  upnorm(u);
  return u;
}

Poly upoly_to_poly(const UPoly& u) {
  Poly p(1);
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0) p.set_term({static_cast<uint32_t>(k)}, u[k]);
  return p;
}

int updeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }
bool upzero(const UPoly& u) { return u.empty(); }

void upnorm(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

UPoly upadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  upnorm(r);
  return r;
}

UPoly upsub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  upnorm(r);
  return r;
}

UPoly upmul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upnorm(r);
  return r;
}

UPoly upscale(const UPoly& a, const Rat& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Rat upeval(const UPoly& a, const Rat& x) {
  Rat acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly upderiv(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
  return r;
}

UPoly upmonic(const UPoly& a) {
  if (a.empty()) return a;
  return upscale(a, Rat(1) / a.back());
}

std::pair<UPoly, UPoly> updivrem(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("updivrem: divide by zero");
  UPoly r = a, q;
  int db = updeg(b);
  if (updeg(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
  while (updeg(r) >= db) {
    int k = updeg(r) - db;
    Rat c = r.back() / b.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[i + k] -= c * b[i];
    upnorm(r);
  }
  upnorm(q);
  return {q, r};
}

UPoly updiv_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = updivrem(a, b);
  if (!r.empty()) throw std::logic_error("updiv_exact: division not exact");
  return q;
}

UPoly upgcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.empty()) {
    auto [q, r] = updivrem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return upmonic(x);
}

UPoly upsquarefree(const UPoly& p) {
  if (p.empty()) return p;
  if (updeg(p) == 0) return {Rat(1)};
  UPoly g = upgcd(p, upderiv(p));
  return upmonic(updiv_exact(p, g));
}

int SturmChain::variations_at(const Rat& x) const {
  int var = 0, prev = 0;
  for (const auto& s : seq) {
    int sg = rat_sign(upeval(s, x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmChain::variations_at_neg_inf() const {
  int var = 0, prev = 0;
  for (const auto& s : seq) {
    if (s.empty()) continue;
    int sg = rat_sign(s.back());
    if (updeg(s) & 1) sg = -sg;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmChain::variations_at_pos_inf() const {
  int var = 0, prev = 0;
  for (const auto& s : seq) {
    if (s.empty()) continue;
    int sg = rat_sign(s.back());
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

SturmChain sturm_chain(const UPoly& p) {
  SturmChain c;
  if (p.empty()) return c;
  c.seq.push_back(p);
  UPoly d = upderiv(p);
  if (d.empty()) return c;
  c.seq.push_back(d);
  while (true) {
    const UPoly& a = c.seq[c.seq.size() - 2];
    const UPoly& b = c.seq.back();
    auto [q, r] = updivrem(a, b);
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    c.seq.push_back(std::move(r));
    if (updeg(c.seq.back()) == 0) break;
  }
  return c;
}

int sturm_count(const SturmChain& c, const Rat& a, const Rat& b) {
  if (!(a < b)) return 0;
  return c.variations_at(a) - c.variations_at(b);
}

int sturm_count_all(const SturmChain& c) {
  return c.variations_at_neg_inf() - c.variations_at_pos_inf();
}

int sturm_count_below(const SturmChain& c, const Rat& b) {
  return c.variations_at_neg_inf() - c.variations_at(b);
}

int sturm_count_above(const SturmChain& c, const Rat& a) {
  return c.variations_at(a) - c.variations_at_pos_inf();
}

Rat cauchy_root_bound(const UPoly& p) {
  if (updeg(p) < 1) return Rat(1);
  Rat m(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rat q = rat_abs(p[i]) / rat_abs(p.back());
    if (q > m) m = q;
  }
  return m + 1;
}

namespace {

void isolate_rec(const SturmChain& ch, const UPoly& p, const Rat& a, const Rat& b,
                 int count, std::vector<RootIvl>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  Rat m = (a + b) / 2;
  if (upeval(p, m) == 0) {
    out.push_back({m, m});
    // walk the endpoints inward until the exact root is separated
    Rat w = (b - a) / 4;
    Rat lo = m - w, hi = m + w;
    while (upeval(p, lo) == 0 || sturm_count(ch, lo, m) > 1) {
      w /= 2;
      lo = m - w;
    }
    while (upeval(p, hi) == 0 || sturm_count(ch, m, hi) > 0) {
      // (m, hi] does not count the root at m itself, so any hit here is a
      // distinct root that still needs separating
      w /= 2;
      hi = m + w;
    }
    isolate_rec(ch, p, a, lo, sturm_count(ch, a, lo), out);
    isolate_rec(ch, p, hi, b, sturm_count(ch, hi, b), out);
  } else {
    int left = sturm_count(ch, a, m);
    isolate_rec(ch, p, a, m, left, out);
    isolate_rec(ch, p, m, b, count - left, out);
  }
}

}  // namespace

namespace {

// Bisection only finds rational roots its midpoints happen to land on.
// Sweep denominators up to a fixed bound so that roots like -3 or 1/2 are
// always reported exactly; larger denominators keep their interval form,
// which every consumer handles anyway.
constexpr long kDenomSweep = 64;

void collapse_rational(const SturmChain& ch, const UPoly& p, RootIvl& iv) {
  Rat target(1, 2 * kDenomSweep * kDenomSweep);
  Rat lo = iv.lo, hi = iv.hi;
  while (hi - lo >= target) {
    Rat m = (lo + hi) / 2;
    if (upeval(p, m) == 0) {
      iv = {m, m};
      return;
    }
    if (sturm_count(ch, lo, m) == 1)
      hi = m;
    else
      lo = m;
  }
  auto floor_rat = [](const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
    return q;
  };
  for (long q = 1; q <= kDenomSweep; ++q) {
    Int num = floor_rat(lo * q) + 1;
    Rat cand(num, q);
    cand.canonicalize();
    if (cand >= hi || cand <= lo) continue;
    if (upeval(p, cand) == 0) {
      iv = {cand, cand};
      return;
    }
  }
  iv = {lo, hi};
}

}  // namespace

std::vector<RootIvl> isolate_upoly_roots(const UPoly& p) {
  std::vector<RootIvl> out;
  if (updeg(p) < 1) return out;
  SturmChain ch = sturm_chain(p);
  Rat bound = cauchy_root_bound(p);
  // endpoints beyond the root bound are never roots
  int total = sturm_count(ch, -bound, bound);
  isolate_rec(ch, p, -bound, bound, total, out);
  for (RootIvl& iv : out)
    if (!iv.exact()) collapse_rational(ch, p, iv);
  std::sort(out.begin(), out.end(), [](const RootIvl& x, const RootIvl& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace rcfw
