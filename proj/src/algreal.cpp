#include "rcfw/algreal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rcfw/resultant.hpp"

namespace rcfw {

Ival iv_add(const Ival& a, const Ival& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Ival iv_sub(const Ival& a, const Ival& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Ival iv_neg(const Ival& a) { return {-a.hi, -a.lo}; }

Ival iv_mul(const Ival& a, const Ival& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

Ival iv_pow(const Ival& a, unsigned e) {
  if (e == 0) return {Rat(1), Rat(1)};
  if (e == 1) return a;
  if (e % 2 == 1) return {rat_pow(a.lo, e), rat_pow(a.hi, e)};
  Rat alo = rat_abs(a.lo), ahi = rat_abs(a.hi);
  Rat big = rat_pow(std::max(alo, ahi), e);
  if (a.lo <= 0 && 0 <= a.hi) return {Rat(0), big};
  return {rat_pow(std::min(alo, ahi), e), big};
}

bool iv_excludes_zero(const Ival& a) { return a.lo > 0 || a.hi < 0; }

Ival poly_eval_ival(const Poly& p, const std::vector<Ival>& x) {
  Ival acc{Rat(0), Rat(0)};
  for (const auto& [e, c] : p.terms()) {
    Ival t{c, c};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = iv_mul(t, iv_pow(x[i], e[i]));
    acc = iv_add(acc, t);
  }
  return acc;
}

AlgReal::AlgReal() { *this = from_rat(Rat(0)); }

AlgReal::AlgReal(Poly def, UPoly up, Rat lo, Rat hi)
    : defining_(std::move(def)), up_(std::move(up)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ != hi_) sign_lo_ = rat_sign(upeval(up_, lo_));
}

AlgReal AlgReal::from_rat(const Rat& r) {
  UPoly u{-r, Rat(1)};
  return AlgReal(upoly_to_poly(u), u, r, r);
}

std::vector<AlgReal> AlgReal::roots_of_upoly(const UPoly& u) {
  std::vector<AlgReal> out;
  if (upzero(u)) throw std::invalid_argument("roots_of: zero polynomial");
  UPoly sf = upsquarefree(u);
  Poly sfp = upoly_to_poly(sf);
  for (const RootIvl& iv : isolate_upoly_roots(sf)) {
    if (iv.exact())
      out.push_back(from_rat(iv.lo));
    else
      out.push_back(AlgReal(sfp, sf, iv.lo, iv.hi));
  }
  return out;
}

std::vector<AlgReal> AlgReal::roots_of(const Poly& univ) { return roots_of_upoly(upoly_from(univ)); }

Rat AlgReal::rat_value() const {
  if (!is_rat()) throw std::logic_error("AlgReal::rat_value on irrational");
  return lo_;
}

void AlgReal::collapse_to(const Rat& r) {
  *this = from_rat(r);
}

void AlgReal::refine() {
  if (is_rat()) return;
  Rat m = (lo_ + hi_) / 2;
  int sm = rat_sign(upeval(up_, m));
  if (sm == 0) {
    collapse_to(m);
    return;
  }
  if (sm == sign_lo_)
    lo_ = m;
  else
    hi_ = m;
}

void AlgReal::refine_below(const Rat& w) {
  while (!is_rat() && width() >= w) refine();
}

int AlgReal::sign() const {
  if (is_rat()) return rat_sign(lo_);
  if (lo_ >= 0) return 1;
  if (hi_ <= 0) return -1;
  // 0 inside the interval: it is the root iff defining(0) == 0
  if (upeval(up_, Rat(0)) == 0) return 0;
  AlgReal c = *this;
  while (c.lo_ < 0 && c.hi_ > 0) c.refine();
  return c.sign();
}

double AlgReal::approx() const {
  AlgReal c = *this;
  c.refine_below(Rat(1, 1099511627776L));  // 2^-40
  Rat m = (c.lo_ + c.hi_) / 2;
  return m.get_d();
}

std::string AlgReal::str() const {
  if (is_rat()) return rat_str(lo_);
  std::ostringstream os;
  os << "root(" << defining_.str() << " in (" << rat_str(lo_) << "," << rat_str(hi_) << "))";
  return os.str();
}

bool is_root_of(const AlgReal& a, const UPoly& p) {
  if (upzero(p)) return true;
  if (a.is_rat()) return upeval(p, a.rat_value()) == 0;
  UPoly g = upgcd(p, a.defining_upoly());
  if (updeg(g) < 1) return false;
  // g divides the square-free defining polynomial, so neither endpoint is a
  // root of g and at most one root (namely a) can sit inside
  int sl = rat_sign(upeval(g, a.lo()));
  int sr = rat_sign(upeval(g, a.hi()));
  return sl * sr < 0;
}

int AlgReal::compare(const AlgReal& a0, const AlgReal& b0) {
  if (a0.is_rat() && b0.is_rat()) {
    if (a0.lo_ < b0.lo_) return -1;
    if (a0.lo_ > b0.lo_) return 1;
    return 0;
  }
  AlgReal a = a0, b = b0;
  auto separated = [&](int* out) {
    if (a.hi_ < b.lo_ || (a.hi_ == b.lo_ && !(a.is_rat() && b.is_rat()))) {
      *out = -1;
      return true;
    }
    if (b.hi_ < a.lo_ || (b.hi_ == a.lo_ && !(a.is_rat() && b.is_rat()))) {
      *out = 1;
      return true;
    }
    return false;
  };
  int r;
  if (separated(&r)) return r;
  // equality test; afterwards refinement is guaranteed to separate
  bool maybe_equal;
  if (a.is_rat())
    maybe_equal = upeval(b.up_, a.lo_) == 0 && b.lo_ < a.lo_ && a.lo_ < b.hi_;
  else if (b.is_rat())
    maybe_equal = upeval(a.up_, b.lo_) == 0 && a.lo_ < b.lo_ && b.lo_ < a.hi_;
  else {
    UPoly g = upgcd(a.up_, b.up_);
    maybe_equal = is_root_of(a, g) && is_root_of(b, g);
    if (maybe_equal) {
      SturmChain ch = sturm_chain(g);
      while (true) {
        Rat L = std::min(a.lo_, b.lo_), R = std::max(a.hi_, b.hi_);
        if (sturm_count(ch, L, R) == 1) return 0;
        a.refine();
        b.refine();
        if (separated(&r)) return r;
      }
    }
  }
  if (maybe_equal) return 0;  // rational coincidence case proved equal
  while (!separated(&r)) {
    a.refine();
    b.refine();
  }
  return r;
}

Rat rational_between(const AlgReal& a0, const AlgReal& b0) {
  AlgReal a = a0, b = b0;
  while (!(a.hi() <= b.lo())) {
    a.refine();
    b.refine();
  }
  if (a.hi() == b.lo()) {
    // touching endpoints: a < a.hi() is only guaranteed for proper
    // intervals; nudge with one more refinement on whichever is exact
    if (a.is_rat() && b.is_rat()) throw std::logic_error("rational_between: a == b?");
    if (a.is_rat()) {
      // a rational equals b.lo; any value in (b.lo, b.hi) exceeds a only if
      // it stays below the root; take midpoint of (a, b.lo')? refine b once
      // and retry
      AlgReal bb = b;
      bb.refine();
      return rational_between(a, bb);
    }
    return a.hi();
  }
  return (a.hi() + b.lo()) / 2;
}

Rat rational_below(const AlgReal& a) { return a.lo() - 1; }
Rat rational_above(const AlgReal& a) { return a.hi() + 1; }

namespace {

// annihilating polynomial route: eliminate every algebraic coordinate of
// t - p by resultants against the defining polynomials, leaving a nonzero
// univariate in t whose roots include the value p(x)
UPoly annihilator(const Poly& p, const std::vector<AlgReal>& x, const std::vector<int>& alg_vars) {
  int n = p.arity();
  Poly F = Poly::variable(n + 1, n) - p.pad_arity(n + 1);
  for (int v : alg_vars) {
    Poly def(n + 1);
    const UPoly& d = x[v].defining_upoly();
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      Poly::Expo e(n + 1, 0);
      e[v] = static_cast<uint32_t>(k);
      def.set_term(e, d[k]);
    }
    F = resultant_keep(def, F, v);
  }
  Poly only_t = F.permute_vars([&] {
    std::vector<int> perm(n + 1);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    perm[n] = 0;
    return perm;
  }());
  return upoly_from(only_t.drop_unused_above(1));
}

}  // namespace

int sign_at(const Poly& p, const std::vector<AlgReal>& x) {
  if (static_cast<int>(x.size()) != p.arity())
    throw std::invalid_argument("sign_at: point arity mismatch");
  // substitute rational coordinates exactly
  Poly q = p;
  std::vector<int> alg_vars;
  for (int i = 0; i < p.arity(); ++i) {
    if (x[i].is_rat())
      q = q.substitute(i, x[i].rat_value());
    else if (q.uses_var(i))
      alg_vars.push_back(i);
  }
  if (alg_vars.empty()) return rat_sign(q.constant_value());

  std::vector<AlgReal> pt = x;
  auto try_refine = [&](int rounds) -> std::optional<int> {
    for (int r = 0; r < rounds; ++r) {
      std::vector<Ival> iv(q.arity(), Ival{Rat(0), Rat(0)});
      for (int v : alg_vars) iv[v] = pt[v].ival();
      Ival val = poly_eval_ival(q, iv);
      if (iv_excludes_zero(val)) return val.lo > 0 ? 1 : -1;
      for (int v : alg_vars)
        for (int k = 0; k < 4; ++k) pt[v].refine();
    }
    return std::nullopt;
  };
  if (auto s = try_refine(6)) return *s;

  if (alg_vars.size() == 1) {
    int v = alg_vars[0];
    // collapse q to a univariate in v
    std::vector<int> perm(q.arity());
    perm[v] = 0;
    int next = 1;
    for (int i = 0; i < q.arity(); ++i)
      if (i != v) perm[i] = next++;
    UPoly u = upoly_from(q.permute_vars(perm).drop_unused_above(1));
    if (is_root_of(pt[v], u)) return 0;
  } else {
    UPoly ann = annihilator(q, pt, alg_vars);
    if (upzero(ann)) throw std::logic_error("sign_at: annihilator vanished");
    ann = upsquarefree(ann);
    if (upeval(ann, Rat(0)) == 0) {
      // strip the root at zero, bound the nonzero roots away from it
      UPoly w = ann;
      while (upeval(w, Rat(0)) == 0) w = updiv_exact(w, UPoly{Rat(0), Rat(1)});
      Rat b = cauchy_root_bound(w);  // fallback if no roots remain
      bool have = false;
      Rat nearest(0);
      for (AlgReal r : AlgReal::roots_of_upoly(w)) {
        while (r.sign() != 0 && !(r.lo() > 0 || r.hi() < 0)) r.refine();
        Rat dist = r.lo() > 0 ? r.lo() : -r.hi();
        if (!have || dist < nearest) {
          nearest = dist;
          have = true;
        }
      }
      if (!have) nearest = b;
      // value is a root of ann; once the enclosure is inside (-nearest,
      // nearest) the only root left is zero itself
      while (true) {
        std::vector<Ival> iv(q.arity(), Ival{Rat(0), Rat(0)});
        for (int v : alg_vars) iv[v] = pt[v].ival();
        Ival val = poly_eval_ival(q, iv);
        if (iv_excludes_zero(val)) return val.lo > 0 ? 1 : -1;
        if (val.hi < nearest && val.lo > -nearest) return 0;
        for (int v : alg_vars) pt[v].refine();
      }
    }
    // zero is not a root of the annihilator, so the value is nonzero
  }
  // nonzero value: refinement must terminate
  while (true) {
    if (auto s = try_refine(8)) return *s;
  }
}

}  // namespace rcfw
