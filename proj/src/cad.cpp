#include "rcfw/cad.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcfw/errors.hpp"
#include "rcfw/resultant.hpp"
#include "rcfw/univar.hpp"

namespace rcfw {
namespace {

// ---------------------------------------------------------------------------
// small helpers

// dense view of a polynomial that only uses variable v
UPoly upoly_in(const Poly& p, int v) {
  UPoly u;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.arity(); ++i)
      if (i != v && e[i] != 0) throw std::logic_error("upoly_in: extra variable present");
    if (u.size() <= e[v]) u.resize(e[v] + 1, Rat(0));
    u[e[v]] = c;
  }
  upnorm(u);
  return u;
}

Poly poly_from_up(int arity, int var, const UPoly& u) {
  Poly p(arity);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    Poly::Expo e(arity, 0);
    e[var] = static_cast<uint32_t>(k);
    p.set_term(e, u[k]);
  }
  return p;
}

Poly must_div(const Poly& p, const Poly& d) {
  auto q = exact_divide(p, d);
  if (!q) throw std::logic_error("cad: expected exact division failed");
  return *q;
}

// content with respect to the top variable, one arity down
Poly content_top(const Poly& p) {
  Poly c(p.arity() - 1);
  for (const Poly& q : p.last_coeffs()) {
    if (q.is_zero()) continue;
    c = gcd_mv(c, q);
    if (c.is_constant()) return Poly::constant(p.arity() - 1, Rat(1));
  }
  return c;
}

int env_thread_cap() {
  const char* s = std::getenv("RCFW_THREADS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if ((end && *end) || v < 1) return 0;
  return static_cast<int>(v > 256 ? 256 : v);
}

bool want_parallel(LiftMode m) {
#ifdef _OPENMP
  return m != LiftMode::Serial;
#else
  (void)m;
  return false;
#endif
}

#ifdef _OPENMP
int thread_count() {
  int cap = env_thread_cap();
  int def = omp_get_max_threads();
  return (cap > 0 && cap < def) ? cap : def;
}
#endif

// ---------------------------------------------------------------------------
// basis preparation
//
// Each level keeps a primitive (in its top variable), squarefree, pairwise
// coprime, canonical list. Contents drop to the level of their own top
// variable. Primitivity is what rules out identical vanishing of a basis
// polynomial over any positive-dimensional base cell, which is the side
// condition the reduced projection operator below needs.

void route(std::vector<std::vector<Poly>>& pool, const Poly& p0) {
  Poly p = p0.canonical();
  if (p.is_constant()) return;
  int l = p.effective_arity();
  pool[l - 1].push_back(p.drop_unused_above(l));
}

std::vector<std::vector<Poly>> prepare_basis(const std::vector<Poly>& inputs, int n) {
  std::vector<std::vector<Poly>> pool(n), basis(n);
  for (const Poly& p : inputs) route(pool, p);
  for (int l = n; l >= 1; --l) {
    const int v = l - 1;
    std::vector<Poly> work = std::move(pool[l - 1]);
    std::vector<Poly>& B = basis[l - 1];
    for (std::size_t wi = 0; wi < work.size(); ++wi) {
      Poly q = work[wi].canonical();
      if (q.is_constant()) continue;
      if (q.effective_arity() < l) {  // a split piece that lost the top variable
        route(pool, q);
        continue;
      }
      if (l >= 2) {
        Poly cont = content_top(q);
        if (!cont.is_constant()) {
          route(pool, cont);
          q = must_div(q, cont.pad_arity(l)).canonical();
        }
      }
      if (q.degree_in(v) >= 2) {
        Poly g = gcd_mv(q, q.derivative(v));
        if (!g.is_constant()) q = must_div(q, g).canonical();
      }
      bool consumed = false;
      for (std::size_t bi = 0; bi < B.size(); ++bi) {
        if (B[bi] == q) {
          consumed = true;
          break;
        }
        Poly g = gcd_mv(q, B[bi]);
        if (g.is_constant()) continue;
        // split both against the common factor and reprocess the pieces
        work.push_back(must_div(B[bi], g));
        work.push_back(g);
        work.push_back(must_div(q, g));
        B.erase(B.begin() + static_cast<std::ptrdiff_t>(bi));
        consumed = true;
        break;
      }
      if (!consumed) B.push_back(q);
    }
    if (B.size() > kMaxCadLevelPolys)
      throw CapacityError("cad: " + std::to_string(B.size()) + " basis polynomials at level " +
                          std::to_string(l) + " (limit " + std::to_string(kMaxCadLevelPolys) + ")");
    if (l >= 2) {
      // reduced projection: every coefficient, the discriminant of each
      // basis polynomial, and all pairwise resultants
      for (const Poly& f : B)
        for (const Poly& c : f.last_coeffs())
          if (!c.is_zero()) route(pool, c);
      for (const Poly& f : B)
        if (f.degree_in(v) >= 2) route(pool, resultant(f, f.derivative(v), v));
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) route(pool, resultant(B[i], B[j], v));
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// lifting

struct LNode {
  AlgReal coord;
  bool sec = false;
  std::vector<LNode> kids;
  std::vector<int> signs;  // leaves only, when inputs are tracked
};

// candidate roots of one level polynomial over one base point
struct Cands {
  bool nullified = false;  // vanishes identically on the whole line
  bool exact = false;      // roots are exact, no confirmation required
  std::vector<AlgReal> roots;
  // (variable, h) pairs: the cached result only applies to base points whose
  // coordinate at `variable` is not a root of h
  std::vector<std::pair<int, UPoly>> checks;
};

class Lifter {
 public:
  Lifter(const std::vector<std::vector<Poly>>& basis, int n, const std::vector<Poly>* inputs)
      : basis_(basis), n_(n), inputs_(inputs) {}

  LNode run(bool parallel) {
    LNode root;
    std::vector<AlgReal> base;
#ifdef _OPENMP
    if (parallel && n_ >= 2) {
      root.kids = stack_over(base, 1);
      const int cnt = static_cast<int>(root.kids.size());
      std::exception_ptr err = nullptr;
      int nt = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
      for (int i = 0; i < cnt; ++i) {
        try {
          std::vector<AlgReal> b2{root.kids[i].coord};
          expand(root.kids[i], b2, 2);
        } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      return root;
    }
#else
    (void)parallel;
#endif
    expand(root, base, 1);
    return root;
  }

 private:
  const std::vector<std::vector<Poly>>& basis_;
  int n_;
  const std::vector<Poly>* inputs_;
  std::map<std::string, Cands> memo_;
  std::mutex mu_;

  void expand(LNode& node, std::vector<AlgReal>& base, int level) {
    node.kids = stack_over(base, level);
    for (LNode& kid : node.kids) {
      base.push_back(kid.coord);
      if (level < n_) {
        expand(kid, base, level + 1);
      } else if (inputs_) {
        kid.signs.reserve(inputs_->size());
        for (const Poly& p : *inputs_) kid.signs.push_back(sign_at(p, base));
      }
      base.pop_back();
    }
  }

  std::vector<LNode> stack_over(const std::vector<AlgReal>& base, int level) {
    const std::vector<Poly>& polys = basis_[level - 1];
    std::vector<AlgReal> roots;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      Cands c = candidates(polys[k], base, level, k);
      if (c.nullified) continue;
      for (const AlgReal& r : c.roots) {
        if (!c.exact) {
          std::vector<AlgReal> pt(base.begin(), base.end());
          pt.push_back(r);
          if (sign_at(polys[k], pt) != 0) continue;
        }
        roots.push_back(r);
      }
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgReal& a, const AlgReal& b) { return AlgReal::compare(a, b) < 0; });
    std::vector<AlgReal> uniq;
    for (const AlgReal& r : roots) {
      if (!uniq.empty() && AlgReal::compare(uniq.back(), r) == 0) {
        // same point found through several polynomials: keep the representation
        // with the smaller defining polynomial
        if (updeg(r.defining_upoly()) < updeg(uniq.back().defining_upoly())) uniq.back() = r;
        continue;
      }
      uniq.push_back(r);
    }
    std::vector<LNode> st;
    auto sector = [&st](const Rat& x) {
      LNode n;
      n.coord = AlgReal::from_rat(x);
      n.sec = false;
      st.push_back(std::move(n));
    };
    if (uniq.empty()) {
      sector(Rat(0));
      return st;
    }
    sector(rational_below(uniq.front()));
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      LNode n;
      n.coord = uniq[i];
      n.sec = true;
      st.push_back(std::move(n));
      if (i + 1 < uniq.size())
        sector(rational_between(uniq[i], uniq[i + 1]));
    }
    sector(rational_above(uniq.back()));
    return st;
  }

  static std::string memo_key(int level, std::size_t k, const std::vector<AlgReal>& base) {
    std::ostringstream os;
    os << level << ':' << k;
    for (const AlgReal& a : base) {
      if (a.is_rat()) {
        os << ";r" << rat_str(a.rat_value());
      } else {
        os << ";a";
        for (const Rat& c : a.defining_upoly()) os << ',' << rat_str(c);
      }
    }
    return os.str();
  }

  Cands candidates(const Poly& f, const std::vector<AlgReal>& base, int level, std::size_t k) {
    Poly q = f;
    std::vector<int> alg;
    for (int i = 0; i + 1 < level; ++i) {
      if (base[i].is_rat()) {
        if (q.uses_var(i)) q = q.substitute(i, base[i].rat_value());
      } else if (q.uses_var(i)) {
        alg.push_back(i);
      }
    }
    Cands out;
    if (q.is_zero()) {
      out.nullified = true;
      return out;
    }
    if (alg.empty()) {
      out.exact = true;
      UPoly u = upoly_in(q, level - 1);
      if (updeg(u) >= 1) out.roots = AlgReal::roots_of_upoly(u);
      return out;
    }
    // candidates over an algebraic base point come from resultants against the
    // defining polynomials; results are shared between conjugate points
    const std::string key = memo_key(level, k, base);
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        bool ok = true;
        for (const auto& [v, h] : it->second.checks)
          if (is_root_of(base[v], h)) {
            ok = false;
            break;
          }
        if (ok) return it->second;
      }
    }
    std::optional<Cands> got = eliminate(q, base, alg, level);
    if (!got) {
      std::vector<int> rev(alg.rbegin(), alg.rend());
      got = eliminate(q, base, rev, level);
    }
    if (!got)
      throw std::runtime_error(
          "cad: could not separate algebraic base coordinates while lifting "
          "(conjugate root of a reducible defining polynomial interferes)");
    if (!got->nullified) {
      std::lock_guard<std::mutex> g(mu_);
      memo_.emplace(key, *got);
    }
    return *got;
  }

  // eliminate the algebraic coordinates from F one at a time; nullopt means
  // the order failed (a conjugate of a later coordinate annihilates an
  // intermediate resultant) and another order may still succeed
  std::optional<Cands> eliminate(Poly F, const std::vector<AlgReal>& base,
                                 const std::vector<int>& order, int level) {
    Cands out;
    bool took_resultant = false;
    for (int v : order) {
      if (!F.uses_var(v)) continue;
      // univariate coefficients of F in v, grouped by the other exponents
      std::map<Poly::Expo, UPoly> parts;
      for (const auto& [e, c] : F.terms()) {
        Poly::Expo rest = e;
        unsigned dv = rest[v];
        rest[v] = 0;
        UPoly& u = parts[rest];
        if (u.size() <= dv) u.resize(dv + 1, Rat(0));
        u[dv] = c;
      }
      UPoly h;
      for (const auto& [rest, u0] : parts) {
        UPoly u = u0;
        upnorm(u);
        h = upgcd(h, u);
        if (updeg(h) == 0) break;
      }
      if (updeg(h) >= 1) {
        if (is_root_of(base[v], h)) {
          if (!took_resultant) {
            out.nullified = true;  // the polynomial itself vanishes over the base
            return out;
          }
          return std::nullopt;
        }
        out.checks.emplace_back(v, h);
      }
      UPoly d = base[v].defining_upoly();
      if (updeg(h) >= 1) {
        UPoly g = upgcd(d, h);
        if (updeg(g) >= 1) d = updiv_exact(d, g);  // strip annihilating conjugates
      }
      F = resultant_keep(poly_from_up(F.arity(), v, d), F, v);
      if (F.is_zero()) throw std::logic_error("cad: stripped resultant vanished");
      took_resultant = true;
    }
    UPoly u = upoly_in(F, level - 1);
    if (updeg(u) >= 1) out.roots = AlgReal::roots_of_upoly(u);
    return out;
  }
};

void flatten(const LNode& node, int level, CadTree& t, CadCell& scratch) {
  for (std::size_t i = 0; i < node.kids.size(); ++i) {
    const LNode& kid = node.kids[i];
    scratch.path.push_back(static_cast<int>(i));
    scratch.sample.push_back(kid.coord);
    scratch.section.push_back(kid.sec);
    if (level == t.n) {
      CadCell c;
      c.path = scratch.path;
      c.sample = scratch.sample;
      c.section = scratch.section;
      c.signs = kid.signs;
      c.dim = 0;
      for (bool s : c.section)
        if (!s) ++c.dim;
      t.cells.push_back(std::move(c));
    } else {
      flatten(kid, level + 1, t, scratch);
    }
    scratch.path.pop_back();
    scratch.sample.pop_back();
    scratch.section.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// decomposition and set queries

CadTree decompose(const std::vector<Poly>& polys, int n, LiftMode mode) {
  if (n < 1) throw std::invalid_argument("decompose: ambient dimension must be positive");
  if (n > kMaxCadVars)
    throw CapacityError("decompose: ambient dimension " + std::to_string(n) +
                        " exceeds the supported " + std::to_string(kMaxCadVars));
  for (const Poly& p : polys) {
    if (p.arity() != n) throw std::invalid_argument("decompose: input arity mismatch");
    if (p.degree() > kMaxCadDegree)
      throw CapacityError("decompose: input degree " + std::to_string(p.degree()) + " exceeds " +
                          std::to_string(kMaxCadDegree));
  }
  CadTree t;
  t.n = n;
  t.inputs = polys;
  t.basis = prepare_basis(polys, n);
  Lifter lift(t.basis, n, &t.inputs);
  LNode root = lift.run(want_parallel(mode));
  CadCell scratch;
  flatten(root, 1, t, scratch);
  return t;
}

CadTree decompose_for(const SaDescription& d, LiftMode mode) {
  return decompose(distinct_polys(d), d.ambient, mode);
}

std::vector<int> set_cells(const CadTree& t, const SaDescription& d) {
  if (d.ambient != t.n) throw std::invalid_argument("set_cells: ambient dimension mismatch");
  // resolve every description polynomial against the tree inputs
  std::vector<std::vector<std::pair<std::size_t, int>>> want;  // per conjunct: (input index, sign)
  auto input_index = [&t](const Poly& p) -> std::size_t {
    for (std::size_t i = 0; i < t.inputs.size(); ++i)
      if (t.inputs[i] == p) return i;
    throw std::invalid_argument("set_cells: description polynomial is not a tree input: " + p.str());
  };
  want.reserve(d.conjuncts.size());
  for (const auto& conj : d.conjuncts) {
    std::vector<std::pair<std::size_t, int>> w;
    w.reserve(conj.size());
    for (const SignCond& sc : conj) w.emplace_back(input_index(sc.poly), rel_to_sign(sc.rel));
    want.push_back(std::move(w));
  }
  std::vector<int> out;
  for (std::size_t ci = 0; ci < t.cells.size(); ++ci) {
    const CadCell& cell = t.cells[ci];
    for (const auto& w : want) {
      bool ok = true;
      for (const auto& [ix, sg] : w)
        if (cell.signs[ix] != sg) {
          ok = false;
          break;
        }
      if (ok) {
        out.push_back(static_cast<int>(ci));
        break;
      }
    }
  }
  return out;
}

int locate(const CadTree& t, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != t.n) throw std::invalid_argument("locate: arity mismatch");
  if (t.cells.empty()) throw std::logic_error("locate: empty tree");
  int lo = 0, hi = static_cast<int>(t.cells.size());
  for (int k = 0; k < t.n; ++k) {
    AlgReal xv = AlgReal::from_rat(x[k]);
    int i = lo;
    int prev_lo = -1, prev_hi = -1;
    int pick_lo = -1, pick_hi = -1;
    while (i < hi) {
      int p = t.cells[i].path[k];
      int j = i;
      while (j < hi && t.cells[j].path[k] == p) ++j;
      if (t.cells[i].section[k]) {
        int c = AlgReal::compare(xv, t.cells[i].sample[k]);
        if (c == 0) {
          pick_lo = i;
          pick_hi = j;
          break;
        }
        if (c < 0) {  // x sits in the sector just below this section
          pick_lo = prev_lo;
          pick_hi = prev_hi;
          break;
        }
      }
      prev_lo = i;
      prev_hi = j;
      i = j;
    }
    if (pick_lo < 0) {  // above every section: the top sector run
      pick_lo = prev_lo;
      pick_hi = prev_hi;
    }
    lo = pick_lo;
    hi = pick_hi;
  }
  if (hi - lo != 1) throw std::logic_error("locate: ambiguous cell");
  return lo;
}

int dimension(const SaDescription& d) {
  CadTree t = decompose_for(d);
  std::vector<int> sel = set_cells(t, d);
  int dim = -1;
  for (int i : sel) dim = std::max(dim, t.cells[i].dim);
  return dim;
}

bool is_empty(const SaDescription& d) { return dimension(d) == -1; }

bool sets_equal(const SaDescription& a, const SaDescription& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("sets_equal: ambient dimension mismatch");
  std::vector<Poly> joint = distinct_polys(a);
  for (const Poly& p : distinct_polys(b))
    if (std::find(joint.begin(), joint.end(), p) == joint.end()) joint.push_back(p);
  CadTree t = decompose(joint, a.ambient);
  return set_cells(t, a) == set_cells(t, b);
}

// ---------------------------------------------------------------------------
// adjacency
//
// Within one stack, the closure of a sector reaches the bounding sections.
// Across a base sector/base section pair in the plane, each section curve of
// the sector stack has a one-sided limit at the section's abscissa, and a
// band between two curves closes onto the segment between their limits. The
// limits are read off by counting stack roots between rational separators at
// a rational abscissa chosen beyond the last crossing of any separator line.

namespace {

void cross_edges(const CadTree& t, const std::vector<std::vector<int>>& stacks, int b, int s,
                 std::vector<std::pair<int, int>>& out) {
  const std::vector<int>& Sb = stacks[b];
  const std::vector<int>& Ss = stacks[s];
  const AlgReal& xi = t.cells[Ss[0]].sample[0];
  std::vector<int> bsecpos;
  for (int j = 0; j < static_cast<int>(Sb.size()); ++j)
    if (t.cells[Sb[j]].section[1]) bsecpos.push_back(j);
  const int r = static_cast<int>(bsecpos.size());
  if (r == 0) {  // one cell covering the whole line: touches everything at xi
    for (int cj : Ss) out.emplace_back(Sb[0], cj);
    return;
  }
  std::vector<AlgReal> ys;
  for (int cj : Ss)
    if (t.cells[cj].section[1]) ys.push_back(t.cells[cj].sample[1]);
  const int kk = static_cast<int>(ys.size());
  std::vector<Rat> c;
  if (kk == 0) {
    c.push_back(Rat(0));
  } else {
    c.push_back(rational_below(ys.front()));
    for (int i = 1; i < kk; ++i) c.push_back(rational_between(ys[i - 1], ys[i]));
    c.push_back(rational_above(ys.back()));
  }
  const std::vector<Poly>& b2 = t.basis[1];
  std::vector<AlgReal> guards;
  for (const Poly& f : b2)
    for (const Rat& ci : c) {
      Poly g = f.substitute(1, ci);
      if (g.is_zero()) throw std::logic_error("cad: separator line lies inside a curve");
      if (g.is_constant()) continue;
      UPoly u = upoly_in(g, 0);
      for (AlgReal& rt : AlgReal::roots_of_upoly(u)) guards.push_back(std::move(rt));
    }
  const bool left = b < s;  // the sector lies left of the section
  std::optional<AlgReal> far;
  if (left && b > 0) far = t.cells[stacks[b - 1][0]].sample[0];
  if (!left && b + 1 < static_cast<int>(stacks.size())) far = t.cells[stacks[b + 1][0]].sample[0];
  Rat xstar;
  if (left) {
    std::optional<AlgReal> m = far;
    for (const AlgReal& g : guards)
      if (AlgReal::compare(g, xi) < 0 && (!m || AlgReal::compare(g, *m) > 0)) m = g;
    xstar = m ? rational_between(*m, xi) : rational_below(xi);
  } else {
    std::optional<AlgReal> m = far;
    for (const AlgReal& g : guards)
      if (AlgReal::compare(g, xi) > 0 && (!m || AlgReal::compare(g, *m) < 0)) m = g;
    xstar = m ? rational_between(xi, *m) : rational_above(xi);
  }
  int below = 0, above = 0;
  std::vector<int> band(kk, 0);
  for (const Poly& f : b2) {
    Poly g = f.substitute(0, xstar);
    if (g.is_constant()) continue;
    UPoly u = upoly_in(g, 1);
    SturmChain ch = sturm_chain(u);
    below += sturm_count_below(ch, c.front());
    for (int i = 0; i < kk; ++i) band[i] += sturm_count(ch, c[i], c[i + 1]);
    above += sturm_count_above(ch, c.back());
  }
  int total = below + above;
  for (int x : band) total += x;
  if (total != r) throw std::logic_error("cad: stack size changed across a sector");
  // branch limits, bottom to top: -1 = -inf, i in [0, kk) = ys[i], kk = +inf
  std::vector<int> lim(r);
  {
    int j = 0;
    for (int q = 0; q < below; ++q) lim[j++] = -1;
    for (int i = 0; i < kk; ++i)
      for (int q = 0; q < band[i]; ++q) lim[j++] = i;
    for (int q = 0; q < above; ++q) lim[j++] = kk;
  }
  for (int j = 0; j < r; ++j)
    if (lim[j] >= 0 && lim[j] < kk) out.emplace_back(Sb[bsecpos[j]], Ss[2 * lim[j] + 1]);
  for (int p = 0; p <= r; ++p) {
    int llo = (p == 0) ? -1 : lim[p - 1];
    int lhi = (p == r) ? kk : lim[p];
    if (llo == -1 && lhi == -1) continue;  // pinched off below
    if (llo == kk) continue;               // pinched off above
    int lo_idx = (llo == -1) ? 0 : 2 * llo + 1;
    int hi_idx = (lhi == kk) ? 2 * kk : 2 * lhi + 1;
    for (int q = lo_idx; q <= hi_idx; ++q) out.emplace_back(Sb[2 * p], Ss[q]);
  }
}

}  // namespace

std::vector<std::pair<int, int>> frontier_pairs(const CadTree& t) {
  if (t.n < 1 || t.n > 2)
    throw UnsupportedError("cell adjacency is exact only for ambient dimension <= 2");
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(t.cells.size());
  if (t.n == 1) {
    for (int i = 0; i < m; ++i) {
      if (t.cells[i].section[0]) continue;
      if (i > 0) out.emplace_back(i, i - 1);
      if (i + 1 < m) out.emplace_back(i, i + 1);
    }
    return out;
  }
  std::vector<std::vector<int>> stacks;
  for (int i = 0; i < m; ++i) {
    int b = t.cells[i].path[0];
    if (static_cast<int>(stacks.size()) <= b) stacks.resize(b + 1);
    stacks[b].push_back(i);
  }
  for (const std::vector<int>& st : stacks)
    for (int j = 0; j < static_cast<int>(st.size()); ++j) {
      if (t.cells[st[j]].section[1]) continue;
      if (j > 0) out.emplace_back(st[j], st[j - 1]);
      if (j + 1 < static_cast<int>(st.size())) out.emplace_back(st[j], st[j + 1]);
    }
  for (int s = 1; s < static_cast<int>(stacks.size()); s += 2) {
    cross_edges(t, stacks, s - 1, s, out);
    if (s + 1 < static_cast<int>(stacks.size())) cross_edges(t, stacks, s + 1, s, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int connected_components(const SaDescription& d) {
  if (d.ambient > 2)
    throw UnsupportedError("connected_components: exact only for ambient dimension <= 2");
  CadTree t = decompose_for(d);
  std::vector<int> sel = set_cells(t, d);
  if (sel.empty()) return 0;
  std::vector<char> in(t.cells.size(), 0);
  for (int i : sel) in[i] = 1;
  std::vector<int> parent(t.cells.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [a, b] : frontier_pairs(t))
    if (in[a] && in[b]) parent[find(a)] = find(b);
  std::set<int> roots;
  for (int i : sel) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

// ---------------------------------------------------------------------------
// sentence decision
//
// A closed sentence splits at its boolean skeleton into closed pieces; each
// quantified piece gets its own decomposition over just its own variables,
// ordered by binder occurrence. Within a piece, truth is evaluated by
// walking stacks: exists = some child, forall = every child. Atoms that skip
// levels are constant across the skipped stacks, so any child stands in.

namespace {

void collect_names(const FormulaPtr& f, std::set<std::string>& out) {
  for (const std::string& v : f->vars) out.insert(v);
  for (const std::string& b : f->bound) out.insert(b);
  for (const FormulaPtr& k : f->kids) collect_names(k, out);
}

// give every binder a globally unique name so one level assignment covers
// sibling scopes as well
FormulaPtr freshen(const FormulaPtr& f, std::map<std::string, std::string>& env,
                   std::set<std::string>& used, int& counter) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::True:
    case K::False:
      return f;
    case K::Atom: {
      std::vector<std::string> nv;
      nv.reserve(f->vars.size());
      for (const std::string& v : f->vars) nv.push_back(env.at(v));
      return f_atom(f->poly, nv, f->rel);
    }
    case K::Not:
      return f_not(freshen(f->kids[0], env, used, counter));
    case K::And:
    case K::Or: {
      std::vector<FormulaPtr> ks;
      ks.reserve(f->kids.size());
      for (const FormulaPtr& k : f->kids) ks.push_back(freshen(k, env, used, counter));
      return f->kind == K::And ? f_and(std::move(ks)) : f_or(std::move(ks));
    }
    case K::Exists:
    case K::ForAll: {
      std::vector<std::string> nb;
      std::vector<std::pair<std::string, std::optional<std::string>>> saved;
      for (const std::string& b : f->bound) {
        std::string fresh;
        do {
          fresh = b + "#" + std::to_string(++counter);
        } while (used.count(fresh));
        used.insert(fresh);
        auto it = env.find(b);
        saved.emplace_back(b, it == env.end() ? std::nullopt : std::optional<std::string>(it->second));
        env[b] = fresh;
        nb.push_back(fresh);
      }
      FormulaPtr body = freshen(f->kids[0], env, used, counter);
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
        if (it->second)
          env[it->first] = *it->second;
        else
          env.erase(it->first);
      }
      return f->kind == K::Exists ? f_exists(std::move(nb), body) : f_forall(std::move(nb), body);
    }
  }
  throw std::logic_error("freshen: unhandled kind");
}

// Levels follow quantifier depth, so binders in disjoint sibling scopes
// share a level. Any single atom only sees variables from one nesting
// chain, which keeps every embedded polynomial ordered by level.
void assign_levels(const FormulaPtr& f, std::map<std::string, int>& lvl, int depth, int& maxlvl,
                   unsigned& maxdeg) {
  using K = Formula::Kind;
  if (f->kind == K::Atom) {
    maxdeg = std::max(maxdeg, f->poly.degree());
    return;
  }
  if (f->kind == K::Exists || f->kind == K::ForAll) {
    for (const std::string& b : f->bound) lvl[b] = ++depth;
    maxlvl = std::max(maxlvl, depth);
  }
  for (const FormulaPtr& k : f->kids) assign_levels(k, lvl, depth, maxlvl, maxdeg);
}

void embed_atoms(const FormulaPtr& f, const std::map<std::string, int>& lvl, int d,
                 std::map<const Formula*, Poly>& out, std::vector<Poly>& polys) {
  if (f->kind == Formula::Kind::Atom) {
    const int k = static_cast<int>(f->vars.size());
    std::vector<int> perm(d);
    std::vector<char> taken(d, 0);
    for (int i = 0; i < k; ++i) {
      int tgt = lvl.at(f->vars[i]) - 1;
      perm[i] = tgt;
      taken[tgt] = 1;
    }
    int slot = 0;
    for (int i = k; i < d; ++i) {
      while (taken[slot]) ++slot;
      perm[i] = slot;
      taken[slot] = 1;
    }
    Poly e = f->poly.pad_arity(d).permute_vars(perm);
    out.emplace(f.get(), e);
    polys.push_back(std::move(e));
    return;
  }
  for (const FormulaPtr& kid : f->kids) embed_atoms(kid, lvl, d, out, polys);
}

struct PieceCtx {
  int d = 0;
  const std::map<std::string, int>* lvl = nullptr;
  std::map<const Formula*, Poly> atom_poly;
  std::vector<AlgReal> sample;
};

bool eval_any(const FormulaPtr& f, const LNode* node, int depth, PieceCtx& cx);

bool eval_quant(const FormulaPtr& f, std::size_t bi, const LNode* node, int depth, PieceCtx& cx) {
  if (bi == f->bound.size()) return eval_any(f->kids[0], node, depth, cx);
  const int level = cx.lvl->at(f->bound[bi]);
  const std::size_t keep = cx.sample.size();
  while (depth + 1 < level) {  // atoms below never look at the skipped levels
    node = &node->kids.front();
    cx.sample.push_back(node->coord);
    ++depth;
  }
  const bool ex = f->kind == Formula::Kind::Exists;
  bool out = !ex;
  for (const LNode& kid : node->kids) {
    cx.sample.push_back(kid.coord);
    bool r = eval_quant(f, bi + 1, &kid, depth + 1, cx);
    cx.sample.pop_back();
    if (r == ex) {
      out = ex;
      break;
    }
  }
  cx.sample.resize(keep);
  return out;
}

bool eval_any(const FormulaPtr& f, const LNode* node, int depth, PieceCtx& cx) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Not:
      return !eval_any(f->kids[0], node, depth, cx);
    case K::And:
      for (const FormulaPtr& k : f->kids)
        if (!eval_any(k, node, depth, cx)) return false;
      return true;
    case K::Or:
      for (const FormulaPtr& k : f->kids)
        if (eval_any(k, node, depth, cx)) return true;
      return false;
    case K::Atom: {
      std::vector<AlgReal> pt = cx.sample;
      pt.resize(cx.d);
      int s = sign_at(cx.atom_poly.at(f.get()), pt);
      switch (f->rel) {
        case Rel::LT:
          return s < 0;
        case Rel::EQ:
          return s == 0;
        case Rel::GT:
          return s > 0;
      }
      return false;
    }
    case K::Exists:
    case K::ForAll:
      return eval_quant(f, 0, node, depth, cx);
  }
  throw std::logic_error("eval_any: unhandled kind");
}

bool decide_piece(const FormulaPtr& piece) {
  std::map<std::string, int> lvl;
  int d = 0;
  unsigned maxdeg = 0;
  assign_levels(piece, lvl, 0, d, maxdeg);
  if (d == 0) throw std::logic_error("decide: quantified piece without binders");
  if (d > kMaxCadVars) {
    std::vector<std::vector<std::string>> names(d);
    for (const auto& [n, l] : lvl) {
      std::string plain = n.substr(0, n.find('#'));
      auto& at = names[l - 1];
      if (std::find(at.begin(), at.end(), plain) == at.end()) at.push_back(plain);
    }
    std::ostringstream os;
    os << "decide: a quantified component nests " << d << " variables deep (";
    for (int i = 0; i < d; ++i) {
      if (i) os << ", ";
      for (std::size_t j = 0; j < names[i].size(); ++j) os << (j ? "/" : "") << names[i][j];
    }
    os << "); exact decision handles at most " << kMaxCadVars << " (max atom degree " << maxdeg
       << ")";
    throw CapacityError(os.str());
  }
  std::map<const Formula*, Poly> atom_poly;
  std::vector<Poly> polys;
  embed_atoms(piece, lvl, d, atom_poly, polys);
  for (const Poly& p : polys)
    if (p.degree() > kMaxCadDegree)
      throw CapacityError("decide: atom degree " + std::to_string(p.degree()) + " exceeds " +
                          std::to_string(kMaxCadDegree));
  std::vector<std::vector<Poly>> basis = prepare_basis(polys, d);
  Lifter lift(basis, d, nullptr);
  LNode root = lift.run(want_parallel(LiftMode::Auto));
  PieceCtx cx;
  cx.d = d;
  cx.lvl = &lvl;
  cx.atom_poly = std::move(atom_poly);
  return eval_any(piece, &root, 0, cx);
}

bool decide_rec(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Not:
      return !decide_rec(f->kids[0]);
    case K::And:
      for (const FormulaPtr& k : f->kids)
        if (!decide_rec(k)) return false;
      return true;
    case K::Or:
      for (const FormulaPtr& k : f->kids)
        if (decide_rec(k)) return true;
      return false;
    case K::Exists:
    case K::ForAll:
      return decide_piece(f);
    case K::Atom:
      break;
  }
  throw std::logic_error("decide: free atom in a closed sentence");
}

}  // namespace

bool decide(const FormulaPtr& sentence) {
  if (!sentence) throw std::invalid_argument("decide: null formula");
  std::set<std::string> fv = free_vars(sentence);
  if (!fv.empty()) {
    std::string names;
    for (const std::string& v : fv) names += (names.empty() ? "" : ", ") + v;
    throw std::invalid_argument("decide: sentence has free variables (" + names + ")");
  }
  std::set<std::string> used;
  collect_names(sentence, used);
  std::map<std::string, std::string> env;
  int counter = 0;
  return decide_rec(freshen(sentence, env, used, counter));
}

std::vector<char> batch_member(const SaDescription& d, const std::vector<std::vector<Rat>>& pts,
                               LiftMode mode) {
  std::vector<char> out(pts.size(), 0);
  const int cnt = static_cast<int>(pts.size());
#ifdef _OPENMP
  if (want_parallel(mode) && cnt > 1) {
    std::exception_ptr err = nullptr;
    int nt = thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int i = 0; i < cnt; ++i) {
      try {
        out[i] = member(d, pts[i]) ? 1 : 0;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return out;
  }
#else
  (void)mode;
#endif
  for (int i = 0; i < cnt; ++i) out[i] = member(d, pts[i]) ? 1 : 0;
  return out;
}

}  // namespace rcfw
