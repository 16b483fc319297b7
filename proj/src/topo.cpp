#include "rcfw/topo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rcfw/cad.hpp"
#include "rcfw/errors.hpp"
#include "rcfw/formula.hpp"
#include "rcfw/schemas.hpp"

namespace rcfw {
namespace {

std::string point_str(const std::vector<AlgReal>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
  return s + ")";
}

SaDescription union_desc(const SaDescription& a, const SaDescription& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("union: ambient dimension mismatch");
  SaDescription u = a;
  u.conjuncts.insert(u.conjuncts.end(), b.conjuncts.begin(), b.conjuncts.end());
  return u;
}

std::vector<Poly> joint_inputs(std::initializer_list<const SaDescription*> ds) {
  std::vector<Poly> out;
  for (const SaDescription* d : ds)
    for (const Poly& p : distinct_polys(*d))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

// Shared core of the curve classification. Half-branch counting: a 0-cell
// gains one branch for every selected 1-cell whose closure reaches it.
// With strict_ends the 0-cells of the closure must belong to the set.
ManifoldVerdict classify_curve(const CadTree& t, const std::vector<int>& sel, bool strict_ends,
                               std::vector<int>* boundary_cells) {
  ManifoldVerdict v;
  std::vector<char> in(t.cells.size(), 0);
  bool has1 = false;
  for (int i : sel) {
    in[i] = 1;
    if (t.cells[i].dim >= 2) {
      v.kind = ManifoldVerdict::Kind::Unsupported;
      v.reason = "the set has two-dimensional content";
      return v;
    }
    if (t.cells[i].dim == 1) has1 = true;
  }
  if (sel.empty() || !has1) {
    v.kind = ManifoldVerdict::Kind::NoBoundary;  // empty or a finite point set
    return v;
  }
  std::vector<int> branches(t.cells.size(), 0);
  for (const auto& [a, b] : frontier_pairs(t))
    if (in[a] && t.cells[a].dim == 1 && t.cells[b].dim == 0) branches[b]++;
  std::vector<int> bcells;
  for (int c = 0; c < static_cast<int>(t.cells.size()); ++c) {
    if (t.cells[c].dim != 0) continue;
    int k = branches[c];
    if (!in[c]) {
      if (k > 0 && strict_ends) {
        v.kind = ManifoldVerdict::Kind::NotManifold;
        v.witness = t.cells[c].sample;
        return v;
      }
      continue;
    }
    if (k == 2) continue;
    if (k == 1) {
      bcells.push_back(c);
      continue;
    }
    // an isolated point mixed into a curve, or three or more branches
    v.kind = ManifoldVerdict::Kind::NotManifold;
    v.witness = t.cells[c].sample;
    return v;
  }
  if (boundary_cells) *boundary_cells = bcells;
  if (bcells.empty()) {
    v.kind = ManifoldVerdict::Kind::NoBoundary;
    return v;
  }
  v.kind = ManifoldVerdict::Kind::WithBoundary;
  for (int c : bcells) v.boundary.push_back(t.cells[c].sample);
  return v;
}

bool closed_via_frontier(const CadTree& t, const std::vector<int>& sel) {
  std::vector<char> in(t.cells.size(), 0);
  for (int i : sel) in[i] = 1;
  for (const auto& [a, b] : frontier_pairs(t))
    if (in[a] && !in[b]) return false;
  return true;
}

std::vector<std::string> ambient_names(int n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(n <= 3 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

bool bounded_by_sentence(const SaDescription& d) {
  std::vector<std::string> vars = ambient_names(d.ambient);
  // exists B, every point of the set has all squared coordinates under B
  std::vector<FormulaPtr> dom;
  Poly cap = Poly::variable(2, 0) - Poly::variable(2, 1) * Poly::variable(2, 1);
  for (const std::string& v : vars) dom.push_back(f_ge(cap, {"B", v}));
  FormulaPtr inside = dom.size() == 1 ? dom[0] : f_and(dom);
  FormulaPtr body = f_or({f_not(membership(d, vars)), inside});
  return decide(f_exists({"B"}, f_forall(vars, body)));
}

}  // namespace

ManifoldVerdict check_curve_manifold(const SaDescription& d) {
  if (d.ambient < 1 || d.ambient > 2) {
    ManifoldVerdict v;
    v.kind = ManifoldVerdict::Kind::Unsupported;
    v.reason = "curve classification covers ambient dimension 1 and 2";
    return v;
  }
  CadTree t = decompose_for(d);
  return classify_curve(t, set_cells(t, d), d.ambient == 2, nullptr);
}

RegularityVerdict regularity_check(const Poly& f, const SaDescription& d) {
  if (f.arity() != 2 || d.ambient != 2)
    throw std::invalid_argument("regularity_check: expects a plane curve");
  std::vector<Poly> joint = distinct_polys(d);
  if (std::find(joint.begin(), joint.end(), f) == joint.end()) joint.push_back(f);
  CadTree t = decompose(joint, 2);
  std::size_t fi = 0;
  while (!(t.inputs[fi] == f)) ++fi;
  for (int i : set_cells(t, d))
    if (t.cells[i].signs[fi] != 0)
      throw std::invalid_argument("regularity_check: the set leaves the zero locus of f");
  SaDescription sing = d;
  for (auto& conj : sing.conjuncts) {
    conj.push_back(SignCond{f.derivative(0), Rel::EQ});
    conj.push_back(SignCond{f.derivative(1), Rel::EQ});
  }
  CadTree ts = decompose_for(sing);
  std::vector<int> bad = set_cells(ts, sing);
  RegularityVerdict out;
  out.pass = bad.empty();
  if (!bad.empty()) out.witness = ts.cells[bad[0]].sample;
  return out;
}

CompactnessVerdict compactness_check(const SaDescription& d) {
  if (d.ambient < 1 || d.ambient > 2)
    throw UnsupportedError("compactness_check: ambient dimension <= 2 only");
  CadTree t = decompose_for(d);
  CompactnessVerdict out;
  out.closed = closed_via_frontier(t, set_cells(t, d));
  out.bounded = bounded_by_sentence(d);
  return out;
}

HomeoVerdict verify_homeo(const SaDescription& X, const SaDescription& Y,
                          const SaDescription& G) {
  const int n = X.ambient;
  if (Y.ambient != n || G.ambient != 2 * n)
    throw std::invalid_argument("verify_homeo: G must live in twice the ambient of X and Y");
  HomeoVerdict out;
  if (n >= 2) {
    // falsification only: exact decisions would need more than three
    // quantified variables per clause. A rational lattice sweep can catch
    // full-dimensional violations and value collisions; it cannot certify.
    std::vector<Rat> ticks;
    const int half = n == 2 ? 4 : 2;
    for (int i = -half; i <= half; ++i) {
      Rat r(i, 2);
      r.canonicalize();
      ticks.push_back(r);
    }
    std::map<std::vector<Rat>, std::vector<Rat>> fwd, bwd;
    std::vector<std::size_t> odo(2 * n, 0);
    for (bool more = true; more;) {
      std::vector<Rat> q;
      for (int i = 0; i < 2 * n; ++i) q.push_back(ticks[odo[i]]);
      more = false;
      for (int i = 0; i < 2 * n; ++i) {
        if (++odo[i] < ticks.size()) {
          more = true;
          break;
        }
        odo[i] = 0;
      }
      if (!member(G, q)) continue;
      std::vector<Rat> qx(q.begin(), q.begin() + n), qy(q.begin() + n, q.end());
      if (!member(X, qx) || !member(Y, qy)) {
        out.kind = HomeoVerdict::Kind::Reject;
        out.reason = "a sampled graph point leaves X x Y";
        return out;
      }
      auto [fit, fnew] = fwd.emplace(qx, qy);
      if (!fnew && fit->second != qy) {
        out.kind = HomeoVerdict::Kind::Reject;
        out.reason = "sampled graph points show the relation is not single-valued";
        return out;
      }
      auto [bit, bnew] = bwd.emplace(qy, qx);
      if (!bnew && bit->second != qx) {
        out.kind = HomeoVerdict::Kind::Reject;
        out.reason = "sampled graph points show the relation is not injective";
        return out;
      }
    }
    out.kind = HomeoVerdict::Kind::Unsupported;
    out.reason = "exact verification covers ambient dimension 1; lattice sampling found no violation";
    return out;
  }
  CompactnessVerdict cx = compactness_check(X);
  if (!cx.closed || !cx.bounded) {
    out.reason = "X is not compact";
    return out;
  }
  CompactnessVerdict cy = compactness_check(Y);
  if (!cy.closed || !cy.bounded) {
    out.reason = "Y is not compact";
    return out;
  }
  static const char* kClauseFail[] = {
      "the graph leaves X x Y",
      "the graph is not total over X",
      "the graph is not single-valued",
      "the graph is not injective",
      "the image does not cover Y",
  };
  std::vector<FormulaPtr> clauses =
      homeo_clauses(bind_set(X), bind_set(Y), bind_set(G), 1);
  for (int i = 0; i < 5; ++i)
    if (!decide(clauses[i])) {
      out.reason = kClauseFail[i];
      return out;
    }
  // closed graph of a bijection between compact sets: continuity for free
  CadTree tg = decompose_for(G);
  if (!closed_via_frontier(tg, set_cells(tg, G))) {
    out.reason = "the graph is not closed";
    return out;
  }
  out.kind = HomeoVerdict::Kind::Accept;
  return out;
}

CobordismVerdict check_cobordism(const SaDescription& M, const SaDescription& M0,
                                 const SaDescription& M1) {
  if (M.ambient != 2 || M0.ambient != 2 || M1.ambient != 2)
    throw std::invalid_argument("check_cobordism: plane descriptions expected");
  CobordismVerdict out;
  CompactnessVerdict c = compactness_check(M);
  if (!c.closed || !c.bounded) {
    out.reason = "M is not compact";
    return out;
  }
  CadTree t = decompose(joint_inputs({&M, &M0, &M1}), 2);
  std::vector<int> selM = set_cells(t, M);
  int dim = -1;
  for (int i : selM) dim = std::max(dim, t.cells[i].dim);
  if (dim != 1) {
    out.reason = "M is not a curve";
    return out;
  }
  std::vector<int> bcells;
  ManifoldVerdict v = classify_curve(t, selM, true, &bcells);
  if (v.kind == ManifoldVerdict::Kind::NotManifold) {
    out.reason = "M is not a manifold: witness at " + point_str(v.witness);
    return out;
  }
  if (v.kind == ManifoldVerdict::Kind::Unsupported) {
    out.reason = v.reason;
    return out;
  }
  if (bcells != set_cells(t, union_desc(M0, M1))) {
    out.reason = "the boundary of M is not M0 union M1";
    return out;
  }
  std::vector<int> s0 = set_cells(t, M0), s1 = set_cells(t, M1);
  std::set<int> seen(s0.begin(), s0.end());
  for (int i : s1)
    if (seen.count(i)) {
      out.reason = "M0 and M1 intersect";
      return out;
    }
  out.accept = true;
  return out;
}

}  // namespace rcfw
