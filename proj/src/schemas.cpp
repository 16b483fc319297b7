#include "rcfw/schemas.hpp"

#include <algorithm>
#include <stdexcept>

#include "rcfw/errors.hpp"

namespace rcfw {

namespace {

std::string nm(const std::string& pre, int i) { return pre + std::to_string(i + 1); }

std::vector<std::string> coords(const std::string& pre, int k) {
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v.push_back(nm(pre, i));
  return v;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> select(const std::vector<std::string>& x, const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(x[static_cast<std::size_t>(i)]);
  return out;
}

int idx_of(const std::vector<std::string>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) throw std::logic_error("unknown schema variable " + s);
  return static_cast<int>(it - names.begin());
}

Poly pv(const std::vector<std::string>& names, const std::string& s) {
  return Poly::variable(static_cast<int>(names.size()), idx_of(names, s));
}

// sum (A_i - B_i)^2 < R^2, the strict ball/distance condition
FormulaPtr ball_lt(const std::vector<std::string>& A, const std::vector<std::string>& B,
                   const std::string& R) {
  std::vector<std::string> names = cat(A, B);
  names.push_back(R);
  Poly s = Poly::zero(static_cast<int>(names.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    Poly d = pv(names, A[i]) - pv(names, B[i]);
    s = s + d * d;
  }
  Poly r = pv(names, R);
  return f_lt(s - r * r, names);
}

// componentwise equality of two point tuples
FormulaPtr eq_tuples(const std::vector<std::string>& A, const std::vector<std::string>& B) {
  std::vector<FormulaPtr> cs;
  for (std::size_t i = 0; i < A.size(); ++i)
    cs.push_back(f_eq(Poly::variable(2, 0) - Poly::variable(2, 1), {A[i], B[i]}));
  return f_and(std::move(cs));
}

FormulaPtr var_gt0(const std::string& v) { return f_gt(Poly::variable(1, 0), {v}); }
FormulaPtr var_ne0(const std::string& v) { return f_ne(Poly::variable(1, 0), {v}); }
FormulaPtr var_eq(const std::string& a, const std::string& b) {
  return f_eq(Poly::variable(2, 0) - Poly::variable(2, 1), {a, b});
}
FormulaPtr var_ge(const std::string& a, const std::string& b) {
  return f_ge(Poly::variable(2, 0) - Poly::variable(2, 1), {a, b});
}
FormulaPtr var_le(const std::string& a, const std::string& b) {
  return f_le(Poly::variable(2, 0) - Poly::variable(2, 1), {a, b});
}

// a^2 < b^2
FormulaPtr sq_lt(const std::string& a, const std::string& b) {
  Poly va = Poly::variable(2, 0), vb = Poly::variable(2, 1);
  return f_lt(va * va - vb * vb, {a, b});
}

// c = a + b
FormulaPtr sum_eq(const std::string& c, const std::string& a, const std::string& b) {
  std::vector<std::string> names = {c, a, b};
  return f_eq(pv(names, c) - pv(names, a) - pv(names, b), names);
}

// sum (P_i - Q_i - t * L_i)^2 < d^2 t^2, the difference-quotient bound
FormulaPtr quot_lt(const std::vector<std::string>& P, const std::vector<std::string>& Q,
                   const std::vector<std::string>& L, const std::string& t,
                   const std::string& d) {
  std::vector<std::string> names = cat(cat(cat(P, Q), L), {t, d});
  Poly s = Poly::zero(static_cast<int>(names.size()));
  Poly vt = pv(names, t);
  for (std::size_t i = 0; i < P.size(); ++i) {
    Poly e = pv(names, P[i]) - pv(names, Q[i]) - vt * pv(names, L[i]);
    s = s + e * e;
  }
  Poly vd = pv(names, d);
  return f_lt(s - vd * vd * vt * vt, names);
}

void subsets_rec(int n, int m, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (m - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets_rec(n, m, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> m_subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, m, 0, cur, out);
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

std::vector<std::string> assemble(int n, const std::vector<int>& sel,
                                  const std::vector<std::string>& selNames,
                                  const std::vector<int>& com,
                                  const std::vector<std::string>& comNames) {
  std::vector<std::string> amb(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < sel.size(); ++k) amb[static_cast<std::size_t>(sel[k])] = selNames[k];
  for (std::size_t k = 0; k < com.size(); ++k) amb[static_cast<std::size_t>(com[k])] = comNames[k];
  return amb;
}

int binding_ambient(const Binding& b) { return b.symbolic ? b.n : b.desc.ambient; }

void require_ambient(const Binding& b, int n, const char* what) {
  if (binding_ambient(b) != n)
    throw std::invalid_argument(std::string(what) + ": binding ambient dimension " +
                                std::to_string(binding_ambient(b)) + ", expected " +
                                std::to_string(n));
}

// forall d > 0 exists g > 0: inner(d, g). The shared epsilon-delta shell.
FormulaPtr eps_delta(const std::string& d, const std::string& g, FormulaPtr inner) {
  return f_forall({d}, f_implies(var_gt0(d),
                                 f_exists({g}, f_and({var_gt0(g), std::move(inner)}))));
}

// Local-graph condition at the ambient point named x, coordinates sigma
// selected as the graph domain. Open in x and any symbolic coefficients.
FormulaPtr phi_at(const Binding& S, int n, int m, int r, const std::vector<std::string>& x,
                  const std::vector<int>& sigma) {
  if (m == n) {
    // local openness: a whole ball around x lies in S
    auto u = coords("u", n);
    FormulaPtr body =
        f_forall(u, f_implies(ball_lt(u, x, "eps"), bound_membership(S, u)));
    return f_exists({"eps"}, f_and({var_gt0("eps"), body}));
  }
  if (m == 0) {
    // isolation: x is the only point of S in a small ball
    auto v = coords("v", n);
    FormulaPtr body = f_forall(
        v, f_implies(f_and({bound_membership(S, v), ball_lt(v, x, "eta")}), eq_tuples(v, x)));
    return f_exists({"eta"}, f_and({var_gt0("eta"), body}));
  }

  auto tau = complement(n, sigma);
  auto xs = select(x, sigma), xt = select(x, tau);
  auto u = coords("u", m), v = coords("v", n - m);
  auto up = coords("up", m), vp = coords("vp", n - m);
  auto mem = [&](const std::vector<std::string>& U, const std::vector<std::string>& V) {
    return bound_membership(S, assemble(n, sigma, U, tau, V));
  };
  auto bu = [&](const std::vector<std::string>& U) { return ball_lt(U, xs, "eps"); };
  auto bv = [&](const std::vector<std::string>& V) { return ball_lt(V, xt, "eta"); };

  // every base point of the ball carries a graph point
  FormulaPtr tot =
      f_forall(u, f_implies(bu(u), f_exists(v, f_and({bv(v), mem(u, v)}))));
  // and only one
  FormulaPtr uni = f_forall(
      cat(cat(u, v), vp),
      f_implies(f_and({bu(u), bv(v), bv(vp), mem(u, v), mem(u, vp)}), eq_tuples(v, vp)));
  // pointwise continuity of the implicit graph map
  FormulaPtr cont_inner = f_forall(
      cat(up, vp), f_implies(f_and({bu(up), bv(vp), mem(up, vp), ball_lt(up, u, "gam")}),
                             ball_lt(vp, v, "del")));
  FormulaPtr cont = f_forall(
      cat(u, v),
      f_implies(f_and({bu(u), bv(v), mem(u, v)}), eps_delta("del", "gam", cont_inner)));

  std::vector<FormulaPtr> cls = {var_gt0("eps"), var_gt0("eta"), tot, uni, cont};

  if (r == 1) {
    // difference quotients along each selected direction
    auto L = coords("L", n - m);
    std::vector<FormulaPtr> dirs;
    for (int k = 0; k < m; ++k) {
      auto uk = u;
      uk[static_cast<std::size_t>(k)] = "w";
      FormulaPtr quot_inner = f_forall(
          cat({"t", "w"}, vp),
          f_implies(f_and({var_ne0("t"), sq_lt("t", "gam"), sum_eq("w", u[static_cast<std::size_t>(k)], "t"),
                           bu(uk), bv(vp), mem(uk, vp)}),
                    quot_lt(vp, v, L, "t", "del")));
      dirs.push_back(f_exists(L, eps_delta("del", "gam", quot_inner)));
    }
    cls.push_back(f_forall(
        cat(u, v), f_implies(f_and({bu(u), bv(v), mem(u, v)}), f_and(std::move(dirs)))));
  }
  return f_exists({"eps", "eta"}, f_and(std::move(cls)));
}

// Boundary-point condition: T is locally the graph of a map over the
// selected m-1 coordinates, and S is locally the graph of a map over the
// half of the collar slab on one side of T's first component.
FormulaPtr psi_at(const Binding& S, const Binding& T, int n, int m, int r,
                  const std::vector<std::string>& x, const std::vector<int>& M, int j) {
  std::vector<int> ys;
  for (int i : M)
    if (i != j) ys.push_back(i);
  auto tau = complement(n, M);
  auto xs = select(x, ys), xt = select(x, tau);
  const std::string& xj = x[static_cast<std::size_t>(j)];
  int my = m - 1, nz = n - m;

  auto u = coords("u", my), v = coords("v", nz);
  auto up = coords("up", my), vp = coords("vp", nz);
  auto memT = [&](const std::vector<std::string>& U, const std::string& W,
                  const std::vector<std::string>& V) {
    std::vector<int> selIdx = ys;
    selIdx.push_back(j);
    std::vector<std::string> selNames = U;
    selNames.push_back(W);
    return bound_membership(T, assemble(n, selIdx, selNames, tau, V));
  };
  auto memS = [&](const std::vector<std::string>& U, const std::string& W,
                  const std::vector<std::string>& V) {
    std::vector<int> selIdx = ys;
    selIdx.push_back(j);
    std::vector<std::string> selNames = U;
    selNames.push_back(W);
    return bound_membership(S, assemble(n, selIdx, selNames, tau, V));
  };
  auto by = [&](const std::vector<std::string>& U) { return ball_lt(U, xs, "eps"); };
  auto slab = [&](const std::string& W) { return ball_lt({W}, {xj}, "del"); };
  auto bz = [&](const std::vector<std::string>& V) { return ball_lt(V, xt, "eta"); };
  // the full box condition around x for an assembled point
  auto box = [&](const std::vector<std::string>& U, const std::string& W,
                 const std::vector<std::string>& V) {
    std::vector<FormulaPtr> cs;
    if (my > 0) cs.push_back(by(U));
    cs.push_back(slab(W));
    if (nz > 0) cs.push_back(bz(V));
    return f_and(std::move(cs));
  };

  std::vector<FormulaPtr> cls;
  cls.push_back(var_gt0("del"));
  if (my > 0) cls.push_back(var_gt0("eps"));
  if (nz > 0) cls.push_back(var_gt0("eta"));

  // clause 1: T cap box is the graph of a map over the eps-ball
  if (my == 0) {
    // the graph over a point is the single point x itself
    FormulaPtr only = f_forall(
        cat({"w"}, v),
        f_implies(f_and({memT({}, "w", v), box({}, "w", v)}),
                  f_and({var_eq("w", xj), eq_tuples(v, xt)})));
    cls.push_back(only);
  } else {
    FormulaPtr tot1 = f_forall(
        u, f_implies(by(u), f_exists(cat({"w"}, v),
                                     f_and({box(u, "w", v), memT(u, "w", v)}))));
    FormulaPtr uni1 = f_forall(
        cat(cat(cat(u, {"w"}), v), cat({"wp"}, vp)),
        f_implies(f_and({by(u), box(u, "w", v), memT(u, "w", v), box(u, "wp", vp),
                         memT(u, "wp", vp)}),
                  f_and({var_eq("w", "wp"), eq_tuples(v, vp)})));
    // continuity of the graph map (w, v) of u
    FormulaPtr cont1_inner = f_forall(
        cat(cat(up, {"wp"}), vp),
        f_implies(f_and({by(up), box(up, "wp", vp), memT(up, "wp", vp),
                         ball_lt(up, u, "gam")}),
                  ball_lt(cat({"wp"}, vp), cat({"w"}, v), "del2")));
    FormulaPtr cont1 = f_forall(
        cat(cat(u, {"w"}), v),
        f_implies(f_and({by(u), box(u, "w", v), memT(u, "w", v)}),
                  eps_delta("del2", "gam", cont1_inner)));
    cls.push_back(tot1);
    cls.push_back(uni1);
    cls.push_back(cont1);
    if (r == 1) {
      auto Lg = coords("L", nz + 1);  // output is (w, v)
      std::vector<FormulaPtr> dirs;
      for (int k = 0; k < my; ++k) {
        auto uk = u;
        uk[static_cast<std::size_t>(k)] = "a";
        FormulaPtr quot_inner = f_forall(
            cat(cat({"t", "a", "wp"}, vp), {}),
            f_implies(f_and({var_ne0("t"), sq_lt("t", "gam"),
                             sum_eq("a", u[static_cast<std::size_t>(k)], "t"), by(uk),
                             box(uk, "wp", vp), memT(uk, "wp", vp)}),
                      quot_lt(cat({"wp"}, vp), cat({"w"}, v), Lg, "t", "del2")));
        dirs.push_back(f_exists(Lg, eps_delta("del2", "gam", quot_inner)));
      }
      cls.push_back(f_forall(
          cat(cat(u, {"w"}), v),
          f_implies(f_and({by(u), box(u, "w", v), memT(u, "w", v)}), f_and(std::move(dirs)))));
    }
  }

  // uniqueness of the S graph over (u, w), branch independent
  FormulaPtr uni2 = f_forall(
      cat(cat(cat(u, {"w"}), v), vp),
      f_implies(f_and({box(u, "w", v), bz(vp), memS(u, "w", v), memS(u, "w", vp)}),
                eq_tuples(v, vp)));
  if (nz > 0) cls.push_back(uni2);

  // continuity of the S graph map, branch independent
  if (nz > 0) {
    FormulaPtr cont2_inner = f_forall(
        cat(cat(up, {"wp"}), vp),
        f_implies(f_and({box(up, "wp", vp), memS(up, "wp", vp),
                         ball_lt(cat(up, {"wp"}), cat(u, {"w"}), "gam")}),
                  ball_lt(vp, v, "del2")));
    cls.push_back(f_forall(
        cat(cat(u, {"w"}), v),
        f_implies(f_and({box(u, "w", v), memS(u, "w", v)}),
                  eps_delta("del2", "gam", cont2_inner))));
  }

  // the side condition w >= (resp <=) the first component of T's graph map
  auto over = [&](const std::vector<std::string>& U, const std::string& W, bool plus) {
    if (my == 0 && m == 1) {
      // the T point in the box is x itself, so compare against x_j directly
      return plus ? var_ge(W, xj) : var_le(W, xj);
    }
    auto vt = coords("vt", nz);
    FormulaPtr cmp = plus ? var_ge(W, "wt") : var_le(W, "wt");
    return f_forall(cat({"wt"}, vt),
                    f_implies(f_and({box(U, "wt", vt), memT(U, "wt", vt)}), cmp));
  };

  // branch: S cap box is exactly the graph over the chosen half
  std::vector<FormulaPtr> branches;
  for (bool plus : {true, false}) {
    FormulaPtr dom_tot = f_forall(
        cat(u, {"w"}),
        f_implies(f_and({my > 0 ? by(u) : f_true(), slab("w"), over(u, "w", plus)}),
                  nz > 0 ? f_exists(v, f_and({bz(v), memS(u, "w", v)}))
                         : memS(u, "w", {})));
    FormulaPtr dom_exact = f_forall(
        cat(cat(u, {"w"}), v),
        f_implies(f_and({box(u, "w", v), memS(u, "w", v)}), over(u, "w", plus)));
    std::vector<FormulaPtr> br = {dom_tot, dom_exact};
    if (r == 1) {
      // collar-normal difference quotient, taken into the chosen half
      auto Ln = coords("L", std::max(nz, 1));
      if (nz > 0) {
        FormulaPtr quot_inner = f_forall(
            cat({"t", "wp"}, vp),
            f_implies(f_and({var_ne0("t"), sq_lt("t", "gam"), sum_eq("wp", "w", "t"),
                             slab("wp"), over(u, "wp", plus), bz(vp), memS(u, "wp", vp)}),
                      quot_lt(vp, v, Ln, "t", "del2")));
        br.push_back(f_forall(
            cat(cat(u, {"w"}), v),
            f_implies(f_and({box(u, "w", v), memS(u, "w", v), over(u, "w", plus)}),
                      f_exists(Ln, eps_delta("del2", "gam", quot_inner)))));
      }
    }
    branches.push_back(f_and(std::move(br)));
  }
  cls.push_back(f_or(std::move(branches)));

  std::vector<std::string> radii = {"del"};
  if (my > 0) radii.insert(radii.begin(), "eps");
  if (nz > 0) radii.push_back("eta");
  return f_exists(radii, f_and(std::move(cls)));
}

int effective_r(const PredicateInstance& inst) {
  int r = inst.nash ? inst.nash_l : inst.r;
  if (r < 0 || r > 1)
    throw UnsupportedError("smoothness class beyond first derivatives (r = " +
                           std::to_string(r) + ")");
  return r;
}

void validate_instance(const PredicateInstance& inst, SchemaId want) {
  if (inst.schema != want) throw std::invalid_argument("wrong schema id for this compiler");
  if (inst.n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (inst.n > kMaxSchemaN)
    throw CapacityError("schema ambient dimension > " + std::to_string(kMaxSchemaN));
  if (inst.m < 0 || inst.m > inst.n)
    throw std::invalid_argument("dimension m outside [0, n]");
  require_ambient(inst.set, inst.n, "schema set");
}

}  // namespace

Binding bind_set(SaDescription d) {
  Binding b;
  b.symbolic = false;
  b.desc = std::move(d);
  return b;
}

Binding bind_symbol(std::string prefix, int n, unsigned p, unsigned q, Int selector) {
  if (prefix.empty()) throw std::invalid_argument("empty symbolic prefix");
  if (n < 1) throw std::invalid_argument("symbolic ambient dimension must be positive");
  if (p < 1 || p > kMaxParamP)
    throw CapacityError("symbolic block count outside [1, " + std::to_string(kMaxParamP) + "]");
  Binding b;
  b.symbolic = true;
  b.prefix = std::move(prefix);
  b.n = n;
  b.p = p;
  b.q = q;
  b.selector = std::move(selector);
  return b;
}

FormulaPtr bound_membership(const Binding& b, const std::vector<std::string>& vars) {
  if (!b.symbolic) {
    if (static_cast<int>(vars.size()) != b.desc.ambient)
      throw std::invalid_argument("membership: variable count != ambient dimension");
    return membership(b.desc, vars);
  }
  if (static_cast<int>(vars.size()) != b.n)
    throw std::invalid_argument("membership: variable count != ambient dimension");
  Int nm_count = monomial_count(b.n, b.q);
  if (!nm_count.fits_slong_p()) throw CapacityError("symbolic block too large");
  long N = nm_count.get_si();
  auto ms = monomials_upto(b.n, b.q);
  auto tuples = selector_sign_tuples(b.p, b.selector);

  // block polynomial P_i(c, x) = sum_j c_{i,j} * mono_j(x)
  auto block_poly = [&](unsigned i, std::vector<std::string>& names_out) {
    std::vector<std::string> names;
    for (long j = 0; j < N; ++j)
      names.push_back(b.prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
    names.insert(names.end(), vars.begin(), vars.end());
    int ar = static_cast<int>(N) + b.n;
    Poly P(ar);
    for (long j = 0; j < N; ++j) {
      Poly::Expo e(static_cast<std::size_t>(ar), 0);
      e[static_cast<std::size_t>(j)] = 1;
      for (int k = 0; k < b.n; ++k)
        e[static_cast<std::size_t>(N + k)] = ms[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      P.set_term(e, Rat(1));
    }
    names_out = std::move(names);
    return P;
  };

  std::vector<FormulaPtr> ors;
  for (const auto& sigma : tuples) {
    std::vector<FormulaPtr> ands;
    for (unsigned i = 0; i < b.p; ++i) {
      std::vector<std::string> names;
      Poly P = block_poly(i, names);
      ands.push_back(f_atom(P, names, sign_to_rel(sigma[i])));
    }
    ors.push_back(f_and(std::move(ands)));
  }
  return f_or(std::move(ors));
}

FormulaPtr compile_submanifold(const PredicateInstance& inst) {
  validate_instance(inst, SchemaId::Submanifold);
  int r = effective_r(inst);
  auto x = coords("x", inst.n);
  std::vector<FormulaPtr> phis;
  if (inst.m == inst.n || inst.m == 0) {
    phis.push_back(phi_at(inst.set, inst.n, inst.m, r, x, {}));
  } else {
    for (const auto& sigma : m_subsets(inst.n, inst.m))
      phis.push_back(phi_at(inst.set, inst.n, inst.m, r, x, sigma));
  }
  return f_forall(x, f_implies(bound_membership(inst.set, x), f_or(std::move(phis))));
}

FormulaPtr compile_boundary(const PredicateInstance& inst, const Binding& T) {
  validate_instance(inst, SchemaId::Boundary);
  int r = effective_r(inst);
  if (inst.m < 1) throw UnsupportedError("boundary schema needs m >= 1");
  require_ambient(T, inst.n, "boundary set");
  auto x = coords("x", inst.n);

  // interior points of S are local m-graph points
  std::vector<FormulaPtr> phis;
  if (inst.m == inst.n) {
    phis.push_back(phi_at(inst.set, inst.n, inst.m, r, x, {}));
  } else {
    for (const auto& sigma : m_subsets(inst.n, inst.m))
      phis.push_back(phi_at(inst.set, inst.n, inst.m, r, x, sigma));
  }
  FormulaPtr interior = f_forall(
      x, f_implies(f_and({bound_membership(inst.set, x), f_not(bound_membership(T, x))}),
                   f_or(std::move(phis))));

  // boundary points see the half-graph picture
  std::vector<FormulaPtr> psis;
  for (const auto& M : m_subsets(inst.n, inst.m))
    for (int j : M) psis.push_back(psi_at(inst.set, T, inst.n, inst.m, r, x, M, j));
  FormulaPtr boundary =
      f_forall(x, f_implies(bound_membership(T, x), f_or(std::move(psis))));

  return f_and({interior, boundary});
}

std::vector<FormulaPtr> homeo_clauses(const Binding& X, const Binding& Y, const Binding& G,
                                      int n) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (n > kMaxSchemaN)
    throw CapacityError("schema ambient dimension > " + std::to_string(kMaxSchemaN));
  require_ambient(X, n, "domain set");
  require_ambient(Y, n, "target set");
  require_ambient(G, 2 * n, "graph set");

  auto x = coords("x", n), y = coords("y", n), xp = coords("xp", n), yp = coords("yp", n);
  auto mX = [&](const std::vector<std::string>& A) { return bound_membership(X, A); };
  auto mY = [&](const std::vector<std::string>& A) { return bound_membership(Y, A); };
  auto mG = [&](const std::vector<std::string>& A, const std::vector<std::string>& B) {
    return bound_membership(G, cat(A, B));
  };

  std::vector<FormulaPtr> cls;
  // graph inside X x Y
  cls.push_back(f_forall(cat(x, y), f_implies(mG(x, y), f_and({mX(x), mY(y)}))));
  // totality
  cls.push_back(f_forall(x, f_implies(mX(x), f_exists(y, mG(x, y)))));
  // functionality
  cls.push_back(f_forall(cat(cat(x, y), yp),
                         f_implies(f_and({mG(x, y), mG(x, yp)}), eq_tuples(y, yp))));
  // injectivity
  cls.push_back(f_forall(cat(cat(x, xp), y),
                         f_implies(f_and({mG(x, y), mG(xp, y)}), eq_tuples(x, xp))));
  // surjectivity onto Y
  cls.push_back(f_forall(y, f_implies(mY(y), f_exists(x, mG(x, y)))));
  // continuity of the map and of its inverse
  auto cont = [&](bool forward) {
    FormulaPtr inner = f_forall(
        cat(xp, yp),
        f_implies(f_and({mG(xp, yp), forward ? ball_lt(x, xp, "gam") : ball_lt(y, yp, "gam")}),
                  forward ? ball_lt(y, yp, "del") : ball_lt(x, xp, "del")));
    return f_forall(cat(x, y), f_implies(mG(x, y), eps_delta("del", "gam", inner)));
  };
  cls.push_back(cont(true));
  cls.push_back(cont(false));
  return cls;
}

FormulaPtr compile_homeomorphism(const Binding& X, const Binding& Y, const Binding& G,
                                 int n) {
  return f_and(homeo_clauses(X, Y, G, n));
}

FormulaPtr compile_homeomorphism(const std::string& aName, const std::string& bName,
                                 const std::string& cName, int n) {
  return compile_homeomorphism(bind_symbol(aName, n, 1, 2, Int(2)),
                               bind_symbol(bName, n, 1, 2, Int(2)),
                               bind_symbol(cName, 2 * n, 1, 2, Int(2)), n);
}

std::vector<FormulaPtr> collapse_clauses(const Binding& X, const Binding& Y, const Binding& G,
                                         int n) {
  if (n < 1) throw std::invalid_argument("cube dimension must be positive");
  if (n > kMaxSchemaN)
    throw CapacityError("schema cube dimension > " + std::to_string(kMaxSchemaN));
  require_ambient(X, n, "collapsing set");
  require_ambient(Y, n, "target set");
  require_ambient(G, 2 * n, "graph set");

  auto t = coords("t", n), tp = coords("tp", n), x = coords("x", n), xp = coords("xp", n);
  auto mX = [&](const std::vector<std::string>& A) { return bound_membership(X, A); };
  auto mY = [&](const std::vector<std::string>& A) { return bound_membership(Y, A); };
  auto mG = [&](const std::vector<std::string>& A, const std::vector<std::string>& B) {
    return bound_membership(G, cat(A, B));
  };
  auto cube = [&](const std::vector<std::string>& T) {
    std::vector<FormulaPtr> cs;
    for (const auto& c : T) {
      cs.push_back(f_ge(Poly::variable(1, 0), {c}));
      cs.push_back(f_le(Poly::variable(1, 0) - Poly::constant(1, Rat(1)), {c}));
    }
    return f_and(std::move(cs));
  };
  auto pos = [&](const std::vector<std::string>& T) { return var_gt0(T[0]); };
  auto zero = [&](const std::vector<std::string>& T) {
    return f_eq(Poly::variable(1, 0), {T[0]});
  };

  std::vector<FormulaPtr> cls;
  // graph confined to cube x X
  cls.push_back(f_forall(cat(t, x), f_implies(mG(t, x), f_and({cube(t), mX(x)}))));
  // totality on the cube
  cls.push_back(f_forall(t, f_implies(cube(t), f_exists(x, mG(t, x)))));
  // functionality
  cls.push_back(f_forall(cat(cat(t, x), xp),
                         f_implies(f_and({mG(t, x), mG(t, xp)}), eq_tuples(x, xp))));
  // continuity of the map
  FormulaPtr cont_inner = f_forall(
      cat(tp, xp),
      f_implies(f_and({mG(tp, xp), ball_lt(t, tp, "gam")}), ball_lt(x, xp, "del")));
  cls.push_back(
      f_forall(cat(t, x), f_implies(mG(t, x), eps_delta("del", "gam", cont_inner))));
  // injectivity on the t1 > 0 part
  cls.push_back(f_forall(
      cat(cat(t, tp), x),
      f_implies(f_and({pos(t), pos(tp), mG(t, x), mG(tp, x)}), eq_tuples(t, tp))));
  // inverse continuity on the t1 > 0 part
  FormulaPtr inv_inner = f_forall(
      cat(tp, xp),
      f_implies(f_and({mG(tp, xp), pos(tp), ball_lt(x, xp, "gam")}), ball_lt(t, tp, "del")));
  cls.push_back(f_forall(
      cat(t, x), f_implies(f_and({mG(t, x), pos(t)}), eps_delta("del", "gam", inv_inner))));
  // the t1 = 0 face lands in Y
  cls.push_back(f_forall(cat(t, x), f_implies(f_and({mG(t, x), zero(t)}), mY(x))));
  // the t1 > 0 part misses Y
  cls.push_back(
      f_forall(cat(t, x), f_implies(f_and({mG(t, x), pos(t)}), f_not(mY(x)))));
  // X = Y union image
  cls.push_back(f_forall(
      x, f_and({f_implies(mX(x), f_or({mY(x), f_exists(t, mG(t, x))})),
                f_implies(mY(x), mX(x))})));
  return cls;
}

FormulaPtr compile_collapse(const Binding& X, const Binding& Y, const Binding& G, int n) {
  return f_and(collapse_clauses(X, Y, G, n));
}

FormulaPtr compile_collapse(const std::string& XName, const std::string& YName,
                            const std::string& cName, int n) {
  return compile_collapse(bind_symbol(XName, n, 1, 2, Int(2)),
                          bind_symbol(YName, n, 1, 2, Int(2)),
                          bind_symbol(cName, 2 * n, 1, 2, Int(2)), n);
}

}  // namespace rcfw
