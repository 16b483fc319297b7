#include "rcfw/formula.hpp"

#include <algorithm>
#include <sstream>

#include "rcfw/errors.hpp"
#include "rcfw/polyparse.hpp"

namespace rcfw {

namespace {

FormulaPtr mk(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

const FormulaPtr kTrue = mk({Formula::Kind::True});
const FormulaPtr kFalse = mk({Formula::Kind::False});

}  // namespace

FormulaPtr f_true() { return kTrue; }
FormulaPtr f_false() { return kFalse; }

FormulaPtr f_atom(Poly p, std::vector<std::string> vars, Rel rel) {
  if (static_cast<std::size_t>(p.arity()) != vars.size())
    throw std::invalid_argument("f_atom: vars/arity mismatch");
  // compress unused variables away so serialization round trips
  std::vector<int> perm(vars.size(), -1);
  std::vector<std::string> used;
  int next = 0;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (p.uses_var(static_cast<int>(i))) {
      perm[i] = next++;
      used.push_back(vars[i]);
    }
  if (used.empty()) {
    // constant atom folds to a truth value
    int s = p.is_zero() ? 0 : rat_sign(p.constant_value());
    return s == rel_to_sign(rel) ? kTrue : kFalse;
  }
  if (used.size() != vars.size()) {
    for (auto& pi : perm)
      if (pi == -1) pi = next++;  // park unused vars at the top, then drop
    p = p.permute_vars(perm).drop_unused_above(static_cast<int>(used.size()));
  }
  // canonical order: sort variables by name so structurally equal atoms
  // compare equal no matter how callers numbered their variables
  std::vector<int> order(used.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return used[a] < used[b]; });
  std::vector<int> sperm(used.size());
  std::vector<std::string> sorted(used.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    sperm[order[pos]] = static_cast<int>(pos);
    sorted[pos] = used[order[pos]];
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("f_atom: duplicate variable name " + sorted[i]);
  p = p.permute_vars(sperm);
  used = std::move(sorted);
  Formula f{Formula::Kind::Atom};
  f.poly = std::move(p);
  f.rel = rel;
  f.vars = std::move(used);
  return mk(std::move(f));
}

FormulaPtr f_lt(const Poly& p, const std::vector<std::string>& v) { return f_atom(p, v, Rel::LT); }
FormulaPtr f_eq(const Poly& p, const std::vector<std::string>& v) { return f_atom(p, v, Rel::EQ); }
FormulaPtr f_gt(const Poly& p, const std::vector<std::string>& v) { return f_atom(p, v, Rel::GT); }
FormulaPtr f_le(const Poly& p, const std::vector<std::string>& v) {
  return f_or({f_atom(p, v, Rel::LT), f_atom(p, v, Rel::EQ)});
}
FormulaPtr f_ge(const Poly& p, const std::vector<std::string>& v) {
  return f_or({f_atom(p, v, Rel::GT), f_atom(p, v, Rel::EQ)});
}
FormulaPtr f_ne(const Poly& p, const std::vector<std::string>& v) {
  return f_or({f_atom(p, v, Rel::LT), f_atom(p, v, Rel::GT)});
}

FormulaPtr f_and(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return kTrue;
  if (kids.size() == 1) return kids[0];
  Formula f{Formula::Kind::And};
  f.kids = std::move(kids);
  return mk(std::move(f));
}

FormulaPtr f_or(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return kFalse;
  if (kids.size() == 1) return kids[0];
  Formula f{Formula::Kind::Or};
  f.kids = std::move(kids);
  return mk(std::move(f));
}

FormulaPtr f_not(FormulaPtr c) {
  Formula f{Formula::Kind::Not};
  f.kids = {std::move(c)};
  return mk(std::move(f));
}

FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return f_or({f_not(std::move(a)), std::move(b)}); }

namespace {
FormulaPtr quant(Formula::Kind k, std::vector<std::string> names, FormulaPtr body) {
  if (names.empty()) throw std::invalid_argument("quantifier needs at least one variable");
  Formula f{k};
  f.bound = std::move(names);
  f.kids = {std::move(body)};
  return mk(std::move(f));
}
}  // namespace

FormulaPtr f_exists(std::vector<std::string> names, FormulaPtr body) {
  return quant(Formula::Kind::Exists, std::move(names), std::move(body));
}
FormulaPtr f_forall(std::vector<std::string> names, FormulaPtr body) {
  return quant(Formula::Kind::ForAll, std::move(names), std::move(body));
}

FormulaPtr membership(const SaDescription& d, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != d.ambient)
    throw std::invalid_argument("membership: vars/ambient mismatch");
  std::vector<FormulaPtr> disj;
  for (const auto& conj : d.conjuncts) {
    std::vector<FormulaPtr> lits;
    for (const auto& a : conj) lits.push_back(f_atom(a.poly, vars, a.rel));
    disj.push_back(f_and(std::move(lits)));
  }
  return f_or(std::move(disj));
}

bool f_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a->rel == b->rel && a->vars == b->vars && a->poly == b->poly;
    default:
      if (a->bound != b->bound || a->kids.size() != b->kids.size()) return false;
      for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!f_equal(a->kids[i], b->kids[i])) return false;
      return true;
  }
}

bool same_shape(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == Formula::Kind::Atom) return true;
  if (a->bound != b->bound || a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!same_shape(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {
void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      for (const auto& v : f->vars)
        if (!bound.count(v)) out.insert(v);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::ForAll: {
      std::vector<std::string> added;
      for (const auto& v : f->bound)
        if (bound.insert(v).second) added.push_back(v);
      free_vars_rec(f->kids[0], bound, out);
      for (const auto& v : added) bound.erase(v);
      break;
    }
    default:
      for (const auto& k : f->kids) free_vars_rec(k, bound, out);
  }
}
}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

bool is_quantifier_free(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Exists || f->kind == Formula::Kind::ForAll) return false;
  for (const auto& k : f->kids)
    if (!is_quantifier_free(k)) return false;
  return true;
}

namespace {

// rename free occurrences of `from` to `to` in f
FormulaPtr rename_free(const FormulaPtr& f, const std::string& from, const std::string& to) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom: {
      if (std::find(f->vars.begin(), f->vars.end(), from) == f->vars.end()) return f;
      Formula g = *f;
      for (auto& v : g.vars)
        if (v == from) v = to;
      return mk(std::move(g));
    }
    case Formula::Kind::Exists:
    case Formula::Kind::ForAll: {
      if (std::find(f->bound.begin(), f->bound.end(), from) != f->bound.end()) return f;
      FormulaPtr body = rename_free(f->kids[0], from, to);
      if (body == f->kids[0]) return f;
      Formula g = *f;
      g.kids = {body};
      return mk(std::move(g));
    }
    default: {
      std::vector<FormulaPtr> kids;
      bool changed = false;
      for (const auto& k : f->kids) {
        kids.push_back(rename_free(k, from, to));
        changed = changed || kids.back() != k;
      }
      if (!changed) return f;
      Formula g = *f;
      g.kids = std::move(kids);
      return mk(std::move(g));
    }
  }
}

FormulaPtr normalize_rec(const FormulaPtr& f, std::set<std::string>& taken) {
  switch (f->kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::ForAll: {
      std::vector<std::string> names = f->bound;
      FormulaPtr body = f->kids[0];
      for (auto& name : names) {
        if (taken.count(name)) {
          int i = 2;
          std::string fresh;
          do {
            fresh = name + "_" + std::to_string(i++);
          } while (taken.count(fresh));
          body = rename_free(body, name, fresh);
          name = fresh;
        }
      }
      std::vector<std::string> added;
      for (const auto& name : names)
        if (taken.insert(name).second) added.push_back(name);
      body = normalize_rec(body, taken);
      for (const auto& name : added) taken.erase(name);
      Formula g{f->kind};
      g.bound = std::move(names);
      g.kids = {body};
      return mk(std::move(g));
    }
    default: {
      if (f->kids.empty()) return f;
      std::vector<FormulaPtr> kids;
      bool changed = false;
      for (const auto& k : f->kids) {
        kids.push_back(normalize_rec(k, taken));
        changed = changed || kids.back() != k;
      }
      if (!changed) return f;
      Formula g = *f;
      g.kids = std::move(kids);
      return mk(std::move(g));
    }
  }
}

}  // namespace

FormulaPtr normalize_bindings(const FormulaPtr& f) {
  std::set<std::string> taken = free_vars(f);
  return normalize_rec(f, taken);
}

bool eval_qf(const FormulaPtr& f, const std::map<std::string, Rat>& assign) {
  switch (f->kind) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom: {
      std::vector<Rat> x;
      for (const auto& v : f->vars) {
        auto it = assign.find(v);
        if (it == assign.end()) throw std::invalid_argument("eval_qf: unbound variable " + v);
        x.push_back(it->second);
      }
      return rat_sign(f->poly.eval(x)) == rel_to_sign(f->rel);
    }
    case Formula::Kind::And:
      for (const auto& k : f->kids)
        if (!eval_qf(k, assign)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : f->kids)
        if (eval_qf(k, assign)) return true;
      return false;
    case Formula::Kind::Not:
      return !eval_qf(f->kids[0], assign);
    default:
      throw std::invalid_argument("eval_qf: formula is not quantifier-free");
  }
}

// ---------------------------------------------------------------- printing

namespace {

void print_poly_sexpr(std::ostream& os, const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  std::vector<std::string> terms;
  const auto& tm = p.terms();
  for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
    const auto& [e, c] = *it;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (e[i] == 1)
        factors.push_back(vars[i]);
      else
        factors.push_back("(^ " + vars[i] + " " + std::to_string(e[i]) + ")");
    }
    std::string t;
    if (factors.empty()) {
      t = rat_str(c);
    } else if (c == 1 && factors.size() == 1) {
      t = factors[0];
    } else {
      t = "(*";
      if (c != 1) t += " " + rat_str(c);
      for (const auto& fct : factors) t += " " + fct;
      t += ")";
    }
    terms.push_back(std::move(t));
  }
  if (terms.size() == 1) {
    os << terms[0];
    return;
  }
  os << "(+";
  for (const auto& t : terms) os << " " << t;
  os << ")";
}

void serialize_rec(std::ostream& os, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
      os << "true";
      return;
    case Formula::Kind::False:
      os << "false";
      return;
    case Formula::Kind::Atom:
      os << "(" << rel_str(f->rel) << " ";
      print_poly_sexpr(os, f->poly, f->vars);
      os << " 0)";
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      os << (f->kind == Formula::Kind::And ? "(and" : "(or");
      for (const auto& k : f->kids) {
        os << " ";
        serialize_rec(os, k);
      }
      os << ")";
      return;
    }
    case Formula::Kind::Not:
      os << "(not ";
      serialize_rec(os, f->kids[0]);
      os << ")";
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::ForAll: {
      os << (f->kind == Formula::Kind::Exists ? "(exists (" : "(forall (");
      for (std::size_t i = 0; i < f->bound.size(); ++i)
        os << (i ? " (" : "(") << f->bound[i] << " Real)";
      os << ") ";
      serialize_rec(os, f->kids[0]);
      os << ")";
      return;
    }
  }
}

}  // namespace

std::string serialize(const FormulaPtr& f) {
  std::ostringstream os;
  serialize_rec(os, f);
  return os.str();
}

// ----------------------------------------------------------------- parsing

namespace {

// minimal s-expression tree over the shared tokenizer
struct Sx {
  enum Kind { List, Sym, Num } kind;
  std::string text;       // Sym / Num
  std::vector<Sx> items;  // List
  int line = 0, col = 0;
};

Sx read_sx(TokenStream& ts, bool head_position) {
  const Token& t = ts.peek();
  if (t.kind == Token::End) ts.fail("unexpected end of formula");
  if (ts.is_punct("(")) {
    Sx lst{Sx::List, "", {}, t.line, t.col};
    ts.get();
    bool first = true;
    while (!ts.is_punct(")")) {
      if (ts.at_end()) ts.fail("missing ')'");
      lst.items.push_back(read_sx(ts, first));
      first = false;
    }
    ts.get();
    return lst;
  }
  if (t.kind == Token::Number) {
    ts.get();
    return {Sx::Num, t.text, {}, t.line, t.col};
  }
  // a '-' right before a number in argument position is a negative literal
  if (!head_position && ts.is_punct("-")) {
    ts.get();
    if (ts.peek().kind != Token::Number) ts.fail("expected number after '-'");
    Token n = ts.get();
    return {Sx::Num, "-" + n.text, {}, t.line, t.col};
  }
  if (t.kind == Token::Ident || t.kind == Token::Punct) {
    ts.get();
    return {Sx::Sym, t.text, {}, t.line, t.col};
  }
  ts.fail("unexpected token");
}

[[noreturn]] void sx_fail(const Sx& s, const std::string& msg) {
  throw SyntaxError(msg, s.line, s.col);
}

// polynomial expression tree -> Poly; vars grow on first use
Poly poly_of(const Sx& s, std::vector<std::string>& vars) {
  auto var_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    vars.push_back(name);
    return static_cast<int>(vars.size() - 1);
  };
  switch (s.kind) {
    case Sx::Num: {
      auto r = rat_parse(s.text);
      if (!r) sx_fail(s, "bad rational '" + s.text + "'");
      return Poly::constant(0, *r);  // arity fixed up by callers via pad
    }
    case Sx::Sym: {
      int i = var_index(s.text);
      return Poly::variable(i + 1, i);
    }
    case Sx::List: {
      if (s.items.empty() || s.items[0].kind != Sx::Sym) sx_fail(s, "expected operator");
      const std::string& op = s.items[0].text;
      std::vector<Poly> args;
      for (std::size_t i = 1; i < s.items.size(); ++i)
        args.push_back(poly_of(s.items[i], vars));
      int ar = static_cast<int>(vars.size());
      for (auto& a : args) a = a.pad_arity(ar);
      if (op == "+") {
        if (args.empty()) sx_fail(s, "(+) needs arguments");
        Poly acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = acc + args[i];
        return acc;
      }
      if (op == "*") {
        if (args.empty()) sx_fail(s, "(*) needs arguments");
        Poly acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = acc * args[i];
        return acc;
      }
      if (op == "-") {
        if (args.empty()) sx_fail(s, "(-) needs arguments");
        if (args.size() == 1) return -args[0];
        Poly acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = acc - args[i];
        return acc;
      }
      if (op == "^") {
        if (args.size() != 2 || s.items[2].kind != Sx::Num ||
            s.items[2].text.find('/') != std::string::npos || s.items[2].text[0] == '-')
          sx_fail(s, "(^ var k) needs a natural exponent");
        unsigned e = 0;
        for (char c : s.items[2].text) {
          e = e * 10 + static_cast<unsigned>(c - '0');
          if (e > 1000) sx_fail(s, "exponent too large");
        }
        return args[0].pow(e);
      }
      sx_fail(s, "unknown polynomial operator '" + op + "'");
    }
  }
  sx_fail(s, "bad polynomial expression");
}

FormulaPtr formula_of(const Sx& s) {
  if (s.kind == Sx::Sym) {
    if (s.text == "true") return f_true();
    if (s.text == "false") return f_false();
    sx_fail(s, "expected formula, got symbol '" + s.text + "'");
  }
  if (s.kind != Sx::List || s.items.empty() || s.items[0].kind != Sx::Sym)
    sx_fail(s, "expected formula");
  const std::string& op = s.items[0].text;
  auto need = [&](std::size_t k) {
    if (s.items.size() != k + 1)
      sx_fail(s, "'" + op + "' takes " + std::to_string(k) + " arguments");
  };
  if (op == "and" || op == "or") {
    std::vector<FormulaPtr> kids;
    for (std::size_t i = 1; i < s.items.size(); ++i) kids.push_back(formula_of(s.items[i]));
    return op == "and" ? f_and(std::move(kids)) : f_or(std::move(kids));
  }
  if (op == "not") {
    need(1);
    return f_not(formula_of(s.items[1]));
  }
  if (op == "forall" || op == "exists") {
    need(2);
    const Sx& binder = s.items[1];
    if (binder.kind != Sx::List || binder.items.empty()) sx_fail(binder, "expected binder list");
    std::vector<std::string> names;
    for (const Sx& b : binder.items) {
      if (b.kind != Sx::List || b.items.size() != 2 || b.items[0].kind != Sx::Sym ||
          b.items[1].kind != Sx::Sym || b.items[1].text != "Real")
        sx_fail(b, "binder must be (name Real)");
      names.push_back(b.items[0].text);
    }
    FormulaPtr body = formula_of(s.items[2]);
    return op == "forall" ? f_forall(std::move(names), std::move(body))
                          : f_exists(std::move(names), std::move(body));
  }
  if (op == "<" || op == "=" || op == ">" || op == "<=" || op == ">=" || op == "!=") {
    need(2);
    std::vector<std::string> vars;
    Poly lhs = poly_of(s.items[1], vars);
    Poly rhs = poly_of(s.items[2], vars);
    int ar = static_cast<int>(vars.size());
    Poly f = lhs.pad_arity(ar) - rhs.pad_arity(ar);
    if (op == "<") return f_lt(f, vars);
    if (op == "=") return f_eq(f, vars);
    if (op == ">") return f_gt(f, vars);
    if (op == "<=") return f_le(f, vars);
    if (op == ">=") return f_ge(f, vars);
    return f_ne(f, vars);
  }
  sx_fail(s, "unknown formula operator '" + op + "'");
}

}  // namespace

FormulaPtr parse_formula_sexpr(const std::string& text) {
  TokenStream ts(tokenize(text));
  Sx s = read_sx(ts, false);
  if (!ts.at_end()) ts.fail("trailing input after formula");
  return formula_of(s);
}

namespace {

bool formula_word(const std::string& w) {
  return w == "forall" || w == "exists" || w == "and" || w == "or" || w == "not" ||
         w == "true" || w == "false";
}

// A parenthesized group is a subformula iff a comparison or a connective
// shows up before the matching close paren; otherwise it is part of a
// polynomial. Decided on a copy of the stream.
bool paren_opens_formula(TokenStream ts) {
  ts.get();
  int depth = 1;
  while (!ts.at_end() && depth > 0) {
    const Token& t = ts.peek();
    if (t.kind == Token::Punct) {
      if (t.text == "(") ++depth;
      if (t.text == ")") --depth;
      if (t.text == "<" || t.text == ">" || t.text == "=" || t.text == "<=" ||
          t.text == ">=" || t.text == "!=")
        return true;
    } else if (t.kind == Token::Ident && formula_word(t.text)) {
      return true;
    }
    ts.get();
  }
  return false;
}

struct FormulaParser {
  TokenStream& ts;
  const VarTable& table;
  const std::vector<std::string>& names;

  FormulaPtr formula() {
    if (ts.is_ident("forall") || ts.is_ident("exists")) return quantified();
    return disjunction();
  }

  FormulaPtr quantified() {
    bool universal = ts.is_ident("forall");
    ts.get();
    std::vector<std::string> bound;
    bound.push_back(ts.expect_any_ident("a bound variable"));
    while (!ts.is_punct(".")) {
      if (ts.is_punct(",")) {
        ts.get();
        continue;
      }
      bound.push_back(ts.expect_any_ident("a bound variable"));
    }
    ts.expect_punct(".");
    FormulaPtr body = formula();
    return universal ? f_forall(std::move(bound), std::move(body))
                     : f_exists(std::move(bound), std::move(body));
  }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> kids{conjunction()};
    while (ts.is_ident("or")) {
      ts.get();
      kids.push_back(conjunction());
    }
    return kids.size() == 1 ? kids[0] : f_or(std::move(kids));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> kids{unary()};
    while (ts.is_ident("and")) {
      ts.get();
      kids.push_back(unary());
    }
    return kids.size() == 1 ? kids[0] : f_and(std::move(kids));
  }

  FormulaPtr unary() {
    if (ts.is_ident("not")) {
      ts.get();
      return f_not(unary());
    }
    if (ts.is_ident("forall") || ts.is_ident("exists")) return quantified();
    if (ts.is_ident("true")) {
      ts.get();
      return f_true();
    }
    if (ts.is_ident("false")) {
      ts.get();
      return f_false();
    }
    if (ts.is_punct("(") && paren_opens_formula(ts)) {
      ts.get();
      FormulaPtr f = formula();
      ts.expect_punct(")");
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    Poly lhs = parse_poly_expr(ts, table);
    std::string op;
    for (const char* r : {"<=", ">=", "!=", "<", ">", "="})
      if (ts.is_punct(r)) {
        op = r;
        break;
      }
    if (op.empty()) ts.fail("expected a comparison operator");
    ts.get();
    Poly f = lhs - parse_poly_expr(ts, table);
    if (op == "<") return f_lt(f, names);
    if (op == "<=") return f_le(f, names);
    if (op == "=") return f_eq(f, names);
    if (op == "!=") return f_ne(f, names);
    if (op == ">=") return f_ge(f, names);
    return f_gt(f, names);
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  // every non-keyword identifier is a variable; indices follow name order
  std::set<std::string> seen;
  for (const Token& t : toks)
    if (t.kind == Token::Ident && !formula_word(t.text)) seen.insert(t.text);
  std::vector<std::string> names(seen.begin(), seen.end());
  VarTable table;
  for (int i = 0; i < (int)names.size(); ++i) table.add(names[i], i);
  TokenStream ts(std::move(toks));
  FormulaPtr f = FormulaParser{ts, table, names}.formula();
  if (!ts.at_end()) ts.fail("trailing input after formula");
  return f;
}

}  // namespace rcfw
