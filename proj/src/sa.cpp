#include "rcfw/sa.hpp"

#include <algorithm>
#include <sstream>

#include "rcfw/errors.hpp"
#include "rcfw/polyparse.hpp"

namespace rcfw {

int rel_to_sign(Rel r) {
  switch (r) {
    case Rel::LT: return -1;
    case Rel::EQ: return 0;
    default: return 1;
  }
}

Rel sign_to_rel(int s) {
  if (s < 0) return Rel::LT;
  if (s == 0) return Rel::EQ;
  return Rel::GT;
}

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::LT: return "<";
    case Rel::EQ: return "=";
    default: return ">";
  }
}

bool SignCond::holds_at(const std::vector<Rat>& x) const {
  return rat_sign(poly.eval(x)) == rel_to_sign(rel);
}

Complexity complexity_of(const SaDescription& d) {
  Complexity c;
  for (const auto& conj : d.conjuncts)
    for (const auto& a : conj) {
      ++c.p;
      if (a.poly.degree() > c.q) c.q = a.poly.degree();
    }
  return c;
}

bool member(const SaDescription& d, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != d.ambient)
    throw std::invalid_argument("member: point dimension mismatch");
  for (const auto& conj : d.conjuncts) {
    bool all = true;
    for (const auto& a : conj)
      if (!a.holds_at(x)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::vector<Poly> distinct_polys(const SaDescription& d) {
  std::vector<Poly> out;
  for (const auto& conj : d.conjuncts)
    for (const auto& a : conj)
      if (std::find(out.begin(), out.end(), a.poly) == out.end()) out.push_back(a.poly);
  return out;
}

namespace {

// one atom, possibly sugared; returns 1 or 2 sign conditions
std::vector<SignCond> parse_atom(TokenStream& ts, const VarTable& vars) {
  Poly lhs = parse_poly_expr(ts, vars);
  std::string op;
  for (const char* cand : {"<=", ">=", "<", "=", ">"})
    if (ts.is_punct(cand)) {
      op = cand;
      break;
    }
  if (op.empty()) ts.fail("expected relation (<, =, >, <=, >=)");
  ts.get();
  Poly rhs = parse_poly_expr(ts, vars);
  Poly f = lhs - rhs;
  if (op == "<") return {{f, Rel::LT}};
  if (op == ">") return {{f, Rel::GT}};
  if (op == "=") return {{f, Rel::EQ}};
  if (op == "<=") return {{f, Rel::LT}, {f, Rel::EQ}};
  return {{f, Rel::GT}, {f, Rel::EQ}};
}

// one clause { atom, atom, ... }; sugar expands to a union of conjuncts
std::vector<std::vector<SignCond>> parse_clause(TokenStream& ts, const VarTable& vars) {
  ts.expect_punct("{");
  std::vector<std::vector<SignCond>> alts = {{}};
  while (true) {
    std::vector<SignCond> choices = parse_atom(ts, vars);
    if (choices.size() == 1) {
      for (auto& c : alts) c.push_back(choices[0]);
    } else {
      std::vector<std::vector<SignCond>> next;
      for (const auto& c : alts)
        for (const auto& ch : choices) {
          next.push_back(c);
          next.back().push_back(ch);
        }
      alts = std::move(next);
    }
    if (ts.is_punct(",")) {
      ts.get();
      continue;
    }
    break;
  }
  ts.expect_punct("}");
  return alts;
}

NamedSet parse_one_set(TokenStream& ts) {
  ts.expect_ident("set");
  NamedSet out;
  out.name = ts.expect_any_ident("set name");
  ts.expect_ident("in");
  ts.expect_ident("R");
  ts.expect_punct("^");
  if (ts.peek().kind != Token::Number) ts.fail("expected ambient dimension");
  int n = 0;
  for (char c : ts.peek().text) {
    if (c == '/') ts.fail("ambient dimension must be an integer");
    n = n * 10 + (c - '0');
    if (n > 64) ts.fail("ambient dimension too large");
  }
  if (n < 1) ts.fail("ambient dimension must be positive");
  ts.get();
  ts.expect_punct(":=");
  out.desc.ambient = n;
  VarTable vars = ambient_vars(n);
  if (ts.is_ident("empty")) {
    ts.get();
    return out;
  }
  while (true) {
    auto alts = parse_clause(ts, vars);
    for (auto& a : alts) out.desc.conjuncts.push_back(std::move(a));
    if (ts.is_punct("|")) {
      ts.get();
      continue;
    }
    break;
  }
  return out;
}

}  // namespace

std::vector<NamedSet> parse_sets(const std::string& text) {
  TokenStream ts(tokenize(text));
  std::vector<NamedSet> out;
  while (!ts.at_end()) out.push_back(parse_one_set(ts));
  return out;
}

SaDescription parse_description(const std::string& text) {
  auto sets = parse_sets(text);
  if (sets.size() != 1)
    throw SyntaxError("expected exactly one set statement, found " + std::to_string(sets.size()),
                      1, 1);
  return std::move(sets[0].desc);
}

std::string print_description(const SaDescription& d, const std::string& name) {
  std::ostringstream os;
  os << "set " << name << " in R^" << d.ambient << " := ";
  if (d.conjuncts.empty()) {
    os << "empty";
    return os.str();
  }
  auto names = default_var_names(d.ambient);
  bool firstc = true;
  for (const auto& conj : d.conjuncts) {
    if (!firstc) os << " | ";
    firstc = false;
    os << "{ ";
    bool firsta = true;
    for (const auto& a : conj) {
      if (!firsta) os << ", ";
      firsta = false;
      os << a.poly.str(names) << " " << rel_str(a.rel) << " 0";
    }
    os << " }";
  }
  return os.str();
}

}  // namespace rcfw
