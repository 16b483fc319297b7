#include "rcfw/polyparse.hpp"

#include <cctype>

#include "rcfw/errors.hpp"
#include "rcfw/rat.hpp"

namespace rcfw {

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') {
        bump(text[i]);
        ++i;
      }
      continue;
    }
    int tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i];
        bump(text[i]);
        ++i;
      }
      // a slash glued between digit runs is part of the rational literal
      if (i + 1 < text.size() && text[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        num += '/';
        bump('/');
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          num += text[i];
          bump(text[i]);
          ++i;
        }
      }
      out.push_back({Token::Number, num, tl, tc});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        id += text[i];
        bump(text[i]);
        ++i;
      }
      out.push_back({Token::Ident, id, tl, tc});
      continue;
    }
    // multi-character comparison operators used by the formula syntax
    if ((c == '<' || c == '>' || c == '!' || c == ':') && i + 1 < text.size() &&
        text[i + 1] == '=') {
      out.push_back({Token::Punct, std::string{c, '='}, tl, tc});
      bump(c);
      bump('=');
      i += 2;
      continue;
    }
    out.push_back({Token::Punct, std::string(1, c), tl, tc});
    bump(c);
    ++i;
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

bool TokenStream::is_punct(const std::string& p) const {
  return peek().kind == Token::Punct && peek().text == p;
}

bool TokenStream::is_ident(const std::string& w) const {
  return peek().kind == Token::Ident && peek().text == w;
}

void TokenStream::expect_punct(const std::string& p) {
  if (!is_punct(p)) fail("expected '" + p + "'");
  get();
}

void TokenStream::expect_ident(const std::string& w) {
  if (!is_ident(w)) fail("expected '" + w + "'");
  get();
}

std::string TokenStream::expect_any_ident(const char* what) {
  if (peek().kind != Token::Ident) fail(std::string("expected ") + what);
  return get().text;
}

void TokenStream::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
  throw SyntaxError(msg + ", got " + got, t.line, t.col);
}

std::optional<int> VarTable::lookup(const std::string& s) const {
  for (const auto& [name, idx] : entries)
    if (name == s) return idx;
  return std::nullopt;
}

void VarTable::add(const std::string& name, int idx) {
  entries.emplace_back(name, idx);
  if (idx + 1 > nvars) nvars = idx + 1;
}

VarTable ambient_vars(int n) {
  VarTable t;
  const char* xyz[] = {"x", "y", "z"};
  if (n <= 3)
    for (int i = 0; i < n; ++i) t.add(xyz[i], i);
  for (int i = 0; i < n; ++i) t.add("x" + std::to_string(i + 1), i);
  t.nvars = n;
  return t;
}

namespace {

Poly parse_expr(TokenStream& ts, const VarTable& vars);

Poly parse_factor(TokenStream& ts, const VarTable& vars) {
  if (ts.is_punct("-")) {
    ts.get();
    return -parse_factor(ts, vars);
  }
  if (ts.is_punct("+")) {
    ts.get();
    return parse_factor(ts, vars);
  }
  Poly base(vars.nvars);
  if (ts.is_punct("(")) {
    ts.get();
    base = parse_expr(ts, vars);
    ts.expect_punct(")");
  } else if (ts.peek().kind == Token::Number) {
    auto r = rat_parse(ts.peek().text);
    if (!r) ts.fail("bad rational literal");
    ts.get();
    base = Poly::constant(vars.nvars, *r);
  } else if (ts.peek().kind == Token::Ident) {
    auto idx = vars.lookup(ts.peek().text);
    if (!idx) ts.fail("unknown variable '" + ts.peek().text + "'");
    ts.get();
    base = Poly::variable(vars.nvars, *idx);
  } else {
    ts.fail("expected polynomial");
  }
  if (ts.is_punct("^")) {
    ts.get();
    if (ts.peek().kind != Token::Number || ts.peek().text.find('/') != std::string::npos)
      ts.fail("expected integer exponent");
    unsigned e = 0;
    for (char c : ts.peek().text) {
      e = e * 10 + static_cast<unsigned>(c - '0');
      if (e > 1000) ts.fail("exponent too large");
    }
    ts.get();
    base = base.pow(e);
  }
  return base;
}

Poly parse_term(TokenStream& ts, const VarTable& vars) {
  Poly p = parse_factor(ts, vars);
  while (ts.is_punct("*")) {
    ts.get();
    p = p * parse_factor(ts, vars);
  }
  return p;
}

Poly parse_expr(TokenStream& ts, const VarTable& vars) {
  Poly p = parse_term(ts, vars);
  while (ts.is_punct("+") || ts.is_punct("-")) {
    bool neg = ts.get().text == "-";
    Poly q = parse_term(ts, vars);
    p = neg ? p - q : p + q;
  }
  return p;
}

}  // namespace

Poly parse_poly_expr(TokenStream& ts, const VarTable& vars) { return parse_expr(ts, vars); }

Poly parse_poly(const std::string& text, const VarTable& vars) {
  TokenStream ts(tokenize(text));
  Poly p = parse_poly_expr(ts, vars);
  if (!ts.at_end()) ts.fail("trailing input after polynomial");
  return p;
}

}  // namespace rcfw
