#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcfw/poly.hpp"

namespace rcfw {

// Shared tokenizer for the set DSL and the formula surface syntax.
// Token kinds: identifiers/keywords, rational numbers (digits or
// digits/digits), and single punctuation characters. Positions are 1-based.
struct Token {
  enum Kind { Ident, Number, Punct, End } kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text);

// Cursor over a token stream with error helpers that throw SyntaxError.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Token::End; }
  bool is_punct(const std::string& p) const;
  bool is_ident(const std::string& w) const;
  void expect_punct(const std::string& p);
  void expect_ident(const std::string& w);
  std::string expect_any_ident(const char* what);
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Infix polynomial expressions: + - * ^ ( ), rational literals, variables.
// Multiplication is explicit (3*x^2*y). The variable table maps each
// allowed name to its index; aliases may share an index; arity of the
// result = nvars.
struct VarTable {
  std::vector<std::pair<std::string, int>> entries;
  int nvars = 0;
  std::optional<int> lookup(const std::string& s) const;
  void add(const std::string& name, int idx);
};

// Canonical table for ambient dimension n: x,y,z for n <= 3 plus x1..xn
// aliases, so both spellings parse.
VarTable ambient_vars(int n);

Poly parse_poly_expr(TokenStream& ts, const VarTable& vars);

// Convenience: parse a whole string as one polynomial.
Poly parse_poly(const std::string& text, const VarTable& vars);

}  // namespace rcfw
