#include "rcfw/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcfw {

Poly Poly::constant(int arity, const Rat& c) {
  Poly p(arity);
  if (c != 0) p.terms_[Expo(arity, 0)] = c;
  return p;
}

Poly Poly::variable(int arity, int var) {
  if (var < 0 || var >= arity) throw std::invalid_argument("Poly::variable: index out of range");
  Expo e(arity, 0);
  e[var] = 1;
  Poly p(arity);
  p.terms_[e] = 1;
  return p;
}

Poly Poly::monomial(int arity, const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("Poly::monomial: bad exponent length");
  Poly p(arity);
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint32_t k) { return k == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
  return terms_.begin()->second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (uint32_t k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

unsigned Poly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<unsigned>(e[var]));
  return d;
}

bool Poly::uses_var(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

int Poly::effective_arity() const {
  int top = 0;
  for (const auto& [e, c] : terms_)
    for (int i = arity_ - 1; i >= top; --i)
      if (e[i] > 0) top = i + 1;
  return top;
}

Poly Poly::operator-() const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("Poly::+: arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("Poly::*: arity mismatch");
  Poly r(arity_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(arity_);
      for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
      Rat c = c1 * c2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        if (c != 0) r.terms_[e] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(arity_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(arity_, 1);
  Poly b = *this;
  unsigned k = e;
  while (k) {
    if (k & 1u) acc = acc * b;
    b = b * b;
    k >>= 1;
  }
  return acc;
}

bool Poly::operator<(const Poly& o) const {
  if (arity_ != o.arity_) return arity_ < o.arity_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != arity_) throw std::invalid_argument("Poly::eval: point arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < arity_; ++i)
      if (e[i]) t *= rat_pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    r.terms_[d] = c * Rat(e[var]);
  }
  return r;
}

Poly Poly::substitute(int var, const Rat& val) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    d[var] = 0;
    Rat nc = c * rat_pow(val, e[var]);
    if (nc == 0) continue;
    auto it = r.terms_.find(d);
    if (it == r.terms_.end()) {
      r.terms_[d] = nc;
    } else {
      it->second += nc;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::pad_arity(int n) const {
  if (n < arity_) throw std::invalid_argument("Poly::pad_arity: shrinking");
  Poly r(n);
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    d.resize(n, 0);
    r.terms_[d] = c;
  }
  return r;
}

Poly Poly::drop_unused_above(int n) const {
  Poly r(n);
  for (const auto& [e, c] : terms_) {
    for (int i = n; i < arity_; ++i)
      if (e[i]) throw std::logic_error("Poly::drop_unused_above: variable in use");
    Expo d(e.begin(), e.begin() + n);
    r.terms_[d] = c;
  }
  return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw std::invalid_argument("Poly::permute_vars: bad size");
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    Expo d(arity_, 0);
    for (int i = 0; i < arity_; ++i) d[perm[i]] = e[i];
    r.terms_[d] = c;
  }
  return r;
}

std::vector<Poly> Poly::last_coeffs() const {
  if (arity_ == 0) throw std::logic_error("Poly::last_coeffs on arity 0");
  int v = arity_ - 1;
  std::vector<Poly> cs(degree_in(v) + 1, Poly(arity_ - 1));
  for (const auto& [e, c] : terms_) {
    Expo d(e.begin(), e.end() - 1);
    cs[e[v]].terms_[d] = c;
  }
  return cs;
}

Poly Poly::from_last_coeffs(int arity, const std::vector<Poly>& cs) {
  Poly r(arity);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms_) {
      Expo d = e;
      d.push_back(static_cast<uint32_t>(k));
      r.terms_[d] = c;
    }
  }
  return r;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num(0), den(1);
  for (const auto& [e, c] : terms_) {
    Int n = abs(c.get_num());
    Int d = c.get_den();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Poly Poly::canonical(int* sign_out) const {
  if (terms_.empty()) {
    if (sign_out) *sign_out = 1;
    return *this;
  }
  Rat c = content();
  int s = rat_sign(terms_.rbegin()->second);
  if (sign_out) *sign_out = s;
  if (s < 0) c = -c;
  Poly r(arity_);
  for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
  return r;
}

void Poly::set_term(const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("Poly::set_term: bad exponent length");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print leading monomials first, easier to read
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool allzero = std::all_of(e.begin(), e.end(), [](uint32_t k) { return k == 0; });
    bool printed = false;
    if (a != 1 || allzero) {
      out << rat_str(a);
      printed = true;
    }
    for (int i = 0; i < arity_; ++i) {
      if (!e[i]) continue;
      if (printed) out << "*";
      out << names[i];
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

std::string Poly::str() const { return str(default_var_names(arity_)); }

std::vector<Poly::Expo> monomials_upto(int n, unsigned q) {
  std::vector<Poly::Expo> out;
  Poly::Expo cur(n, 0);
  // depth-first enumeration; sort at the end to the map's ascending order
  struct Rec {
    int n;
    unsigned q;
    std::vector<Poly::Expo>* out;
    void go(Poly::Expo& e, int i, unsigned left) {
      if (i == n) {
        out->push_back(e);
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        go(e, i + 1, left - k);
      }
      e[i] = 0;
    }
  } rec{n, q, &out};
  rec.go(cur, 0, q);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[3] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) names.emplace_back(xyz[i]);
  } else {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace rcfw
