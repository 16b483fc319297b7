#include "rcfw/rat.hpp"

#include <cctype>

namespace rcfw {

Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1);
  Rat b = base;
  unsigned k = e;
  while (k) {
    if (k & 1u) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

Int int_pow(const Int& base, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // validate shape: [-+]?digits(/digits)?
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) return std::nullopt;
  }
  Rat r;
  // mpq_set_str takes "-" but not "+"
  const char* c = s.c_str() + (s[0] == '+' ? 1 : 0);
  if (mpq_set_str(r.get_mpq_t(), c, 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Int binomial_int(unsigned n, unsigned k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace rcfw
