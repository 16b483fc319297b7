#include "rcfw/param.hpp"

#include <istream>
#include <sstream>

#include "rcfw/errors.hpp"

namespace rcfw {

Int monomial_count(int n, unsigned q) {
  return binomial_int(static_cast<unsigned>(n) + q, q);
}

std::vector<Rat> poly_to_block(const Poly& f, unsigned q) {
  auto ms = monomials_upto(f.arity(), q);
  std::vector<Rat> out;
  out.reserve(ms.size());
  const auto& terms = f.terms();
  for (const auto& e : ms) {
    auto it = terms.find(e);
    out.push_back(it == terms.end() ? Rat(0) : it->second);
  }
  return out;
}

Poly block_to_poly(int n, unsigned q, const std::vector<Rat>& block) {
  auto ms = monomials_upto(n, q);
  if (ms.size() != block.size()) throw std::invalid_argument("block length mismatch");
  Poly f(n);
  for (std::size_t i = 0; i < ms.size(); ++i) f.set_term(ms[i], block[i]);
  return f;
}

namespace {

long pow3(unsigned p) {
  long r = 1;
  for (unsigned i = 0; i < p; ++i) r *= 3;
  return r;
}

// tuple -> bit index; sigma entries in {-1, 0, 1}, first coordinate most
// significant, digit value sigma + 1
long tuple_index(const std::vector<int>& sigma) {
  long k = 0;
  for (int s : sigma) k = k * 3 + (s + 1);
  return k;
}

std::vector<int> index_tuple(long k, unsigned p) {
  std::vector<int> sigma(p);
  for (unsigned i = p; i-- > 0;) {
    sigma[i] = static_cast<int>(k % 3) - 1;
    k /= 3;
  }
  return sigma;
}

}  // namespace

ParamPoint encode(const SaDescription& d, unsigned p, unsigned q) {
  Complexity c = complexity_of(d);
  if (!c.fits(p, q))
    throw CapacityError("description complexity (" + std::to_string(c.p) + "," +
                        std::to_string(c.q) + ") exceeds (" + std::to_string(p) + "," +
                        std::to_string(q) + ")");
  if (p > kMaxParamP)
    throw CapacityError("parameter p > " + std::to_string(kMaxParamP));

  ParamPoint a;
  a.n = d.ambient;
  a.p = p;
  a.q = q;

  std::vector<Poly> fs = distinct_polys(d);
  fs.resize(p, Poly::zero(d.ambient));
  for (const Poly& f : fs) a.blocks.push_back(poly_to_block(f, q));

  // collect full sign tuples consistent with some conjunct
  long total = pow3(p);
  std::vector<bool> in_sigma(static_cast<std::size_t>(total), false);
  for (const auto& conj : d.conjuncts) {
    // constraint per block: -2 = free, else the required sign
    std::vector<int> req(p, -2);
    bool contradictory = false;
    for (const auto& atom : conj) {
      std::size_t i = 0;
      while (fs[i] != atom.poly) ++i;
      int s = rel_to_sign(atom.rel);
      if (req[i] != -2 && req[i] != s) {
        contradictory = true;  // e.g. f<0 and f>0 in one conjunct
        break;
      }
      req[i] = s;
    }
    if (contradictory) continue;
    // expand the free coordinates
    std::vector<int> sigma(p, -1);
    std::vector<std::size_t> free_idx;
    for (unsigned i = 0; i < p; ++i) {
      if (req[i] == -2)
        free_idx.push_back(i);
      else
        sigma[i] = req[i];
    }
    long combos = pow3(static_cast<unsigned>(free_idx.size()));
    for (long m = 0; m < combos; ++m) {
      long t = m;
      for (std::size_t j : free_idx) {
        sigma[j] = static_cast<int>(t % 3) - 1;
        t /= 3;
      }
      in_sigma[static_cast<std::size_t>(tuple_index(sigma))] = true;
    }
  }
  Int l = 0;
  for (long k = total - 1; k >= 0; --k) {
    l <<= 1;
    if (in_sigma[static_cast<std::size_t>(k)]) l |= 1;
  }
  a.selector = l;
  return a;
}

std::vector<std::vector<int>> selector_sign_tuples(unsigned p, const Int& selector) {
  if (p > kMaxParamP) throw CapacityError("parameter p > " + std::to_string(kMaxParamP));
  long total = pow3(p);
  // in range means 0 <= l < 2^total, i.e. no set bit at position >= total
  if (selector < 0 ||
      (selector != 0 &&
       static_cast<long>(mpz_sizeinbase(selector.get_mpz_t(), 2)) > total))
    throw std::invalid_argument("selector out of range");
  std::vector<std::vector<int>> out;
  for (long k = 0; k < total; ++k)
    if (mpz_tstbit(selector.get_mpz_t(), static_cast<mp_bitcnt_t>(k)))
      out.push_back(index_tuple(k, p));
  return out;
}

SaDescription decode(const ParamPoint& a) {
  if (a.blocks.size() != a.p) throw std::invalid_argument("decode: block count != p");

  std::vector<Poly> fs;
  for (const auto& b : a.blocks) fs.push_back(block_to_poly(a.n, a.q, b));

  SaDescription d;
  d.ambient = a.n;
  for (const auto& sigma : selector_sign_tuples(a.p, a.selector)) {
    std::vector<SignCond> conj;
    for (unsigned i = 0; i < a.p; ++i) conj.push_back({fs[i], sign_to_rel(sigma[i])});
    d.conjuncts.push_back(std::move(conj));
  }
  return d;
}

std::string write_param(const ParamPoint& a) {
  std::ostringstream os;
  os << "param " << a.n << " " << a.p << " " << a.q << " " << a.selector.get_str() << "\n";
  for (const auto& b : a.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << rat_str(b[i]);
    os << "\n";
  }
  return os.str();
}

ParamPoint read_param(std::istream& in) {
  std::string kw;
  in >> kw;
  if (kw != "param") throw SyntaxError("expected 'param' header", 1, 1);
  ParamPoint a;
  long p = 0, q = 0;
  std::string sel;
  if (!(in >> a.n >> p >> q >> sel)) throw SyntaxError("bad param header", 1, 1);
  if (a.n < 1 || p < 0 || q < 0) throw SyntaxError("bad param header values", 1, 1);
  if (p > static_cast<long>(kMaxParamP))
    throw CapacityError("parameter p > " + std::to_string(kMaxParamP));
  a.p = static_cast<unsigned>(p);
  a.q = static_cast<unsigned>(q);
  if (mpz_set_str(a.selector.get_mpz_t(), sel.c_str(), 10) != 0)
    throw SyntaxError("bad selector", 1, 1);
  Int nmono = monomial_count(a.n, a.q);
  if (!nmono.fits_slong_p()) throw CapacityError("monomial count too large");
  long len = nmono.get_si();
  for (unsigned i = 0; i < a.p; ++i) {
    std::vector<Rat> block;
    for (long j = 0; j < len; ++j) {
      std::string tok;
      if (!(in >> tok)) throw SyntaxError("missing block coefficient", 2 + static_cast<int>(i), 1);
      auto r = rat_parse(tok);
      if (!r) throw SyntaxError("bad rational '" + tok + "'", 2 + static_cast<int>(i), 1);
      block.push_back(*r);
    }
    a.blocks.push_back(std::move(block));
  }
  return a;
}

ParamPoint read_param_text(const std::string& text) {
  std::istringstream is(text);
  return read_param(is);
}

}  // namespace rcfw
