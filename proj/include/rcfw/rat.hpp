#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace rcfw {

// Exact arithmetic lives on GMP. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalize(), which rat_parse and all arithmetic preserve.
using Int = mpz_class;
using Rat = mpq_class;

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_pow(const Rat& base, unsigned e);

Int int_pow(const Int& base, unsigned e);

// "-3", "7/2"; rejects zero denominators and trailing junk.
std::optional<Rat> rat_parse(const std::string& s);

std::string rat_str(const Rat& r);

// Binomial C(n,k) as an exact integer.
Int binomial_int(unsigned n, unsigned k);

}  // namespace rcfw
