#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chromlag/errors.hpp"

namespace chromlag {

// Exact arbitrary-precision arithmetic, GMP-backed. Everything downstream of
// this header is exact: no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, errc::bad_argument, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" or "p/q", canonical (q > 0, gcd(p,q)=1).
inline std::string rat_str(const Rat& r) { return r.get_str(); }
inline std::string int_str(const Int& n) { return n.get_str(); }

// Parses "p" or "p/q" with optional sign; rejects anything else.
Rat rat_parse(const std::string& s);
Int int_parse(const std::string& s);

Int int_pow(const Int& base, unsigned long e);
// Integer exponents, negative allowed (base must be nonzero then).
Rat rat_pow(const Rat& base, long e);

Int gcd_vec(const std::vector<Int>& v);

} // namespace chromlag
