#include "chromlag/rational.hpp"

namespace chromlag {

namespace {
bool looks_like_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
} // namespace

Int int_parse(const std::string& s) {
  require(looks_like_number(s), errc::bad_argument, "bad integer literal '" + s + "'");
  return Int(s);
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_parse(s));
  Int n = int_parse(s.substr(0, slash));
  Int d = int_parse(s.substr(slash + 1));
  return make_rat(n, d);
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    require(base != 0, errc::bad_argument, "negative power of zero");
    Rat inv = Rat(1) / base;
    return rat_pow(inv, -e);
  }
  Rat r(int_pow(base.get_num(), static_cast<unsigned long>(e)),
        int_pow(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

Int gcd_vec(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    Int g2;
    mpz_gcd(g2.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = g2;
  }
  return g;
}

} // namespace chromlag
