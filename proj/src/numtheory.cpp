#include "chromlag/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "chromlag/errors.hpp"

namespace chromlag {

int moebius(long long n) {
  require(n > 0, errc::bad_argument, "moebius needs a positive argument");
  int primes = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

std::vector<long long> divisors(long long n) {
  require(n > 0, errc::bad_argument, "divisors needs a positive argument");
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long gcd_all(const std::vector<int>& v) {
  long long g = 0;
  for (int x : v) {
    require(x >= 0, errc::bad_argument, "gcd entries must be nonnegative");
    g = std::gcd(g, static_cast<long long>(x));
  }
  return g;
}

} // namespace chromlag
