#pragma once

#include <vector>

namespace chromlag {

// Moebius function; n must be positive.
int moebius(long long n);

// Divisors of n in increasing order; n must be positive.
std::vector<long long> divisors(long long n);

// gcd of a vector of nonnegative ints (0 for the empty or all-zero vector).
long long gcd_all(const std::vector<int>& v);

} // namespace chromlag
