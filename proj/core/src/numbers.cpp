// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/numbers.hpp"

namespace symwitt {

Int pow_int(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Int binomial(const Int& m, unsigned k) {
  // prod_{i=1..k} (m - i + 1) / i, exact at every step since the running
  // numerator is a product of i consecutive integers
  Int num = 1;
  Int den = 1;
  for (unsigned i = 1; i <= k; ++i) {
    num *= (m - i + 1);
    den *= i;
  }
  return num / den;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace symwitt
