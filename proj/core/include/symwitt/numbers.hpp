// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMWITT_NUMBERS_HPP
#define SYMWITT_NUMBERS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symwitt {

/// Arbitrary-precision integer and rational types used throughout.
/// All arithmetic in this library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

Int pow_int(const Int& base, std::uint64_t exp);

/// Generalized binomial coefficient binom(m, k) for arbitrary integer m,
/// k >= 0.  Always an integer.
Int binomial(const Int& m, unsigned k);

/// Positive divisors of n in ascending order (n >= 1).
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace symwitt

#endif
