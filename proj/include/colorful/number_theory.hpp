#pragma once

#include <cstdint>
#include <vector>

namespace colorful {

// Exact integer primitives behind the closed-form counting formulas.
// Inputs are sequence indices (small), so trial division is all we need.
// Every function rejects n = 0 with std::invalid_argument.

/// All divisors of n in increasing order; starts with 1, ends with n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient: how many of 1..n are coprime to n.
std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function: 0 if n has a squared prime factor, otherwise
/// (-1)^(number of distinct prime factors).
int moebius(std::uint64_t n);

/// Exponent of 3 in n, i.e. the largest e with 3^e | n.
unsigned nu3(std::uint64_t n);

/// sum over d | n of (-1)^d * phi(n/d), computed literally term by term.
/// Closed cases: 0 for even n, -n for odd n; the literal sum keeps that
/// statement testable instead of assumed.
std::int64_t signed_phi_divisor_sum(std::uint64_t n);

}  // namespace colorful
