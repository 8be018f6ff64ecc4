#pragma once

#include "colorful/bigint.hpp"
#include "colorful/group.hpp"

#include <cstdint>

namespace colorful {

// Closed-form counts of colorful necklaces and bracelets in at most three
// colors, plus the exact-color / exact-period variants and the classical
// c-color counts. Everything is evaluated in exact integer arithmetic; every
// division the formulas promise to be exact is asserted exact.

enum class ObjectKind : std::uint8_t { necklace, bracelet };

/// Number of colorful words of length n: 2^n + 2(-1)^n.
BigInt alpha(std::uint64_t n);

/// Weight of a divisor in the necklace formula, determined by gcd(k,6):
/// 1, 4, 3, 6 for gcd 1, 2, 3, 6.
int chi(std::uint64_t k);

/// Number of colorful words of length n fixed by g, by closed form.
/// The permutation enters only through its cycle type, and for eps = 1 the
/// shift enters only through its parity:
///   eps = 0, identity:       alpha(gcd(shift, n))
///   eps = 0, three-cycle:    0 unless 3 | n; for n = 3m, d = gcd(m, shift):
///                            0 if 3 | shift/d, else 2^d - (-1)^d
///   eps = 0, transposition:  0 unless 2 | n; for n = 2m, d = gcd(m, shift):
///                            0 if 2 | shift/d, else 2^d
///   eps = 1, identity:       3 * 2^(n/2) for even n and even shift, else 0
///   eps = 1, transposition:  alpha(floor((n+1)/2))/3 for even shift,
///                            alpha(floor(n/2)+1)/3 for odd shift
///   eps = 1, three-cycle:    0
BigInt fixed_points(std::uint64_t n, const GroupElement& g);

/// Number of non-equivalent colorful n-bead necklaces,
///   K(n) = floor( (1/6n) * sum over d | n of chi(d) phi(d) 2^(n/d) ),
/// cross-checked against the exact form with its correction term
/// -1/3^(1+nu3(n)) for odd n.
BigInt necklace_count(std::uint64_t n);

// The three per-cycle-type divisor sums whose weighted average is K(n):
// K(n) = (identity_sum + 3*transposition_sum + 2*three_cycle_sum) / 6n.
struct NecklaceComponents {
  BigInt identity_sum;       // sum over d | n of alpha(d) phi(n/d)
  BigInt transposition_sum;  // 2 | n ? sum over d | n/2 of 2^d phi(n/d) : 0
  BigInt three_cycle_sum;    // 3 | n ? sum over d | n/3 of (2^d - (-1)^d) phi(n/d) : 0
};

NecklaceComponents necklace_count_components(std::uint64_t n);

/// Contribution of the reflections: 2^(n/2 - 1) for even n,
/// (2^((n-1)/2) - (-1)^((n-1)/2)) / 3 for odd n.
BigInt reflection_term(std::uint64_t n);

/// Number of non-equivalent colorful n-bead bracelets,
/// K'(n) = (K(n) + R(n)) / 2.
BigInt bracelet_count(std::uint64_t n);

/// Count restricted to exactly three colors: subtracts the single
/// two-color class that exists for even n.
BigInt exact_color_count(std::uint64_t n, ObjectKind kind);

/// Count of classes whose minimal period is exactly n, by Moebius
/// inversion of the divisor sum. Always >= 0.
BigInt exact_period_count(std::uint64_t n, ObjectKind kind);

/// Classical necklace count N(n,c) = (1/n) sum over d | n of phi(d) c^(n/d).
BigInt classical_necklace(std::uint64_t n, std::uint64_t colors);

/// Classical bracelet count N'(n,c) = (N(n,c) + R(n,c)) / 2 with
/// R(n,c) = c^((n+1)/2) for odd n and (1+c)/2 * c^(n/2) for even n.
BigInt classical_bracelet(std::uint64_t n, std::uint64_t colors);

}  // namespace colorful
