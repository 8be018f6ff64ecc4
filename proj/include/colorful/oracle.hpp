#pragma once

#include "colorful/bigint.hpp"
#include "colorful/group.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace colorful {

// Brute-force ground truth at desk scale: enumerate every colorful word,
// realize the group action explicitly, and count orbits and fixed points by
// direct scan. Nothing here trusts the closed forms.

/// Letters 1..3, positions 0..n-1, index arithmetic mod n.
using Word = std::vector<std::uint8_t>;

/// Default enumeration cap; alpha(16) = 65538 words keeps full verification
/// runs fast. Raise per call if you have the patience.
inline constexpr std::uint64_t default_enumeration_cap = 16;

struct CapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// True when no two cyclically adjacent letters are equal (wrap-around pair
/// included, so no word of length 1 qualifies).
bool is_colorful(const Word& w);

/// All colorful words of length n in lexicographic order. Their number is
/// alpha(n). Rejects n = 0; throws CapExceeded above the cap.
std::vector<Word> enumerate_colorful(std::uint64_t n,
                                     std::uint64_t cap = default_enumeration_cap);

/// Acts on a word: (g w)(i) = sigma(w(t^-1(i))), t(i) = (-1)^eps i + shift mod n.
Word act(const GroupElement& g, const Word& w);

/// Smallest d | n such that w repeats with period d.
std::uint64_t minimal_period(const Word& w);

/// Number of orbits of the group action, counted via lexicographically
/// minimal orbit representatives.
BigInt orbit_count(std::uint64_t n, GroupKind kind,
                   std::uint64_t cap = default_enumeration_cap);

/// Number of colorful words fixed by g, by direct scan.
BigInt fixed_point_scan(std::uint64_t n, const GroupElement& g,
                        std::uint64_t cap = default_enumeration_cap);

/// Orbit count restricted to words of minimal period exactly n. The action
/// preserves minimal period, so representatives stay in the restricted set.
BigInt exact_period_scan(std::uint64_t n, GroupKind kind,
                         std::uint64_t cap = default_enumeration_cap);

}  // namespace colorful
