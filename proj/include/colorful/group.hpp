#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace colorful {

// The symmetry groups acting on colorful words: the six color permutations
// of {1,2,3} crossed with the cyclic shifts s (necklaces) or the full
// dihedral group <s,r> with rsr = s^-1 (bracelets).

enum class S3Perm : std::uint8_t { id, t12, t13, t23, c, c2 };

enum class CycleType : std::uint8_t { identity, transposition, three_cycle };

enum class GroupKind : std::uint8_t { rotations, dihedral };

/// Image of a color (1..3) under the permutation.
std::uint8_t apply_color(S3Perm s, std::uint8_t color);

/// Composition (a o b)(x) = a(b(x)).
S3Perm compose(S3Perm a, S3Perm b);

S3Perm inverse(S3Perm s);

CycleType cycle_type(S3Perm s);

std::string_view name_of(S3Perm s);

/// Parses "id", "t12", "t13", "t23", "c", "c2". Throws std::invalid_argument
/// on anything else.
S3Perm parse_s3(std::string_view text);

// A group element (sigma, eps, shift) acts on a word w of length n by
//   (g w)(i) = sigma(w(t^-1(i)))   with   t(i) = (-1)^eps * i + shift  (mod n).
struct GroupElement {
  S3Perm sigma = S3Perm::id;
  std::uint8_t eps = 0;
  std::uint64_t shift = 0;

  GroupElement() = default;

  /// Reduces shift mod n at construction; eps must be 0 or 1, n >= 1.
  GroupElement(S3Perm sigma, unsigned eps, std::uint64_t shift, std::uint64_t n);

  bool operator==(const GroupElement&) const = default;
};

/// Group multiplication for words of length n, following the position-map
/// composition above (so rsr = s^-1 holds).
GroupElement compose(const GroupElement& a, const GroupElement& b, std::uint64_t n);

/// 6n for rotations, 12n for dihedral.
std::uint64_t group_order(std::uint64_t n, GroupKind kind);

/// Every element of the chosen group, for word length n.
std::vector<GroupElement> all_elements(std::uint64_t n, GroupKind kind);

}  // namespace colorful
