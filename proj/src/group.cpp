#include "colorful/group.hpp"

#include "colorful/bigint.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace colorful {
namespace {

// Images of colors 1,2,3 under each permutation, indexed by S3Perm value.
constexpr std::array<std::array<std::uint8_t, 3>, 6> kImages = {{
    {1, 2, 3},  // id
    {2, 1, 3},  // t12
    {3, 2, 1},  // t13
    {1, 3, 2},  // t23
    {2, 3, 1},  // c  = (1,2,3)
    {3, 1, 2},  // c2 = (1,3,2)
}};

constexpr std::array<std::string_view, 6> kNames = {"id", "t12", "t13",
                                                    "t23", "c",  "c2"};

constexpr std::size_t index_of(S3Perm s) { return static_cast<std::size_t>(s); }

S3Perm from_images(const std::array<std::uint8_t, 3>& images) {
  for (std::size_t i = 0; i < kImages.size(); ++i) {
    if (kImages[i] == images) return static_cast<S3Perm>(i);
  }
  throw std::logic_error("not a permutation of {1,2,3}");
}

}  // namespace

std::uint8_t apply_color(S3Perm s, std::uint8_t color) {
  return kImages[index_of(s)][color - 1];
}

S3Perm compose(S3Perm a, S3Perm b) {
  std::array<std::uint8_t, 3> images{};
  for (std::uint8_t x = 1; x <= 3; ++x) {
    images[x - 1] = apply_color(a, apply_color(b, x));
  }
  return from_images(images);
}

S3Perm inverse(S3Perm s) {
  std::array<std::uint8_t, 3> images{};
  for (std::uint8_t x = 1; x <= 3; ++x) {
    images[apply_color(s, x) - 1] = x;
  }
  return from_images(images);
}

CycleType cycle_type(S3Perm s) {
  switch (s) {
    case S3Perm::id:
      return CycleType::identity;
    case S3Perm::t12:
    case S3Perm::t13:
    case S3Perm::t23:
      return CycleType::transposition;
    case S3Perm::c:
    case S3Perm::c2:
      return CycleType::three_cycle;
  }
  throw std::logic_error("bad S3Perm");
}

std::string_view name_of(S3Perm s) { return kNames[index_of(s)]; }

S3Perm parse_s3(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<S3Perm>(i);
  }
  throw std::invalid_argument("unknown permutation name: " + std::string(text));
}

GroupElement::GroupElement(S3Perm sigma, unsigned eps, std::uint64_t shift,
                           std::uint64_t n)
    : sigma(sigma), eps(static_cast<std::uint8_t>(eps)), shift(shift % n) {
  require_positive(n, "GroupElement");
  if (eps > 1) throw std::invalid_argument("eps must be 0 or 1");
}

GroupElement compose(const GroupElement& a, const GroupElement& b,
                     std::uint64_t n) {
  require_positive(n, "compose");
  // Position maps t(i) = (-1)^eps i + shift compose as
  // t_a o t_b : i -> (-1)^(ea+eb) i + ((-1)^ea * shift_b + shift_a).
  std::uint64_t sb = b.shift % n;
  std::uint64_t shift = a.eps ? (a.shift + n - sb) % n : (a.shift + sb) % n;
  return GroupElement(compose(a.sigma, b.sigma), a.eps ^ b.eps, shift, n);
}

std::uint64_t group_order(std::uint64_t n, GroupKind kind) {
  require_positive(n, "group_order");
  return (kind == GroupKind::rotations ? 6 : 12) * n;
}

std::vector<GroupElement> all_elements(std::uint64_t n, GroupKind kind) {
  require_positive(n, "all_elements");
  std::vector<GroupElement> out;
  out.reserve(group_order(n, kind));
  unsigned max_eps = (kind == GroupKind::dihedral) ? 1 : 0;
  for (unsigned eps = 0; eps <= max_eps; ++eps) {
    for (std::size_t s = 0; s < 6; ++s) {
      for (std::uint64_t shift = 0; shift < n; ++shift) {
        out.emplace_back(static_cast<S3Perm>(s), eps, shift, n);
      }
    }
  }
  return out;
}

}  // namespace colorful
