#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorful/counts.hpp"
#include "colorful/oracle.hpp"

#include <algorithm>
#include <stdexcept>

using namespace colorful;

TEST_CASE("enumeration basics") {
  CHECK(enumerate_colorful(1).empty());

  std::vector<Word> two = enumerate_colorful(2);
  std::vector<Word> expected = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(two == expected);

  CHECK(enumerate_colorful(5).size() == 30);

  CHECK_THROWS_AS(enumerate_colorful(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_colorful(17), CapExceeded);
  CHECK_THROWS_AS(enumerate_colorful(5, 4), CapExceeded);
  CHECK(enumerate_colorful(5, 5).size() == 30);  // cap is configurable
}

TEST_CASE("enumeration is lexicographic, duplicate-free and colorful") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    std::vector<Word> words = enumerate_colorful(n);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const Word& w : words) REQUIRE(is_colorful(w));
  }
}

TEST_CASE("enumeration size equals alpha") {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    REQUIRE(BigInt(enumerate_colorful(n).size()) == alpha(n));
  }
}

TEST_CASE("acting with the identity or a full rotation changes nothing") {
  for (const Word& w : enumerate_colorful(6)) {
    REQUIRE(act(GroupElement(S3Perm::id, 0, 0, 6), w) == w);
    REQUIRE(act(GroupElement(S3Perm::id, 0, 6, 6), w) == w);
  }
}

TEST_CASE("recolor-and-rotate example") {
  Word w = {1, 2, 3, 1, 2, 3};
  Word image = act(GroupElement(S3Perm::t12, 0, 1, 6), w);
  CHECK(image == Word{3, 2, 1, 3, 2, 1});
}

TEST_CASE("the action satisfies the group laws and stays colorful") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    std::vector<Word> words = enumerate_colorful(n);
    std::vector<GroupElement> group = all_elements(n, GroupKind::dihedral);

    // closure under every single element
    for (const GroupElement& g : group) {
      for (const Word& w : words) {
        if (!is_colorful(act(g, w))) {
          CAPTURE(n);
          REQUIRE(false);
        }
      }
    }

    // compatibility: g (h w) = (g h) w; exhaustive pairs for small n,
    // strided samples once the pair count blows up
    std::size_t g_step = (n <= 5) ? 1 : 5;
    std::size_t h_step = (n <= 5) ? 1 : 7;
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < group.size(); i += g_step) {
      for (std::size_t j = 0; j < group.size(); j += h_step) {
        GroupElement gh = compose(group[i], group[j], n);
        for (const Word& w : words) {
          if (act(group[i], act(group[j], w)) != act(gh, w)) ++mismatches;
        }
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("dihedral relations hold under composition") {
  const std::uint64_t n = 7;
  GroupElement r(S3Perm::id, 1, 0, n);
  GroupElement s(S3Perm::id, 0, 1, n);
  // r s r = s^-1
  GroupElement rsr = compose(compose(r, s, n), r, n);
  CHECK(rsr == GroupElement(S3Perm::id, 0, n - 1, n));
  CHECK(compose(r, r, n) == GroupElement(S3Perm::id, 0, 0, n));
}

TEST_CASE("orbit counts") {
  CHECK(orbit_count(6, GroupKind::rotations) == 4);
  CHECK(orbit_count(9, GroupKind::dihedral) == 8);
  CHECK(orbit_count(1, GroupKind::rotations) == 0);
  CHECK_THROWS_AS(orbit_count(17, GroupKind::rotations), CapExceeded);
}

TEST_CASE("orbit counts agree with the closed forms") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    REQUIRE(orbit_count(n, GroupKind::rotations) == necklace_count(n));
    REQUIRE(orbit_count(n, GroupKind::dihedral) == bracelet_count(n));
  }
}

TEST_CASE("fixed point scans") {
  CHECK(fixed_point_scan(4, GroupElement(S3Perm::id, 0, 2, 4)) == 6);
  CHECK(fixed_point_scan(6, GroupElement(S3Perm::c, 1, 0, 6)) == 0);
  CHECK(fixed_point_scan(2, GroupElement(S3Perm::t12, 0, 1, 2)) == 2);
  CHECK_THROWS_AS(fixed_point_scan(17, GroupElement(S3Perm::id, 0, 0, 17)),
                  CapExceeded);
}

TEST_CASE("scan equals closed form for every element, small n") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (const GroupElement& g : all_elements(n, GroupKind::dihedral)) {
      CAPTURE(n);
      CAPTURE(name_of(g.sigma));
      CAPTURE(int(g.eps));
      CAPTURE(g.shift);
      REQUIRE(fixed_point_scan(n, g) == fixed_points(n, g));
    }
  }
}

TEST_CASE("Burnside consistency of scans and orbit counts") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (GroupKind kind : {GroupKind::rotations, GroupKind::dihedral}) {
      BigInt sum = 0;
      for (const GroupElement& g : all_elements(n, kind)) {
        sum += fixed_point_scan(n, g);
      }
      REQUIRE(sum == BigInt(group_order(n, kind)) * orbit_count(n, kind));
    }
  }
}

TEST_CASE("scans respect the conjugacy reductions") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    for (unsigned eps = 0; eps <= 1; ++eps) {
      for (std::uint64_t shift = 0; shift < n; ++shift) {
        BigInt t12 = fixed_point_scan(n, GroupElement(S3Perm::t12, eps, shift, n));
        BigInt t13 = fixed_point_scan(n, GroupElement(S3Perm::t13, eps, shift, n));
        BigInt t23 = fixed_point_scan(n, GroupElement(S3Perm::t23, eps, shift, n));
        REQUIRE(t12 == t13);
        REQUIRE(t12 == t23);
        BigInt c1 = fixed_point_scan(n, GroupElement(S3Perm::c, eps, shift, n));
        BigInt c2 = fixed_point_scan(n, GroupElement(S3Perm::c2, eps, shift, n));
        REQUIRE(c1 == c2);
      }
    }
    // for reflections only the parity of the shift matters
    for (S3Perm sigma : {S3Perm::id, S3Perm::t12, S3Perm::c}) {
      BigInt even = fixed_point_scan(n, GroupElement(sigma, 1, 0, n));
      BigInt odd = n > 1 ? fixed_point_scan(n, GroupElement(sigma, 1, 1, n)) : even;
      for (std::uint64_t shift = 0; shift < n; ++shift) {
        BigInt value = fixed_point_scan(n, GroupElement(sigma, 1, shift, n));
        REQUIRE(value == (shift % 2 == 0 ? even : odd));
      }
    }
  }
}

TEST_CASE("minimal periods") {
  CHECK(minimal_period(Word{1, 2, 1, 2}) == 2);
  CHECK(minimal_period(Word{1, 2, 3, 1, 2, 3}) == 3);
  CHECK(minimal_period(Word{1, 2, 1, 3}) == 4);
  CHECK(minimal_period(Word{1}) == 1);
}

TEST_CASE("exact-period scans") {
  CHECK(exact_period_scan(2, GroupKind::rotations) == 1);
  CHECK(exact_period_scan(4, GroupKind::rotations) == 1);
  CHECK(exact_period_scan(3, GroupKind::dihedral) == 1);
  CHECK_THROWS_AS(exact_period_scan(17, GroupKind::rotations), CapExceeded);

  for (std::uint64_t n = 1; n <= 12; ++n) {
    REQUIRE(exact_period_scan(n, GroupKind::rotations) ==
            exact_period_count(n, ObjectKind::necklace));
    REQUIRE(exact_period_scan(n, GroupKind::dihedral) ==
            exact_period_count(n, ObjectKind::bracelet));
  }
}
