#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorful/number_theory.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace colorful;

TEST_CASE("divisors of small numbers") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("divisors match a direct scan up to 1000") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::vector<std::uint64_t> scanned;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) scanned.push_back(d);
    }
    REQUIRE(divisors(n) == scanned);
  }
}

TEST_CASE("euler_phi values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  // phi(12) by direct coprimality scan
  std::uint64_t scanned = 0;
  for (std::uint64_t k = 1; k <= 12; ++k) {
    if (std::gcd(k, std::uint64_t{12}) == 1) ++scanned;
  }
  CHECK(scanned == 4);
  CHECK(euler_phi(12) == scanned);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("totient divisor sum gives n") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
    REQUIRE(sum == n);
  }
}

TEST_CASE("euler_phi is multiplicative on coprime pairs") {
  for (std::uint64_t a = 1; a <= 200; a += 3) {
    for (std::uint64_t b = a + 1; b <= 200; b += 7) {
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    }
  }
}

TEST_CASE("moebius values and divisor sum") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::int64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += moebius(d);
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("nu3") {
  CHECK(nu3(7) == 0);
  CHECK(nu3(18) == 2);
  CHECK(nu3(81) == 4);
  CHECK_THROWS_AS(nu3(0), std::invalid_argument);
}

TEST_CASE("signed totient divisor sum matches its closed cases") {
  CHECK(signed_phi_divisor_sum(4) == 0);
  CHECK(signed_phi_divisor_sum(5) == -5);
  CHECK(signed_phi_divisor_sum(1) == -1);
  CHECK_THROWS_AS(signed_phi_divisor_sum(0), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::int64_t expected = (n % 2 == 0) ? 0 : -static_cast<std::int64_t>(n);
    REQUIRE(signed_phi_divisor_sum(n) == expected);
  }
}
