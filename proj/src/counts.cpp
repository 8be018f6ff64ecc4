#include "colorful/counts.hpp"

#include "colorful/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace colorful {
namespace {

// Numerator of the necklace formula before division by 6n.
BigInt necklace_numerator(std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += BigInt(chi(d)) * euler_phi(d) * pow2(n / d);
  }
  return sum;
}

}  // namespace

BigInt alpha(std::uint64_t n) {
  require_positive(n, "alpha");
  return pow2(n) + 2 * alt_sign(n);
}

int chi(std::uint64_t k) {
  require_positive(k, "chi");
  bool in_2z_not_3z = (k % 2 == 0) && (k % 3 != 0);
  return (in_2z_not_3z ? 2 : 1) * static_cast<int>(std::gcd(k, std::uint64_t{6}));
}

BigInt fixed_points(std::uint64_t n, const GroupElement& g) {
  require_positive(n, "fixed_points");
  std::uint64_t shift = g.shift % n;
  if (g.eps == 0) {
    switch (cycle_type(g.sigma)) {
      case CycleType::identity:
        return alpha(std::gcd(shift, n));  // gcd(0, n) = n
      case CycleType::three_cycle: {
        if (n % 3 != 0) return 0;
        std::uint64_t m = n / 3;
        std::uint64_t d = std::gcd(m, shift);
        if ((shift / d) % 3 == 0) return 0;
        return pow2(d) - alt_sign(d);
      }
      case CycleType::transposition: {
        if (n % 2 != 0) return 0;
        std::uint64_t m = n / 2;
        std::uint64_t d = std::gcd(m, shift);
        if ((shift / d) % 2 == 0) return 0;
        return pow2(d);
      }
    }
    throw std::logic_error("bad cycle type");
  }
  // eps = 1: only the parity of the shift matters.
  bool odd_shift = (shift % 2 != 0);
  switch (cycle_type(g.sigma)) {
    case CycleType::identity:
      if (odd_shift || n % 2 != 0) return 0;
      return 3 * pow2(n / 2);
    case CycleType::transposition: {
      std::uint64_t half = odd_shift ? (n / 2 + 1) : ((n + 1) / 2);
      return exact_div(alpha(half), 3, "fixed_points reflection branch");
    }
    case CycleType::three_cycle:
      return 0;
  }
  throw std::logic_error("bad cycle type");
}

BigInt necklace_count(std::uint64_t n) {
  require_positive(n, "necklace_count");
  BigInt sum = necklace_numerator(n);
  BigInt six_n = BigInt(6) * n;
  BigInt quotient = sum / six_n;
  BigInt remainder = sum % six_n;

  // The exact form says sum/6n = K(n) + 1/3^(1+nu3(n)) for odd n and
  // K(n) exactly for even n, so the remainder is pinned: 0 for even n,
  // 2 * n / 3^nu3(n) for odd n. Anything else is a transcription bug.
  BigInt expected_remainder = 0;
  if (n % 2 != 0) {
    std::uint64_t odd_part = n;
    for (unsigned e = nu3(n); e > 0; --e) odd_part /= 3;
    expected_remainder = BigInt(2) * odd_part;
  }
  if (remainder != expected_remainder) {
    throw std::logic_error("necklace_count: floor and exact forms disagree");
  }
  return quotient;
}

NecklaceComponents necklace_count_components(std::uint64_t n) {
  require_positive(n, "necklace_count_components");
  NecklaceComponents out{0, 0, 0};
  for (std::uint64_t d : divisors(n)) {
    out.identity_sum += alpha(d) * euler_phi(n / d);
  }
  if (n % 2 == 0) {
    for (std::uint64_t d : divisors(n / 2)) {
      out.transposition_sum += pow2(d) * euler_phi(n / d);
    }
  }
  if (n % 3 == 0) {
    for (std::uint64_t d : divisors(n / 3)) {
      out.three_cycle_sum += (pow2(d) - alt_sign(d)) * euler_phi(n / d);
    }
  }
  return out;
}

BigInt reflection_term(std::uint64_t n) {
  require_positive(n, "reflection_term");
  if (n % 2 == 0) return pow2(n / 2 - 1);
  std::uint64_t h = (n - 1) / 2;
  return exact_div(pow2(h) - alt_sign(h), 3, "reflection_term");
}

BigInt bracelet_count(std::uint64_t n) {
  require_positive(n, "bracelet_count");
  return exact_div(necklace_count(n) + reflection_term(n), 2, "bracelet_count");
}

BigInt exact_color_count(std::uint64_t n, ObjectKind kind) {
  require_positive(n, "exact_color_count");
  BigInt base = (kind == ObjectKind::necklace) ? necklace_count(n)
                                               : bracelet_count(n);
  return base - (n % 2 == 0 ? 1 : 0);
}

BigInt exact_period_count(std::uint64_t n, ObjectKind kind) {
  require_positive(n, "exact_period_count");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    BigInt term = (kind == ObjectKind::necklace) ? necklace_count(d)
                                                 : bracelet_count(d);
    sum += moebius(n / d) * term;
  }
  if (sum < 0) {
    throw std::logic_error("exact_period_count: negative Moebius sum");
  }
  return sum;
}

BigInt classical_necklace(std::uint64_t n, std::uint64_t colors) {
  require_positive(n, "classical_necklace");
  require_positive(colors, "classical_necklace colors");
  BigInt c = colors;
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += euler_phi(d) * boost::multiprecision::pow(c, static_cast<unsigned>(n / d));
  }
  return exact_div(sum, n, "classical_necklace");
}

BigInt classical_bracelet(std::uint64_t n, std::uint64_t colors) {
  require_positive(n, "classical_bracelet");
  require_positive(colors, "classical_bracelet colors");
  BigInt c = colors;
  BigInt refl;
  if (n % 2 != 0) {
    refl = boost::multiprecision::pow(c, static_cast<unsigned>((n + 1) / 2));
  } else {
    refl = exact_div((1 + c) * boost::multiprecision::pow(c, static_cast<unsigned>(n / 2)),
                     2, "classical_bracelet reflection");
  }
  return exact_div(classical_necklace(n, colors) + refl, 2, "classical_bracelet");
}

}  // namespace colorful
