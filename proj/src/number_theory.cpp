#include "colorful/number_theory.hpp"

#include "colorful/bigint.hpp"

#include <algorithm>

namespace colorful {
namespace {

// Distinct prime factors by trial division, with multiplicity flag for
// squarefreeness. Good far beyond the index sizes in use here.
struct Factorization {
  std::vector<std::uint64_t> primes;
  bool squarefree = true;
};

Factorization factorize(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    f.primes.push_back(p);
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    if (mult > 1) f.squarefree = false;
  }
  if (n > 1) f.primes.push_back(n);
  return f;
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t phi = n;
  for (std::uint64_t p : factorize(n).primes) {
    phi -= phi / p;
  }
  return phi;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  Factorization f = factorize(n);
  if (!f.squarefree) return 0;
  return (f.primes.size() % 2 == 0) ? 1 : -1;
}

unsigned nu3(std::uint64_t n) {
  require_positive(n, "nu3");
  unsigned e = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++e;
  }
  return e;
}

std::int64_t signed_phi_divisor_sum(std::uint64_t n) {
  require_positive(n, "signed_phi_divisor_sum");
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(n)) {
    std::int64_t term = static_cast<std::int64_t>(euler_phi(n / d));
    sum += (d % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace colorful
