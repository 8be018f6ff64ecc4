#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colorful {

// All sequence values are exact integers; 2^n terms overflow machine words
// long before n reaches the ranges the formulas are evaluated on.
using BigInt = boost::multiprecision::cpp_int;

// 2^e as a BigInt.
inline BigInt pow2(std::uint64_t e) { return BigInt(1) << e; }

// (-1)^k.
inline int alt_sign(std::uint64_t k) { return (k % 2 == 0) ? 1 : -1; }

// Division that must be exact. A nonzero remainder means a formula was
// transcribed wrongly, not that the input was bad.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q = num / den;
  if (q * den != num) {
    throw std::logic_error(std::string("inexact division in ") + what);
  }
  return q;
}

inline void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw std::invalid_argument(std::string(what) + " requires n >= 1");
  }
}

}  // namespace colorful
