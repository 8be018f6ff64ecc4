#include "colorful/oracle.hpp"

#include <algorithm>
#include <string>

namespace colorful {
namespace {

void check_cap(std::uint64_t n, std::uint64_t cap, const char* what) {
  require_positive(n, what);
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
}

// Lexicographic backtracking over letters 1..3; the adjacency constraint
// prunes as we go, the wrap-around pair is checked when the word closes.
void extend(Word& w, std::uint64_t n, std::vector<Word>& out) {
  if (w.size() == n) {
    if (w.back() != w.front()) out.push_back(w);
    return;
  }
  for (std::uint8_t letter = 1; letter <= 3; ++letter) {
    if (letter == w.back()) continue;
    w.push_back(letter);
    extend(w, n, out);
    w.pop_back();
  }
}

// True when no group image of w precedes it lexicographically, i.e. w is
// the canonical representative of its orbit. Images are compared in place,
// letter by letter, bailing out at the first difference.
bool is_orbit_minimal(const Word& w, const std::vector<GroupElement>& group) {
  std::uint64_t n = w.size();
  for (const GroupElement& g : group) {
    std::uint64_t shift = g.shift % n;
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t j = (i + n - shift) % n;
      if (g.eps) j = (n - j) % n;
      std::uint8_t image = apply_color(g.sigma, w[j]);
      if (image != w[i]) {
        if (image < w[i]) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

bool is_colorful(const Word& w) {
  std::uint64_t n = w.size();
  if (n == 0) return false;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (w[i] < 1 || w[i] > 3) return false;
    if (w[i] == w[(i + 1) % n]) return false;
  }
  return true;
}

std::vector<Word> enumerate_colorful(std::uint64_t n, std::uint64_t cap) {
  check_cap(n, cap, "enumerate_colorful");
  std::vector<Word> out;
  if (n == 1) return out;  // w(0) != w(0) is impossible
  Word w;
  w.reserve(n);
  for (std::uint8_t first = 1; first <= 3; ++first) {
    w.push_back(first);
    extend(w, n, out);
    w.pop_back();
  }
  return out;
}

Word act(const GroupElement& g, const Word& w) {
  std::uint64_t n = w.size();
  std::uint64_t shift = g.shift % n;
  Word out(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    // t^-1(i) = (-1)^eps * (i - shift) mod n
    std::uint64_t j = (i + n - shift) % n;
    if (g.eps) j = (n - j) % n;
    out[i] = apply_color(g.sigma, w[j]);
  }
  return out;
}

std::uint64_t minimal_period(const Word& w) {
  std::uint64_t n = w.size();
  require_positive(n, "minimal_period");
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t i = 0; i + d < n && periodic; ++i) {
      periodic = (w[i] == w[i + d]);
    }
    if (periodic) return d;
  }
  return n;
}

BigInt orbit_count(std::uint64_t n, GroupKind kind, std::uint64_t cap) {
  check_cap(n, cap, "orbit_count");
  std::vector<GroupElement> group = all_elements(n, kind);
  std::uint64_t orbits = 0;
  for (const Word& w : enumerate_colorful(n, cap)) {
    // Each orbit is counted once, at its lexicographically minimal member.
    if (is_orbit_minimal(w, group)) ++orbits;
  }
  return orbits;
}

BigInt fixed_point_scan(std::uint64_t n, const GroupElement& g,
                        std::uint64_t cap) {
  check_cap(n, cap, "fixed_point_scan");
  std::uint64_t shift = g.shift % n;
  std::uint64_t fixed = 0;
  for (const Word& w : enumerate_colorful(n, cap)) {
    bool invariant = true;
    for (std::uint64_t i = 0; i < n && invariant; ++i) {
      std::uint64_t j = (i + n - shift) % n;
      if (g.eps) j = (n - j) % n;
      invariant = (apply_color(g.sigma, w[j]) == w[i]);
    }
    if (invariant) ++fixed;
  }
  return fixed;
}

BigInt exact_period_scan(std::uint64_t n, GroupKind kind, std::uint64_t cap) {
  check_cap(n, cap, "exact_period_scan");
  std::vector<GroupElement> group = all_elements(n, kind);
  std::uint64_t orbits = 0;
  // The action preserves minimal period, so the orbit minimum of an
  // exact-period word is again an exact-period word.
  for (const Word& w : enumerate_colorful(n, cap)) {
    if (minimal_period(w) != n) continue;
    if (is_orbit_minimal(w, group)) ++orbits;
  }
  return orbits;
}

}  // namespace colorful
