#pragma once

// Brute-force reference models. They work straight from the definitions on a
// fixed integer range and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline constexpr Int kLo = -120;
inline constexpr Int kHi = 360;

/// A set of integers given on [kLo, kHi); everything >= kHi is a member.
struct BruteSet {
  std::vector<bool> bits = std::vector<bool>(kHi - kLo, false);

  bool has(Int z) const {
    if (z < kLo) return false;
    if (z >= kHi) return true;
    return bits[static_cast<std::size_t>(z - kLo)];
  }
  void set(Int z) {
    if (z >= kLo && z < kHi) bits[static_cast<std::size_t>(z - kLo)] = true;
  }
  Int min() const {
    for (Int z = kLo; z < kHi; ++z) if (has(z)) return z;
    return kHi;
  }
};

/// Closure of gens under addition, by dynamic programming up to kHi.
inline BruteSet semigroup(const std::vector<Int>& gens) {
  BruteSet s;
  s.set(0);
  for (Int z = 1; z < kHi; ++z) {
    for (Int g : gens) {
      if (z - g >= 0 && s.has(z - g) && z - g < kHi) {
        s.set(z);
        break;
      }
    }
  }
  return s;
}

inline Int frobenius(const BruteSet& h) {
  Int f = -1;
  for (Int z = 0; z < kHi; ++z) if (!h.has(z)) f = z;
  return f;
}

inline std::vector<Int> gaps(const BruteSet& h) {
  std::vector<Int> out;
  for (Int z = 1; z < kHi; ++z) if (!h.has(z)) out.push_back(z);
  return out;
}

/// Quasi-Frobenius numbers straight from the all-elements definition.
inline std::vector<Int> quasi_frobenius(const BruteSet& h) {
  std::vector<Int> out;
  for (Int x : gaps(h)) {
    bool ok = true;
    for (Int y = 1; y < kHi && ok; ++y) {
      if (h.has(y) && !h.has(x + y)) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

inline BruteSet ideal(const BruteSet& h, const std::vector<Int>& gens) {
  BruteSet e;
  for (Int z = kLo; z < kHi; ++z) {
    for (Int g : gens) {
      if (h.has(z - g)) {
        e.set(z);
        break;
      }
    }
  }
  return e;
}

inline BruteSet sum(const BruteSet& a, const BruteSet& b) {
  BruteSet out;
  for (Int z = kLo; z < kHi; ++z) {
    for (Int x = kLo; x <= z - kLo; ++x) {
      if (a.has(x) && b.has(z - x)) {
        out.set(z);
        break;
      }
    }
  }
  return out;
}

/// { z : z + b inside a }, checked for every member of b below kHi.
inline BruteSet colon(const BruteSet& a, const BruteSet& b) {
  BruteSet out;
  for (Int z = kLo; z < kHi; ++z) {
    bool ok = true;
    for (Int y = kLo; y < kHi && ok; ++y) {
      if (b.has(y) && !a.has(z + y)) ok = false;
    }
    if (ok) out.set(z);
  }
  return out;
}

inline bool subset(const BruteSet& a, const BruteSet& b) {
  for (Int z = kLo; z < kHi; ++z) if (a.has(z) && !b.has(z)) return false;
  return true;
}

/// All gap sets of size g whose complement in N is closed under addition.
/// Gaps of a genus-g semigroup lie in [1, 2g - 1].
inline std::vector<std::vector<Int>> gap_sets_of_genus(Int g) {
  std::vector<std::vector<Int>> out;
  if (g == 0) return {{}};
  const Int top = 2 * g - 1;
  std::vector<int> pick(static_cast<std::size_t>(top), 0);
  std::fill(pick.end() - g, pick.end(), 1);
  do {
    std::vector<Int> gap;
    for (Int i = 0; i < top; ++i) if (pick[static_cast<std::size_t>(i)]) gap.push_back(i + 1);
    auto in_h = [&](Int z) { return !std::binary_search(gap.begin(), gap.end(), z); };
    bool closed = true;
    for (Int a = 1; a <= top && closed; ++a) {
      if (!in_h(a)) continue;
      for (Int b = a; a + b <= top; ++b) {
        if (in_h(b) && !in_h(a + b)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(gap);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Random generator sets with gcd 1, entries in [2, max_gen].
inline std::vector<Int> random_generators(std::mt19937& rng, Int max_gen, int max_count) {
  std::uniform_int_distribution<Int> value(2, max_gen);
  std::uniform_int_distribution<int> count(2, max_count);
  while (true) {
    std::vector<Int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d == 1) return gens;
  }
}

}  // namespace oracle
