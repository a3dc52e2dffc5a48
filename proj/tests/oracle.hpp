#pragma once

// Brute-force reference computations for the test suites. Nothing here uses
// Apery tables or the bitset scanner; everything is sieve reachability and
// exhaustive enumeration over explicit windows.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// reach[v] == 1 iff v is a non-negative combination of gens, for v <= bound.
inline std::vector<char> sieve(const std::vector<Int>& gens, Int bound) {
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (Int v = 1; v <= bound; ++v)
    for (Int a : gens)
      if (a <= v && reach[static_cast<std::size_t>(v - a)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
  return reach;
}

// Explicit semigroup: membership table up to a bound past the Frobenius
// number. Requires gcd(gens) = 1.
struct Semigroup {
  std::vector<Int> gens;
  Int bound = 0;
  std::vector<char> reach;
  Int frobenius = -1;

  explicit Semigroup(std::vector<Int> g) : gens(std::move(g)) {
    const Int lo = *std::min_element(gens.begin(), gens.end());
    const Int hi = *std::max_element(gens.begin(), gens.end());
    // every integer >= lo*hi lies in the span when gcd = 1
    bound = 3 * lo * hi + 3 * hi + 64;
    reach = sieve(gens, bound);
    for (Int v = bound; v >= 0; --v)
      if (!reach[static_cast<std::size_t>(v)]) {
        frobenius = v;
        break;
      }
  }

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x > bound) return true;
    return reach[static_cast<std::size_t>(x)] != 0;
  }

  Int multiplicity() const { return *std::min_element(gens.begin(), gens.end()); }

  std::vector<Int> apery() const {
    std::vector<Int> out;
    for (Int s = 0; s <= frobenius + multiplicity(); ++s)
      if (contains(s) && !contains(s - multiplicity())) out.push_back(s);
    return out;
  }

  Int n_count() const {
    Int n = 0;
    for (Int s = 0; s < frobenius; ++s) n += contains(s);
    return n;
  }

  std::vector<Int> min_gens() const {
    std::vector<Int> uniq = gens;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<Int> out;
    for (Int a : uniq) {
      std::vector<Int> others;
      for (Int b : uniq)
        if (b != a) others.push_back(b);
      if (others.empty() || !sieve(others, a)[static_cast<std::size_t>(a)]) out.push_back(a);
    }
    return out;
  }
};

// Elements of the union of cosets z + S inside [lo, hi].
inline std::vector<Int> ideal_elements(const Semigroup& s, const std::vector<Int>& gens,
                                       Int lo, Int hi) {
  std::vector<Int> out;
  for (Int x = lo; x <= hi; ++x)
    for (Int z : gens)
      if (s.contains(x - z)) {
        out.push_back(x);
        break;
      }
  return out;
}

// Minimal generators of an ideal given by a membership predicate that is
// known to hold for every integer above `hi`. An element is a generator iff
// it is not (element) + (positive element of S).
template <class Member>
std::vector<Int> minimal_generators(const Semigroup& s, Member member, Int lo, Int hi) {
  std::vector<Int> out;
  const Int top = hi + s.multiplicity() + 1;
  for (Int z = lo; z <= top; ++z) {
    if (!member(z)) continue;
    bool reducible = false;
    for (Int y = lo; y < z && !reducible; ++y)
      reducible = member(y) && s.contains(z - y);
    if (!reducible) out.push_back(z);
  }
  return out;
}

inline std::vector<Int> minimalize(const Semigroup& s, const std::vector<Int>& gens) {
  const Int lo = *std::min_element(gens.begin(), gens.end());
  const Int hi = *std::max_element(gens.begin(), gens.end()) + s.frobenius + 1;
  auto member = [&](Int x) {
    if (x > hi) return true;
    return std::any_of(gens.begin(), gens.end(), [&](Int z) { return s.contains(x - z); });
  };
  return minimal_generators(s, member, lo, hi);
}

// S - I by testing z + z_i in S over a window wide enough on both sides.
inline std::vector<Int> dual(const Semigroup& s, const std::vector<Int>& gens) {
  const Int lo = -*std::max_element(gens.begin(), gens.end()) - s.multiplicity() - 2;
  const Int hi = s.frobenius - *std::min_element(gens.begin(), gens.end()) + 1;
  auto member = [&](Int z) {
    if (z > hi) return true;
    return std::all_of(gens.begin(), gens.end(), [&](Int zi) { return s.contains(z + zi); });
  };
  return minimal_generators(s, member, lo, hi);
}

inline std::vector<Int> sum(const Semigroup& s, const std::vector<Int>& a,
                            const std::vector<Int>& b) {
  std::vector<Int> sums;
  for (Int x : a)
    for (Int y : b) sums.push_back(x + y);
  return minimalize(s, sums);
}

// Quadruples a1 < a2 < a3 < a4 <= limit with a1 + a4 = a2 + a3 and
// a1 + a4 = gcd(a1, a4) gcd(a2, a3), checked without any classification
// code. Minimality and the divisibility conditions are left to the caller.
inline std::vector<std::array<Int, 4>> unitary_candidates(Int limit) {
  std::vector<std::array<Int, 4>> out;
  for (Int a1 = 2; a1 <= limit; ++a1)
    for (Int a2 = a1 + 1; a2 <= limit; ++a2)
      for (Int a3 = a2 + 1; a3 <= limit; ++a3) {
        const Int a4 = a2 + a3 - a1;
        if (a4 <= a3 || a4 > limit) continue;
        if (a1 + a4 != std::gcd(a1, a4) * std::gcd(a2, a3)) continue;
        if (std::gcd(std::gcd(a1, a2), std::gcd(a3, a4)) != 1) continue;
        out.push_back({a1, a2, a3, a4});
      }
  return out;
}

// Random coprime generator list with values in [lo, hi].
inline std::vector<Int> random_gens(std::mt19937_64& rng, int count, Int lo, Int hi) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  for (;;) {
    std::vector<Int> g;
    for (int i = 0; i < count; ++i) g.push_back(pick(rng));
    Int d = 0;
    for (Int v : g) d = std::gcd(d, v);
    if (d == 1) return g;
  }
}

} // namespace oracle
