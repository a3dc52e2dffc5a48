#include "numsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace numsg {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Round-robin relaxation: for every generator, walk each residue cycle it
// induces modulo m starting from the cycle minimum. One pass per generator
// leaves table[r] as the least representative of r in the span so far.
std::vector<Int> build_apery_table(std::span<const Int> gens, Int m) {
  std::vector<Int> table(static_cast<std::size_t>(m), kUnreached);
  table[0] = 0;
  for (Int a : gens) {
    const Int step = a % m;
    if (step == 0) continue;
    const Int cycles = std::gcd(step, m);
    const Int cycle_len = m / cycles;
    for (Int start = 0; start < cycles; ++start) {
      // locate the cycle minimum
      Int best = start;
      Int r = start;
      for (Int i = 0; i < cycle_len; ++i) {
        if (table[r] < table[best]) best = r;
        r = (r + step) % m;
      }
      if (table[best] == kUnreached) continue;
      r = best;
      for (Int i = 1; i < cycle_len; ++i) {
        const Int next = (r + step) % m;
        const Int cand = checked_add(table[r], a);
        if (cand < table[next]) table[next] = cand;
        r = next;
      }
    }
  }
  return table;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const Int> gens) {
  if (gens.empty())
    throw Error(Errc::EmptyInput, "semigroup needs at least one generator");
  std::vector<Int> sorted(gens.begin(), gens.end());
  for (Int a : sorted)
    if (a < 1)
      throw Error(Errc::InvalidArgument,
                  "generators must be positive, got " + std::to_string(a));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Int g = 0;
  for (Int a : sorted) g = std::gcd(g, a);
  if (g != 1)
    throw Error(Errc::NonCoprime,
                "generators have gcd " + std::to_string(g) +
                    "; the complement would be infinite");

  const Int m = sorted.front();
  if (m > kMaxMultiplicity)
    throw Error(Errc::Overflow, "multiplicity " + std::to_string(m) +
                                    " exceeds the supported Apery table size");
  apery_ = build_apery_table(sorted, m);

  // a is redundant iff a - b lies in S for some smaller generator b.
  for (Int a : sorted) {
    bool minimal = true;
    for (Int b : sorted) {
      if (b >= a) break;
      if (contains(a - b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) min_gens_.push_back(a);
  }

  const Int top = *std::max_element(apery_.begin(), apery_.end());
  frobenius_ = top - m;
  n_count_ = 0;
  for (Int w : apery_)
    if (w < frobenius_) n_count_ += (frobenius_ - 1 - w) / m + 1;
}

std::vector<Int> NumericalSemigroup::apery_set() const {
  std::vector<Int> out(apery_.begin(), apery_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool NumericalSemigroup::is_symmetric() const noexcept {
  if (frobenius_ < 0 || frobenius_ % 2 == 0) return false;
  return n_count_ == (frobenius_ + 1) / 2;
}

SemigroupPtr make_semigroup(std::span<const Int> gens) {
  return std::make_shared<const NumericalSemigroup>(gens);
}

SemigroupPtr make_semigroup(std::initializer_list<Int> gens) {
  return make_semigroup(std::span<const Int>(gens.begin(), gens.size()));
}

Int two_generator_frobenius(Int alpha, Int beta) {
  if (alpha < 1 || beta < 1)
    throw Error(Errc::InvalidArgument, "generators must be positive");
  if (std::gcd(alpha, beta) != 1)
    throw Error(Errc::NonCoprime, "generators must be coprime");
  return checked_sub(checked_sub(checked_mul(alpha, beta), alpha), beta);
}

} // namespace numsg
