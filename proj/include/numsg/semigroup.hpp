#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

// A numerical semigroup stored by its minimal generators and its Apery table
// with respect to the multiplicity. Immutable once built, so instances may be
// shared freely between threads.
class NumericalSemigroup {
public:
  // Largest multiplicity for which an Apery table is materialized.
  static constexpr Int kMaxMultiplicity = Int{1} << 26;

  // Throws Error{EmptyInput} for no generators, Error{InvalidArgument} for a
  // generator below 1, Error{NonCoprime} when the gcd is not 1 and
  // Error{Overflow} if a table entry would leave the 64-bit range.
  explicit NumericalSemigroup(std::span<const Int> gens);
  NumericalSemigroup(std::initializer_list<Int> gens)
      : NumericalSemigroup(std::span<const Int>(gens.begin(), gens.size())) {}

  const std::vector<Int>& min_gens() const noexcept { return min_gens_; }
  Int multiplicity() const noexcept { return min_gens_.front(); }
  // -1 when the semigroup is all of N.
  Int frobenius() const noexcept { return frobenius_; }
  // Number of elements strictly below the Frobenius number.
  Int n_count() const noexcept { return n_count_; }
  std::size_t embedding_dimension() const noexcept { return min_gens_.size(); }

  // Entry r is the least element congruent to r modulo the multiplicity.
  std::span<const Int> apery_table() const noexcept { return apery_; }
  std::vector<Int> apery_set() const;

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
  }

  // g odd and n = (g+1)/2. False for N itself.
  bool is_symmetric() const noexcept;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) noexcept {
    return a.min_gens_ == b.min_gens_;
  }

private:
  std::vector<Int> min_gens_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
  Int n_count_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::span<const Int> gens);
SemigroupPtr make_semigroup(std::initializer_list<Int> gens);

// Frobenius number of <alpha, beta> for coprime alpha, beta >= 1.
Int two_generator_frobenius(Int alpha, Int beta);

} // namespace numsg
