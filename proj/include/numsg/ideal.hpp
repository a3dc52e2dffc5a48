#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

// A relative ideal (z_1 + S) u ... u (z_k + S), kept as its ascending
// minimal generating set. Offsets may be negative and are never shifted to 0.
class RelativeIdeal {
public:
  // Keeps the minimal subset of gens generating the same union of cosets.
  // Throws Error{EmptyInput} for no generators.
  RelativeIdeal(SemigroupPtr parent, std::span<const Int> gens);
  RelativeIdeal(SemigroupPtr parent, std::initializer_list<Int> gens)
      : RelativeIdeal(std::move(parent),
                      std::span<const Int>(gens.begin(), gens.size())) {}

  const NumericalSemigroup& parent() const noexcept { return *parent_; }
  const SemigroupPtr& parent_ptr() const noexcept { return parent_; }
  const std::vector<Int>& min_gens() const noexcept { return gens_; }
  std::size_t mu() const noexcept { return gens_.size(); }
  Int min() const noexcept { return gens_.front(); }

  bool contains(Int x) const noexcept;

private:
  SemigroupPtr parent_;
  std::vector<Int> gens_;
};

struct BrickCheck {
  std::size_t mu_ideal = 0;
  std::size_t mu_dual = 0;
  std::size_t mu_sum = 0;
  bool is_brick = false;
  bool is_perfect = false;
};

// Everything brick_check computes on the way, for callers that need the
// generators as well as the verdict.
struct BrickAnalysis {
  RelativeIdeal dual;
  RelativeIdeal sum;
  BrickCheck check;
};

// True when both ideals live over the same semigroup.
bool same_parent(const RelativeIdeal& a, const RelativeIdeal& b) noexcept;

// S - I = { z : z + I in S }.
RelativeIdeal dual(const NumericalSemigroup& s, const RelativeIdeal& ideal);
RelativeIdeal add(const RelativeIdeal& lhs, const RelativeIdeal& rhs);
bool equals(const RelativeIdeal& lhs, const RelativeIdeal& rhs);
// S \ {0}, generated by the minimal generators of S.
RelativeIdeal maximal_ideal(const SemigroupPtr& s);

BrickAnalysis analyze_pair(const NumericalSemigroup& s, const RelativeIdeal& ideal);
BrickCheck brick_check(const NumericalSemigroup& s, const RelativeIdeal& ideal);

} // namespace numsg
