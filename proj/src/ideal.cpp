#include "numsg/ideal.hpp"

#include <algorithm>

namespace numsg {

namespace {

void require_parent(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  if (&s != &ideal.parent() && !(s == ideal.parent()))
    throw Error(Errc::ParentMismatch,
                "relative ideal belongs to a different semigroup");
}

} // namespace

RelativeIdeal::RelativeIdeal(SemigroupPtr parent, std::span<const Int> gens)
    : parent_(std::move(parent)) {
  if (!parent_)
    throw Error(Errc::InvalidArgument, "relative ideal needs a parent semigroup");
  if (gens.empty())
    throw Error(Errc::EmptyInput, "relative ideal needs at least one generator");
  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // z - y in S only for y <= z, so a single ascending pass against the
  // retained prefix suffices.
  for (Int z : sorted) {
    const bool covered = std::any_of(gens_.begin(), gens_.end(), [&](Int y) {
      return parent_->contains(checked_sub(z, y));
    });
    if (!covered) gens_.push_back(z);
  }
}

bool RelativeIdeal::contains(Int x) const noexcept {
  for (Int z : gens_) {
    if (z > x) break;
    if (parent_->contains(x - z)) return true;
  }
  return false;
}

bool same_parent(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
  return a.parent_ptr() == b.parent_ptr() || a.parent() == b.parent();
}

RelativeIdeal dual(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  require_parent(s, ideal);
  const auto& gens = ideal.min_gens();
  const Int lo = checked_sub(0, ideal.min());
  // every z above tail lies in S - I
  const Int tail = checked_sub(s.frobenius(), ideal.min());
  const Int hi = checked_add(tail, s.multiplicity());
  checked_add(checked_add(hi, gens.back()), 1);

  auto member = [&](Int z) {
    if (z < lo) return false;
    if (z > tail) return true;
    return std::all_of(gens.begin(), gens.end(),
                       [&](Int zi) { return s.contains(z + zi); });
  };

  std::vector<Int> out;
  for (Int z = lo; z <= hi; ++z) {
    if (!member(z)) continue;
    const bool reducible =
        std::any_of(s.min_gens().begin(), s.min_gens().end(),
                    [&](Int a) { return z - lo >= a && member(z - a); });
    if (!reducible) out.push_back(z);
  }
  return RelativeIdeal(ideal.parent_ptr(), out);
}

RelativeIdeal add(const RelativeIdeal& lhs, const RelativeIdeal& rhs) {
  if (!same_parent(lhs, rhs))
    throw Error(Errc::ParentMismatch, "cannot add ideals of different semigroups");
  std::vector<Int> sums;
  sums.reserve(lhs.mu() * rhs.mu());
  for (Int a : lhs.min_gens())
    for (Int b : rhs.min_gens()) sums.push_back(checked_add(a, b));
  return RelativeIdeal(lhs.parent_ptr(), sums);
}

bool equals(const RelativeIdeal& lhs, const RelativeIdeal& rhs) {
  if (!same_parent(lhs, rhs))
    throw Error(Errc::ParentMismatch,
                "cannot compare ideals of different semigroups");
  return lhs.min_gens() == rhs.min_gens();
}

RelativeIdeal maximal_ideal(const SemigroupPtr& s) {
  if (!s) throw Error(Errc::InvalidArgument, "null semigroup");
  return RelativeIdeal(s, s->min_gens());
}

BrickAnalysis analyze_pair(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  RelativeIdeal d = dual(s, ideal);
  RelativeIdeal sum = add(ideal, d);
  BrickCheck c;
  c.mu_ideal = ideal.mu();
  c.mu_dual = d.mu();
  c.mu_sum = sum.mu();
  c.is_brick = c.mu_ideal >= 2 && c.mu_ideal * c.mu_dual == c.mu_sum;
  c.is_perfect = c.is_brick && sum.min_gens() == s.min_gens();
  return BrickAnalysis{std::move(d), std::move(sum), c};
}

BrickCheck brick_check(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  return analyze_pair(s, ideal).check;
}

} // namespace numsg
