#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

// Decomposition of a balanced quadruple a1 < a2 < a3 < a4 with
// a1 + a4 = a2 + a3. D = gcd(a1, a4), E = gcd(a2, a3) and
// a1 = q1 D, a2 = q2 E, a3 = q3 E, a4 = q4 D.
struct BalancedProfile {
  std::array<Int, 4> a{};
  Int d = 0;
  Int e = 0;
  std::array<Int, 4> q{};
  Int common_sum = 0;
  Int common_quotient = 0;
  // a2 - a1, which equals a4 - a3
  Int shift = 0;

  bool unitary() const noexcept { return common_quotient == 1; }
  friend bool operator==(const BalancedProfile&, const BalancedProfile&) = default;
};

// Which requirement a quadruple failed, in the order they are checked.
enum class BalanceFailure {
  NotStrictlyAscending,
  NotCoprime,
  Divisibility,
  UnequalSums,
  NotMinimal,
};

std::string_view balance_failure_name(BalanceFailure f) noexcept;

struct Classification {
  enum class Kind { NotBalanced, Balanced, Unitary };
  Kind kind = Kind::NotBalanced;
  std::optional<BalanceFailure> failure;  // set iff NotBalanced
  std::optional<BalancedProfile> profile; // set iff not NotBalanced
};

std::string_view kind_name(Classification::Kind k) noexcept;

// Order-insensitive. Throws Error{WrongArity} unless exactly four values and
// Error{InvalidArgument} for non-positive values.
Classification classify(std::span<const Int> gens);

// A value together with the coefficients (t1, t2, t3, t4) that produced it.
struct Term {
  std::array<Int, 4> coeffs{};
  Int value = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

struct AperyPartition {
  std::vector<Term> a1; // t4 a4,         0 <= t4 < q1
  std::vector<Term> a2; // t2 a2 + t4 a4, 1 <= t2 <= q3
  std::vector<Term> a3; // t3 a3 + t4 a4, 1 <= t3 < q2
};

// Defined for every balanced profile; only for unitary ones is the union the
// Apery set.
AperyPartition apery_partition(const BalancedProfile& p);

struct BoundarySets {
  std::vector<Term> b1;
  std::vector<Term> b2;
  std::vector<Term> b3;
  std::size_t total() const noexcept { return b1.size() + b2.size() + b3.size(); }
};

// The elements of <a1..a4> \ <a1,a2,a3>, each with its coefficient tuple.
// Throws Error{NotUnitary}.
BoundarySets boundary_sets(const BalancedProfile& p);

// (q1 - 1) q1 D / 2, the size of the boundary sets.
Int boundary_size(const BalancedProfile& p);

// g(<a1,a2,a3>) = (q1-2) a1 + q2 a3 + (q1-1) a4. Throws Error{NotUnitary}.
Int frobenius_t(const BalancedProfile& p);
// g(<a1..a4>) = frobenius_t - (q1-1) a1. Throws Error{NotUnitary}.
Int frobenius_s(const BalancedProfile& p);

struct CanonicalBrick {
  std::array<Int, 2> ideal{}; // (0, n)
  std::array<Int, 2> dual{};  // (a1, a3)
};

// Throws Error{NotUnitary}.
CanonicalBrick canonical_brick(const BalancedProfile& p);

// Sorted {2(2z+1), 5z, 5(z+1), 3(2z+1)} when z >= 3 and 5 does not divide 2z+1.
std::optional<std::array<Int, 4>> unitary_family(Int z);

// Evaluates the Frobenius formulas on any balanced profile, unitary or not,
// next to the values computed from the semigroups themselves.
// actual_t is empty when gcd(a1, a2, a3) > 1.
struct FrobeniusProbe {
  Int formula_t = 0;
  std::optional<Int> actual_t;
  Int formula_s = 0;
  Int actual_s = 0;
  bool matches() const noexcept {
    return actual_t == formula_t && formula_s == actual_s;
  }
};

FrobeniusProbe probe_frobenius_formulas(const BalancedProfile& p);

} // namespace numsg
