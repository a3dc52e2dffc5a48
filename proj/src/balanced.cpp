#include "numsg/balanced.hpp"

#include <algorithm>
#include <numeric>

#include "numsg/semigroup.hpp"

namespace numsg {

namespace {

void require_unitary(const BalancedProfile& p) {
  if (!p.unitary())
    throw Error(Errc::NotUnitary,
                "common quotient is " + std::to_string(p.common_quotient) +
                    ", not 1");
}

BalancedProfile make_profile(const std::array<Int, 4>& a) {
  BalancedProfile p;
  p.a = a;
  p.d = std::gcd(a[0], a[3]);
  p.e = std::gcd(a[1], a[2]);
  p.q = {a[0] / p.d, a[1] / p.e, a[2] / p.e, a[3] / p.d};
  p.common_sum = checked_add(a[0], a[3]);
  p.common_quotient = p.common_sum / checked_mul(p.d, p.e);
  p.shift = a[1] - a[0];
  return p;
}

Int formula_t_unchecked(const BalancedProfile& p) {
  const auto& [a1, a2, a3, a4] = p.a;
  const Int q1 = p.q[0];
  const Int head = checked_add(checked_mul(q1 - 2, a1), checked_mul(q1 - 1, a4));
  const Int via_a3 = checked_add(head, checked_mul(p.q[1], a3));
  // q3 a2 = q2 a3 = lcm(a2, a3), so both forms coincide.
  const Int via_a2 = checked_add(head, checked_mul(p.q[2], a2));
  if (via_a2 != via_a3)
    throw Error(Errc::InvalidArgument, "inconsistent balanced profile");
  return via_a3;
}

Int formula_s_unchecked(const BalancedProfile& p) {
  return checked_sub(formula_t_unchecked(p), checked_mul(p.q[0] - 1, p.a[0]));
}

// Collects t_j a_j + t4 a4 (+ t1 a1) for the given ranges.
void push_terms(std::vector<Term>& out, const BalancedProfile& p, int j,
                Int t_lo, Int t_hi, Int t4_lo, Int t4_hi, bool with_a1) {
  for (Int t = t_lo; t <= t_hi; ++t) {
    for (Int t4 = t4_lo; t4 <= t4_hi; ++t4) {
      const Int t1_hi = with_a1 ? t4 - 1 : 0;
      for (Int t1 = 0; t1 <= t1_hi; ++t1) {
        Term term;
        term.coeffs[0] = t1;
        term.coeffs[3] = t4;
        if (j > 0) term.coeffs[static_cast<std::size_t>(j)] = t;
        Int v = checked_add(checked_mul(t1, p.a[0]), checked_mul(t4, p.a[3]));
        if (j > 0) v = checked_add(v, checked_mul(t, p.a[static_cast<std::size_t>(j)]));
        term.value = v;
        out.push_back(term);
      }
    }
  }
}

} // namespace

std::string_view balance_failure_name(BalanceFailure f) noexcept {
  switch (f) {
  case BalanceFailure::NotStrictlyAscending: return "NotStrictlyAscending";
  case BalanceFailure::NotCoprime: return "NotCoprime";
  case BalanceFailure::Divisibility: return "Divisibility";
  case BalanceFailure::UnequalSums: return "UnequalSums";
  case BalanceFailure::NotMinimal: return "NotMinimal";
  }
  return "Unknown";
}

std::string_view kind_name(Classification::Kind k) noexcept {
  switch (k) {
  case Classification::Kind::NotBalanced: return "NotBalanced";
  case Classification::Kind::Balanced: return "Balanced";
  case Classification::Kind::Unitary: return "Unitary";
  }
  return "Unknown";
}

Classification classify(std::span<const Int> gens) {
  if (gens.size() != 4)
    throw Error(Errc::WrongArity, "classification needs exactly four values, got " +
                                      std::to_string(gens.size()));
  std::array<Int, 4> a;
  std::copy(gens.begin(), gens.end(), a.begin());
  for (Int v : a)
    if (v < 1) throw Error(Errc::InvalidArgument, "values must be positive");
  std::sort(a.begin(), a.end());

  Classification c;
  auto reject = [&](BalanceFailure f) {
    c.failure = f;
    return c;
  };
  if (std::adjacent_find(a.begin(), a.end()) != a.end())
    return reject(BalanceFailure::NotStrictlyAscending);
  if (std::gcd(std::gcd(a[0], a[1]), std::gcd(a[2], a[3])) != 1)
    return reject(BalanceFailure::NotCoprime);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (a[j] % a[i] == 0) return reject(BalanceFailure::Divisibility);
  if (checked_add(a[0], a[3]) != checked_add(a[1], a[2]))
    return reject(BalanceFailure::UnequalSums);
  if (NumericalSemigroup(a).embedding_dimension() != 4)
    return reject(BalanceFailure::NotMinimal);

  c.profile = make_profile(a);
  c.kind = c.profile->unitary() ? Classification::Kind::Unitary
                                : Classification::Kind::Balanced;
  return c;
}

AperyPartition apery_partition(const BalancedProfile& p) {
  const Int q1 = p.q[0];
  AperyPartition out;
  push_terms(out.a1, p, 0, 0, 0, 0, q1 - 1, false);
  push_terms(out.a2, p, 1, 1, p.q[2], 0, q1 - 1, false);
  push_terms(out.a3, p, 2, 1, p.q[1] - 1, 0, q1 - 1, false);
  return out;
}

BoundarySets boundary_sets(const BalancedProfile& p) {
  require_unitary(p);
  const Int q1 = p.q[0];
  BoundarySets out;
  push_terms(out.b1, p, 0, 0, 0, 1, q1 - 1, true);
  push_terms(out.b2, p, 1, 1, p.q[2], 1, q1 - 1, true);
  push_terms(out.b3, p, 2, 1, p.q[1] - 1, 1, q1 - 1, true);
  return out;
}

Int boundary_size(const BalancedProfile& p) {
  // (q1 - 1) q1 is even, so divide before scaling by D
  return checked_mul(checked_mul(p.q[0] - 1, p.q[0]) / 2, p.d);
}

Int frobenius_t(const BalancedProfile& p) {
  require_unitary(p);
  return formula_t_unchecked(p);
}

Int frobenius_s(const BalancedProfile& p) {
  require_unitary(p);
  return formula_s_unchecked(p);
}

CanonicalBrick canonical_brick(const BalancedProfile& p) {
  require_unitary(p);
  return CanonicalBrick{{0, p.shift}, {p.a[0], p.a[2]}};
}

std::optional<std::array<Int, 4>> unitary_family(Int z) {
  if (z < 3) return std::nullopt;
  const Int odd = checked_add(checked_mul(2, z), 1);
  if (odd % 5 == 0) return std::nullopt;
  std::array<Int, 4> a{checked_mul(2, odd), checked_mul(5, z),
                       checked_mul(5, checked_add(z, 1)), checked_mul(3, odd)};
  std::sort(a.begin(), a.end());
  return a;
}

FrobeniusProbe probe_frobenius_formulas(const BalancedProfile& p) {
  FrobeniusProbe probe;
  probe.formula_t = formula_t_unchecked(p);
  probe.formula_s = formula_s_unchecked(p);
  const std::array<Int, 3> t{p.a[0], p.a[1], p.a[2]};
  if (std::gcd(std::gcd(t[0], t[1]), t[2]) == 1)
    probe.actual_t = NumericalSemigroup(t).frobenius();
  probe.actual_s = NumericalSemigroup(p.a).frobenius();
  return probe;
}

} // namespace numsg
