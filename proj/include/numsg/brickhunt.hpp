#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "numsg/ideal.hpp"

namespace numsg {

// Bounds of a brute-force brick search. Semigroups have between t_min and
// t_max minimal generators, each in [2, gen_max]; ideals are (0, u_1, ...)
// with 0 < u_j <= g(S) - m(S) and at most ideal_cap(t) generators.
struct SearchConfig {
  int t_min = 2;
  int t_max = 5;
  Int gen_max = 50;
  // Overrides the floor(1 + t/2) rule when set.
  std::optional<int> mu_cap;
  bool perfect_only = false;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;

  // Throws Error{InvalidArgument}.
  void validate() const;
  int ideal_cap(std::size_t t) const noexcept;
};

struct BrickReport {
  std::vector<Int> s_gens;
  std::vector<Int> i_gens;
  std::vector<Int> dual_gens;
  Int k = 0;
  Int m = 0;
  bool perfect = false;
  Int multiplicity = 0;
  Int frobenius = 0;

  friend bool operator==(const BrickReport&, const BrickReport&) = default;
};

// Canonical order: by semigroup generators, then ideal generators.
bool report_less(const BrickReport& a, const BrickReport& b);

// Builds the report for (S, I) if the pair is a brick with both sides
// non-principal.
std::optional<BrickReport> make_report(const NumericalSemigroup& s,
                                       const RelativeIdeal& ideal);

// Minimal generating sets in lexicographic order, each exactly once.
void for_each_generator_set(const SearchConfig& config,
                            const std::function<void(std::span<const Int>)>& visit);
void for_each_semigroup(const SearchConfig& config,
                        const std::function<void(const SemigroupPtr&)>& visit);
std::vector<SemigroupPtr> enumerate_semigroups(const SearchConfig& config);

// Ideals (0, u_1, ...) of S already in minimal form, ascending
// lexicographically. Empty when g(S) < m(S).
void for_each_ideal(const SemigroupPtr& s, const SearchConfig& config,
                    const std::function<void(const RelativeIdeal&)>& visit);
std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s,
                                            const SearchConfig& config);

// Word-parallel brick test for ideals of S containing 0. Membership of S and
// of its shifts by every gap are precomputed once, so checking one ideal
// costs a few bitset ANDs plus a pairwise test on at most k*m candidates.
class BrickScanner {
public:
  explicit BrickScanner(SemigroupPtr s);

  const NumericalSemigroup& semigroup() const noexcept { return *s_; }

  // offsets: ascending positive gaps u_j forming the ideal (0, offsets...);
  // pairwise differences must avoid S. Returns a report iff brick.
  std::optional<BrickReport> scan(std::span<const Int> offsets) const;

  // Runs scan over every ideal for_each_ideal would produce with the given
  // generator cap, reusing partial duals between ideals sharing a prefix.
  // Returns the number of ideals examined.
  std::uint64_t scan_all(int cap, bool perfect_only,
                         const std::function<void(BrickReport&&)>& hit) const;

private:
  using Word = std::uint64_t;
  struct Scratch;

  std::optional<BrickReport> finish(std::span<const Int> offsets,
                                    std::span<const Word> dual_bits,
                                    Scratch& scratch) const;
  void descend(std::size_t first_gap, int remaining, bool perfect_only,
               std::vector<Int>& offsets, std::vector<std::vector<Word>>& stack,
               Scratch& scratch, std::uint64_t& count,
               const std::function<void(BrickReport&&)>& hit) const;

  SemigroupPtr s_;
  std::vector<Int> gaps_; // gaps in (0, g - m]
  std::size_t words_ = 0; // window [0, g + m]
  std::vector<Word> base_;                // S on the window
  std::vector<std::vector<Word>> shifted_; // S shifted by each gap
};

struct SearchStats {
  std::uint64_t semigroups = 0;
  std::uint64_t pairs = 0;
  std::uint64_t skipped = 0;
};

// Reports sorted by report_less; identical for any worker count.
std::vector<BrickReport> search(const SearchConfig& config,
                                SearchStats* stats = nullptr);

struct LiftResult {
  std::array<Int, 4> quadruple{}; // a1, a1+n, a3, a3+n
  SemigroupPtr lifted;
  RelativeIdeal ideal; // (0, n) over the lifted semigroup
  BrickCheck check;
};

// Requires a 2x2 brick (S, (0, n)) with S - I = (a1, a3). Throws
// Error{ZeroNotGenerator}, Error{NotTwoByTwo}, or Error{NonCoprime} when the
// lifted generators share a factor.
LiftResult lift(const NumericalSemigroup& s, const RelativeIdeal& ideal);

enum class RecordFormat { Line, Table };

// Throws Error{IoFailure} when the stream goes bad.
void write_reports(std::span<const BrickReport> reports, std::ostream& out,
                   RecordFormat format);
// Throws Error{InvalidArgument} for malformed records.
std::vector<BrickReport> read_reports(std::istream& in, RecordFormat format);

struct SearchSummary {
  std::uint64_t bricks = 0;
  std::uint64_t distinct_semigroups = 0;
  std::uint64_t perfect = 0;
  std::map<std::pair<Int, Int>, std::uint64_t> by_dimension;
  std::map<std::pair<Int, Int>, std::uint64_t> perfect_by_dimension;
  std::map<Int, std::uint64_t> by_multiplicity;
  std::uint64_t perfect_not_2x2 = 0;
  std::uint64_t multiplicity_9_11_13 = 0;
};

SearchSummary summarize(std::span<const BrickReport> reports);
void write_summary(const SearchSummary& summary, const SearchStats* stats,
                   std::ostream& out);

} // namespace numsg
