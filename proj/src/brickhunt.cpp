#include "numsg/brickhunt.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <iostream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace numsg {

namespace {

constexpr Int kMaxSearchBound = 1'000'000;

std::mutex log_mutex;

void log_skip(const std::string& what) {
  std::lock_guard lock(log_mutex);
  std::clog << "numsg: skipped " << what << '\n';
}

std::string describe(std::span<const Int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void generator_dfs(const SearchConfig& config, std::vector<Int>& prefix,
                   std::vector<std::vector<char>>& reach, Int gcd, Int start,
                   const std::function<void(std::span<const Int>)>& visit) {
  const auto depth = prefix.size();
  const std::vector<char>& current = reach[depth];
  for (Int x = start; x <= config.gen_max; ++x) {
    if (current[static_cast<std::size_t>(x)]) continue; // x already in the span
    const Int g = std::gcd(gcd, x);
    prefix.push_back(x);
    const auto size = static_cast<int>(prefix.size());
    if (size >= config.t_min && g == 1) visit(prefix);
    if (size < config.t_max) {
      std::vector<char>& next = reach[depth + 1];
      next = current;
      for (Int v = x; v <= config.gen_max; ++v)
        if (next[static_cast<std::size_t>(v - x)]) next[static_cast<std::size_t>(v)] = 1;
      generator_dfs(config, prefix, reach, g, x + 1, visit);
    }
    prefix.pop_back();
  }
}

std::vector<Int> admissible_gaps(const NumericalSemigroup& s) {
  std::vector<Int> gaps;
  for (Int u = 1; u <= s.frobenius() - s.multiplicity(); ++u)
    if (!s.contains(u)) gaps.push_back(u);
  return gaps;
}

bool compatible(const NumericalSemigroup& s, std::span<const Int> offsets, Int u) {
  return std::none_of(offsets.begin(), offsets.end(),
                      [&](Int v) { return s.contains(u - v); });
}

} // namespace

void SearchConfig::validate() const {
  if (t_min < 2) throw Error(Errc::InvalidArgument, "t_min must be at least 2");
  if (t_max < t_min) throw Error(Errc::InvalidArgument, "t_max must be >= t_min");
  if (gen_max < 2) throw Error(Errc::InvalidArgument, "gen_max must be at least 2");
  if (gen_max > kMaxSearchBound)
    throw Error(Errc::InvalidArgument, "gen_max above " + std::to_string(kMaxSearchBound));
  if (mu_cap && *mu_cap < 1) throw Error(Errc::InvalidArgument, "mu cap must be positive");
}

int SearchConfig::ideal_cap(std::size_t t) const noexcept {
  return mu_cap.value_or(1 + static_cast<int>(t) / 2);
}

bool report_less(const BrickReport& a, const BrickReport& b) {
  if (a.s_gens != b.s_gens) return a.s_gens < b.s_gens;
  return a.i_gens < b.i_gens;
}

std::optional<BrickReport> make_report(const NumericalSemigroup& s,
                                       const RelativeIdeal& ideal) {
  BrickAnalysis analysis = analyze_pair(s, ideal);
  if (!analysis.check.is_brick || analysis.check.mu_dual < 2) return std::nullopt;
  BrickReport r;
  r.s_gens = s.min_gens();
  r.i_gens = ideal.min_gens();
  r.dual_gens = analysis.dual.min_gens();
  r.k = static_cast<Int>(analysis.check.mu_ideal);
  r.m = static_cast<Int>(analysis.check.mu_dual);
  r.perfect = analysis.check.is_perfect;
  r.multiplicity = s.multiplicity();
  r.frobenius = s.frobenius();
  return r;
}

void for_each_generator_set(const SearchConfig& config,
                            const std::function<void(std::span<const Int>)>& visit) {
  config.validate();
  std::vector<Int> prefix;
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(config.t_max) + 1);
  reach[0].assign(static_cast<std::size_t>(config.gen_max) + 1, 0);
  reach[0][0] = 1;
  generator_dfs(config, prefix, reach, 0, 2, visit);
}

void for_each_semigroup(const SearchConfig& config,
                        const std::function<void(const SemigroupPtr&)>& visit) {
  for_each_generator_set(config, [&](std::span<const Int> gens) {
    visit(make_semigroup(gens));
  });
}

std::vector<SemigroupPtr> enumerate_semigroups(const SearchConfig& config) {
  std::vector<SemigroupPtr> out;
  for_each_semigroup(config, [&](const SemigroupPtr& s) { out.push_back(s); });
  return out;
}

void for_each_ideal(const SemigroupPtr& s, const SearchConfig& config,
                    const std::function<void(const RelativeIdeal&)>& visit) {
  const int cap = config.ideal_cap(s->embedding_dimension());
  if (cap < 2) return;
  const std::vector<Int> gaps = admissible_gaps(*s);
  std::vector<Int> gens{0};
  std::function<void(std::size_t)> descend = [&](std::size_t first) {
    for (std::size_t i = first; i < gaps.size(); ++i) {
      if (!compatible(*s, gens, gaps[i])) continue;
      gens.push_back(gaps[i]);
      visit(RelativeIdeal(s, gens));
      if (static_cast<int>(gens.size()) < cap) descend(i + 1);
      gens.pop_back();
    }
  };
  descend(0);
}

std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s,
                                            const SearchConfig& config) {
  std::vector<RelativeIdeal> out;
  for_each_ideal(s, config, [&](const RelativeIdeal& i) { out.push_back(i); });
  return out;
}

// ---------------------------------------------------------------------------
// BrickScanner

struct BrickScanner::Scratch {
  std::vector<Word> gens;
  std::vector<Int> dual;
  std::vector<Int> candidates;
};

BrickScanner::BrickScanner(SemigroupPtr s) : s_(std::move(s)) {
  if (!s_) throw Error(Errc::InvalidArgument, "null semigroup");
  const Int g = s_->frobenius();
  const Int m = s_->multiplicity();
  gaps_ = admissible_gaps(*s_);
  const Int window = std::max<Int>(g + m + 1, 1);
  words_ = static_cast<std::size_t>((window + 63) / 64);

  auto shifted = [&](Int u) {
    std::vector<Word> bits(words_, 0);
    for (Int z = 0; z < window; ++z)
      if (s_->contains(z + u)) bits[static_cast<std::size_t>(z / 64)] |= Word{1} << (z % 64);
    return bits;
  };
  base_ = shifted(0);
  shifted_.reserve(gaps_.size());
  for (Int u : gaps_) shifted_.push_back(shifted(u));
}

std::optional<BrickReport> BrickScanner::finish(std::span<const Int> offsets,
                                                std::span<const Word> dual_bits,
                                                Scratch& scratch) const {
  // minimal generators of the dual: z in J with z - a not in J for every a
  auto& gens = scratch.gens;
  gens.assign(dual_bits.begin(), dual_bits.end());
  for (Int a : s_->min_gens()) {
    const auto q = static_cast<std::size_t>(a / 64);
    const int r = static_cast<int>(a % 64);
    for (std::size_t w = words_; w-- > q;) {
      Word shifted = dual_bits[w - q] << r;
      if (r != 0 && w > q) shifted |= dual_bits[w - q - 1] >> (64 - r);
      gens[w] &= ~shifted;
    }
  }
  std::size_t mu_dual = 0;
  for (Word w : gens) mu_dual += static_cast<std::size_t>(std::popcount(w));
  if (mu_dual < 2) return std::nullopt;

  auto& dual = scratch.dual;
  dual.clear();
  for (std::size_t w = 0; w < words_; ++w)
    for (Word bits = gens[w]; bits; bits &= bits - 1)
      dual.push_back(static_cast<Int>(w * 64) + std::countr_zero(bits));

  // I + (S - I) has k*m minimal generators iff the k*m sums are distinct and
  // none differs from another by an element of S.
  auto& cand = scratch.candidates;
  cand.clear();
  for (Int j : dual) cand.push_back(j);
  for (Int u : offsets)
    for (Int j : dual) cand.push_back(u + j);
  std::sort(cand.begin(), cand.end());
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (s_->contains(cand[j] - cand[i])) return std::nullopt;

  BrickReport r;
  r.s_gens = s_->min_gens();
  r.i_gens.reserve(offsets.size() + 1);
  r.i_gens.push_back(0);
  r.i_gens.insert(r.i_gens.end(), offsets.begin(), offsets.end());
  r.dual_gens = dual;
  r.k = static_cast<Int>(r.i_gens.size());
  r.m = static_cast<Int>(dual.size());
  r.perfect = cand == s_->min_gens();
  r.multiplicity = s_->multiplicity();
  r.frobenius = s_->frobenius();
  return r;
}

std::optional<BrickReport> BrickScanner::scan(std::span<const Int> offsets) const {
  std::vector<Word> dual = base_;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const auto it = std::lower_bound(gaps_.begin(), gaps_.end(), offsets[i]);
    if (it == gaps_.end() || *it != offsets[i])
      throw Error(Errc::InvalidArgument,
                  "offset " + std::to_string(offsets[i]) + " is not an admissible gap");
    if (!compatible(*s_, offsets.first(i), offsets[i]))
      throw Error(Errc::InvalidArgument, "ideal generators are not minimal");
    const auto& sh = shifted_[static_cast<std::size_t>(it - gaps_.begin())];
    for (std::size_t w = 0; w < words_; ++w) dual[w] &= sh[w];
  }
  Scratch scratch;
  return finish(offsets, dual, scratch);
}

void BrickScanner::descend(std::size_t first_gap, int remaining, bool perfect_only,
                           std::vector<Int>& offsets,
                           std::vector<std::vector<Word>>& stack, Scratch& scratch,
                           std::uint64_t& count,
                           const std::function<void(BrickReport&&)>& hit) const {
  const std::size_t depth = offsets.size();
  const auto& parent = stack[depth];
  auto& child = stack[depth + 1];
  for (std::size_t i = first_gap; i < gaps_.size(); ++i) {
    const Int u = gaps_[i];
    if (!compatible(*s_, offsets, u)) continue;
    const auto& sh = shifted_[i];
    for (std::size_t w = 0; w < words_; ++w) child[w] = parent[w] & sh[w];
    offsets.push_back(u);
    ++count;
    if (auto report = finish(offsets, child, scratch)) {
      if (!perfect_only || report->perfect) hit(std::move(*report));
    }
    if (remaining > 1)
      descend(i + 1, remaining - 1, perfect_only, offsets, stack, scratch, count, hit);
    offsets.pop_back();
  }
}

std::uint64_t BrickScanner::scan_all(int cap, bool perfect_only,
                                     const std::function<void(BrickReport&&)>& hit) const {
  if (cap < 2) return 0;
  std::vector<std::vector<Word>> stack(static_cast<std::size_t>(cap),
                                       std::vector<Word>(words_, 0));
  stack[0] = base_;
  std::vector<Int> offsets;
  Scratch scratch;
  std::uint64_t count = 0;
  descend(0, cap - 1, perfect_only, offsets, stack, scratch, count, hit);
  return count;
}

// ---------------------------------------------------------------------------
// search

std::vector<BrickReport> search(const SearchConfig& config, SearchStats* stats) {
  config.validate();
  std::vector<std::vector<Int>> sets;
  for_each_generator_set(config, [&](std::span<const Int> gens) {
    sets.emplace_back(gens.begin(), gens.end());
  });

  unsigned workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(sets.size(), 1)));

  struct Partial {
    std::vector<BrickReport> reports;
    SearchStats stats;
    std::exception_ptr error;
  };
  std::vector<Partial> parts(workers);
  std::atomic<std::size_t> next{0};

  auto work = [&](Partial& part) {
    try {
      for (;;) {
        const std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
        if (index >= sets.size()) break;
        const auto& gens = sets[index];
        SemigroupPtr s;
        try {
          s = make_semigroup(gens);
        } catch (const Error& e) {
          if (e.code() != Errc::Overflow) throw;
          log_skip("semigroup " + describe(gens) + ": " + e.what());
          ++part.stats.skipped;
          continue;
        }
        ++part.stats.semigroups;
        const BrickScanner scanner(s);
        const int cap = config.ideal_cap(s->embedding_dimension());
        part.stats.pairs += scanner.scan_all(cap, config.perfect_only, [&](BrickReport&& r) {
          try {
            // re-derive through the ideal algebra before accepting the hit
            auto check = make_report(*s, RelativeIdeal(s, r.i_gens));
            if (!check || *check != r)
              throw std::logic_error("scanner and ideal algebra disagree on " +
                                     describe(r.s_gens) + describe(r.i_gens));
          } catch (const Error& e) {
            if (e.code() != Errc::Overflow) throw;
            log_skip("pair " + describe(r.s_gens) + describe(r.i_gens) + ": " + e.what());
            ++part.stats.skipped;
            return;
          }
          part.reports.push_back(std::move(r));
        });
      }
    } catch (...) {
      part.error = std::current_exception();
      next.store(sets.size());
    }
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, std::ref(parts[t]));
    work(parts[0]);
  }

  std::vector<BrickReport> out;
  SearchStats total;
  for (auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    total.semigroups += part.stats.semigroups;
    total.pairs += part.stats.pairs;
    total.skipped += part.stats.skipped;
    std::move(part.reports.begin(), part.reports.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(), report_less);
  if (stats) *stats = total;
  return out;
}

// ---------------------------------------------------------------------------
// lift

LiftResult lift(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  if (ideal.min() != 0)
    throw Error(Errc::ZeroNotGenerator, "smallest ideal generator must be 0");
  const BrickAnalysis analysis = analyze_pair(s, ideal);
  const BrickCheck& c = analysis.check;
  if (!c.is_brick || c.mu_ideal != 2 || c.mu_dual != 2)
    throw Error(Errc::NotTwoByTwo, "pair is not a 2x2 brick");
  const Int n = ideal.min_gens()[1];
  const Int a1 = analysis.dual.min_gens()[0];
  const Int a3 = analysis.dual.min_gens()[1];
  const std::array<Int, 4> quad{a1, checked_add(a1, n), a3, checked_add(a3, n)};
  SemigroupPtr lifted = make_semigroup(quad);
  RelativeIdeal lifted_ideal(lifted, {0, n});
  const BrickCheck check = brick_check(*lifted, lifted_ideal);
  return LiftResult{quad, std::move(lifted), std::move(lifted_ideal), check};
}

} // namespace numsg
