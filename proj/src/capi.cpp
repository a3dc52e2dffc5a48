#include "numsg/numsg.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "numsg/balanced.hpp"
#include "numsg/brickhunt.hpp"

struct numsg_semigroup {
  numsg::SemigroupPtr ptr;
};

struct numsg_ideal {
  numsg::RelativeIdeal ideal;
};

struct numsg_reports {
  std::vector<numsg::BrickReport> items;
  numsg::SearchStats stats;
  bool has_stats = false;
};

namespace {

using numsg::Errc;
using numsg::Int;

thread_local std::string last_error;

struct StopEnumeration {};

numsg_status to_status(Errc code) {
  switch (code) {
  case Errc::EmptyInput: return NUMSG_ERR_EMPTY_INPUT;
  case Errc::NonCoprime: return NUMSG_ERR_NON_COPRIME;
  case Errc::Overflow: return NUMSG_ERR_OVERFLOW;
  case Errc::ParentMismatch: return NUMSG_ERR_PARENT_MISMATCH;
  case Errc::WrongArity: return NUMSG_ERR_WRONG_ARITY;
  case Errc::NotUnitary: return NUMSG_ERR_NOT_UNITARY;
  case Errc::NotTwoByTwo: return NUMSG_ERR_NOT_TWO_BY_TWO;
  case Errc::ZeroNotGenerator: return NUMSG_ERR_ZERO_NOT_GENERATOR;
  case Errc::InvalidArgument: return NUMSG_ERR_INVALID_ARGUMENT;
  case Errc::IoFailure: return NUMSG_ERR_IO;
  }
  return NUMSG_ERR_INTERNAL;
}

numsg_status fail(numsg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
numsg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NUMSG_OK;
  } catch (const numsg::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NUMSG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NUMSG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NUMSG_ERR_INTERNAL, "unknown failure");
  }
}

size_t copy_out(std::span<const Int> values, int64_t* buf, size_t cap) {
  if (buf) std::copy_n(values.begin(), std::min(cap, values.size()), buf);
  return values.size();
}

std::span<const Int> as_span(const int64_t* values, size_t count) {
  if (!values && count) throw numsg::Error(Errc::InvalidArgument, "null value array");
  return {values, count};
}

numsg::SearchConfig to_config(const numsg_search_config& c) {
  numsg::SearchConfig config;
  config.t_min = c.t_min;
  config.t_max = c.t_max;
  config.gen_max = c.gen_max;
  if (c.mu_cap > 0) config.mu_cap = c.mu_cap;
  config.perfect_only = c.perfect_only != 0;
  config.workers = c.workers;
  return config;
}

numsg_brick_info to_info(const numsg::BrickCheck& c) {
  return numsg_brick_info{c.mu_ideal, c.mu_dual, c.mu_sum, c.is_brick ? 1 : 0,
                          c.is_perfect ? 1 : 0};
}

numsg_balance_failure to_failure(numsg::BalanceFailure f) {
  switch (f) {
  case numsg::BalanceFailure::NotStrictlyAscending: return NUMSG_FAIL_NOT_ASCENDING;
  case numsg::BalanceFailure::NotCoprime: return NUMSG_FAIL_NOT_COPRIME;
  case numsg::BalanceFailure::Divisibility: return NUMSG_FAIL_DIVISIBILITY;
  case numsg::BalanceFailure::UnequalSums: return NUMSG_FAIL_UNEQUAL_SUMS;
  case numsg::BalanceFailure::NotMinimal: return NUMSG_FAIL_NOT_MINIMAL;
  }
  return NUMSG_FAIL_NONE;
}

numsg_profile to_c(const numsg::BalancedProfile& p) {
  numsg_profile out{};
  std::copy(p.a.begin(), p.a.end(), out.a);
  out.d = p.d;
  out.e = p.e;
  std::copy(p.q.begin(), p.q.end(), out.q);
  out.common_sum = p.common_sum;
  out.common_quotient = p.common_quotient;
  out.shift = p.shift;
  return out;
}

numsg::BalancedProfile rederive(const numsg_profile* p) {
  const auto c = numsg::classify(std::span<const Int>(p->a, 4));
  if (!c.profile)
    throw numsg::Error(Errc::InvalidArgument, "profile values are not balanced");
  return *c.profile;
}

template <class Stream>
void open_or_throw(Stream& stream, const char* path) {
  stream.open(path);
  if (!stream) throw numsg::Error(Errc::IoFailure, std::string("cannot open ") + path);
}

} // namespace

#define NUMSG_REQUIRE(ptr)                                                      \
  do {                                                                          \
    if (!(ptr)) return fail(NUMSG_ERR_NULL_POINTER, "null argument: " #ptr);    \
  } while (0)

extern "C" {

NUMSG_API const char* numsg_status_name(numsg_status status) {
  switch (status) {
  case NUMSG_OK: return "Ok";
  case NUMSG_ERR_EMPTY_INPUT: return "EmptyInput";
  case NUMSG_ERR_NON_COPRIME: return "NonCoprime";
  case NUMSG_ERR_OVERFLOW: return "Overflow";
  case NUMSG_ERR_PARENT_MISMATCH: return "ParentMismatch";
  case NUMSG_ERR_WRONG_ARITY: return "WrongArity";
  case NUMSG_ERR_NOT_UNITARY: return "NotUnitary";
  case NUMSG_ERR_NOT_TWO_BY_TWO: return "NotTwoByTwo";
  case NUMSG_ERR_ZERO_NOT_GENERATOR: return "ZeroNotGenerator";
  case NUMSG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  case NUMSG_ERR_IO: return "IoFailure";
  case NUMSG_ERR_NULL_POINTER: return "NullPointer";
  case NUMSG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

NUMSG_API const char* numsg_last_error(void) { return last_error.c_str(); }

// semigroups

NUMSG_API numsg_status numsg_semigroup_new(const int64_t* gens, size_t count,
                                           numsg_semigroup** out) {
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new numsg_semigroup{numsg::make_semigroup(as_span(gens, count))};
  });
}

NUMSG_API void numsg_semigroup_free(numsg_semigroup* s) { delete s; }

NUMSG_API size_t numsg_semigroup_gens(const numsg_semigroup* s, int64_t* buf, size_t cap) {
  return s ? copy_out(s->ptr->min_gens(), buf, cap) : 0;
}

NUMSG_API size_t numsg_semigroup_apery(const numsg_semigroup* s, int64_t* buf, size_t cap) {
  return s ? copy_out(s->ptr->apery_set(), buf, cap) : 0;
}

NUMSG_API int64_t numsg_semigroup_multiplicity(const numsg_semigroup* s) {
  return s ? s->ptr->multiplicity() : 0;
}

NUMSG_API int64_t numsg_semigroup_frobenius(const numsg_semigroup* s) {
  return s ? s->ptr->frobenius() : 0;
}

NUMSG_API int64_t numsg_semigroup_n_count(const numsg_semigroup* s) {
  return s ? s->ptr->n_count() : 0;
}

NUMSG_API int numsg_semigroup_is_symmetric(const numsg_semigroup* s) {
  return s && s->ptr->is_symmetric() ? 1 : 0;
}

NUMSG_API int numsg_semigroup_contains(const numsg_semigroup* s, int64_t x) {
  return s && s->ptr->contains(x) ? 1 : 0;
}

// ideals

NUMSG_API numsg_status numsg_ideal_new(const numsg_semigroup* s, const int64_t* gens,
                                       size_t count, numsg_ideal** out) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new numsg_ideal{numsg::RelativeIdeal(s->ptr, as_span(gens, count))};
  });
}

NUMSG_API void numsg_ideal_free(numsg_ideal* ideal) { delete ideal; }

NUMSG_API size_t numsg_ideal_gens(const numsg_ideal* ideal, int64_t* buf, size_t cap) {
  return ideal ? copy_out(ideal->ideal.min_gens(), buf, cap) : 0;
}

NUMSG_API size_t numsg_ideal_mu(const numsg_ideal* ideal) {
  return ideal ? ideal->ideal.mu() : 0;
}

NUMSG_API numsg_status numsg_ideal_dual(const numsg_semigroup* s, const numsg_ideal* ideal,
                                        numsg_ideal** out) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(ideal);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new numsg_ideal{numsg::dual(*s->ptr, ideal->ideal)}; });
}

NUMSG_API numsg_status numsg_ideal_add(const numsg_ideal* lhs, const numsg_ideal* rhs,
                                       numsg_ideal** out) {
  NUMSG_REQUIRE(lhs);
  NUMSG_REQUIRE(rhs);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new numsg_ideal{numsg::add(lhs->ideal, rhs->ideal)}; });
}

NUMSG_API numsg_status numsg_ideal_equals(const numsg_ideal* lhs, const numsg_ideal* rhs,
                                          int* out) {
  NUMSG_REQUIRE(lhs);
  NUMSG_REQUIRE(rhs);
  NUMSG_REQUIRE(out);
  return guarded([&] { *out = numsg::equals(lhs->ideal, rhs->ideal) ? 1 : 0; });
}

NUMSG_API numsg_status numsg_ideal_maximal(const numsg_semigroup* s, numsg_ideal** out) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new numsg_ideal{numsg::maximal_ideal(s->ptr)}; });
}

NUMSG_API numsg_status numsg_brick_check(const numsg_semigroup* s, const numsg_ideal* ideal,
                                         numsg_brick_info* out) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(ideal);
  NUMSG_REQUIRE(out);
  return guarded([&] { *out = to_info(numsg::brick_check(*s->ptr, ideal->ideal)); });
}

// balanced

NUMSG_API const char* numsg_balance_kind_name(numsg_balance_kind kind) {
  switch (kind) {
  case NUMSG_NOT_BALANCED: return "NotBalanced";
  case NUMSG_BALANCED: return "Balanced";
  case NUMSG_UNITARY: return "Unitary";
  }
  return "Unknown";
}

NUMSG_API const char* numsg_balance_failure_name(numsg_balance_failure failure) {
  switch (failure) {
  case NUMSG_FAIL_NONE: return "None";
  case NUMSG_FAIL_NOT_ASCENDING: return "NotStrictlyAscending";
  case NUMSG_FAIL_NOT_COPRIME: return "NotCoprime";
  case NUMSG_FAIL_DIVISIBILITY: return "Divisibility";
  case NUMSG_FAIL_UNEQUAL_SUMS: return "UnequalSums";
  case NUMSG_FAIL_NOT_MINIMAL: return "NotMinimal";
  }
  return "Unknown";
}

NUMSG_API numsg_status numsg_classify(const int64_t* values, size_t count,
                                      numsg_classification* out) {
  NUMSG_REQUIRE(out);
  return guarded([&] {
    const auto c = numsg::classify(as_span(values, count));
    numsg_classification result{};
    switch (c.kind) {
    case numsg::Classification::Kind::NotBalanced: result.kind = NUMSG_NOT_BALANCED; break;
    case numsg::Classification::Kind::Balanced: result.kind = NUMSG_BALANCED; break;
    case numsg::Classification::Kind::Unitary: result.kind = NUMSG_UNITARY; break;
    }
    result.failure = c.failure ? to_failure(*c.failure) : NUMSG_FAIL_NONE;
    if (c.profile) result.profile = to_c(*c.profile);
    *out = result;
  });
}

NUMSG_API numsg_status numsg_frobenius_t(const numsg_profile* profile, int64_t* out) {
  NUMSG_REQUIRE(profile);
  NUMSG_REQUIRE(out);
  return guarded([&] { *out = numsg::frobenius_t(rederive(profile)); });
}

NUMSG_API numsg_status numsg_frobenius_s(const numsg_profile* profile, int64_t* out) {
  NUMSG_REQUIRE(profile);
  NUMSG_REQUIRE(out);
  return guarded([&] { *out = numsg::frobenius_s(rederive(profile)); });
}

NUMSG_API numsg_status numsg_canonical_brick(const numsg_profile* profile,
                                             int64_t ideal[2], int64_t dual[2]) {
  NUMSG_REQUIRE(profile);
  NUMSG_REQUIRE(ideal);
  NUMSG_REQUIRE(dual);
  return guarded([&] {
    const auto b = numsg::canonical_brick(rederive(profile));
    std::copy(b.ideal.begin(), b.ideal.end(), ideal);
    std::copy(b.dual.begin(), b.dual.end(), dual);
  });
}

NUMSG_API numsg_status numsg_unitary_family(int64_t z, int64_t out[4], int* found) {
  NUMSG_REQUIRE(out);
  NUMSG_REQUIRE(found);
  return guarded([&] {
    const auto quad = numsg::unitary_family(z);
    *found = quad ? 1 : 0;
    if (quad) std::copy(quad->begin(), quad->end(), out);
  });
}

// lift

NUMSG_API numsg_status numsg_lift(const numsg_semigroup* s, const numsg_ideal* ideal,
                                  int64_t quadruple[4], numsg_semigroup** lifted,
                                  numsg_ideal** lifted_ideal, numsg_brick_info* check) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(ideal);
  NUMSG_REQUIRE(quadruple);
  NUMSG_REQUIRE(check);
  if (lifted) *lifted = nullptr;
  if (lifted_ideal) *lifted_ideal = nullptr;
  return guarded([&] {
    auto r = numsg::lift(*s->ptr, ideal->ideal);
    std::copy(r.quadruple.begin(), r.quadruple.end(), quadruple);
    *check = to_info(r.check);
    if (lifted) *lifted = new numsg_semigroup{r.lifted};
    if (lifted_ideal) *lifted_ideal = new numsg_ideal{std::move(r.ideal)};
  });
}

// search

NUMSG_API void numsg_search_config_default(numsg_search_config* config) {
  if (!config) return;
  const numsg::SearchConfig d;
  *config = numsg_search_config{d.t_min, d.t_max, d.gen_max, 0, 0, d.workers};
}

NUMSG_API numsg_status numsg_enumerate_semigroups(const numsg_search_config* config,
                                                  numsg_gens_callback callback, void* user) {
  NUMSG_REQUIRE(config);
  NUMSG_REQUIRE(callback);
  return guarded([&] {
    try {
      numsg::for_each_generator_set(to_config(*config), [&](std::span<const Int> gens) {
        if (callback(gens.data(), gens.size(), user)) throw StopEnumeration{};
      });
    } catch (const StopEnumeration&) {
    }
  });
}

NUMSG_API numsg_status numsg_enumerate_ideals(const numsg_semigroup* s,
                                              const numsg_search_config* config,
                                              numsg_gens_callback callback, void* user) {
  NUMSG_REQUIRE(s);
  NUMSG_REQUIRE(config);
  NUMSG_REQUIRE(callback);
  return guarded([&] {
    const auto cfg = to_config(*config);
    cfg.validate();
    try {
      numsg::for_each_ideal(s->ptr, cfg, [&](const numsg::RelativeIdeal& ideal) {
        const auto& g = ideal.min_gens();
        if (callback(g.data(), g.size(), user)) throw StopEnumeration{};
      });
    } catch (const StopEnumeration&) {
    }
  });
}

NUMSG_API numsg_status numsg_search(const numsg_search_config* config, numsg_reports** out) {
  NUMSG_REQUIRE(config);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto list = std::make_unique<numsg_reports>();
    list->items = numsg::search(to_config(*config), &list->stats);
    list->has_stats = true;
    *out = list.release();
  });
}

NUMSG_API size_t numsg_reports_count(const numsg_reports* reports) {
  return reports ? reports->items.size() : 0;
}

NUMSG_API numsg_status numsg_reports_get(const numsg_reports* reports, size_t index,
                                         numsg_report_view* out) {
  NUMSG_REQUIRE(reports);
  NUMSG_REQUIRE(out);
  if (index >= reports->items.size())
    return fail(NUMSG_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& r = reports->items[index];
  *out = numsg_report_view{r.s_gens.data(), r.s_gens.size(),   r.i_gens.data(),
                           r.i_gens.size(), r.dual_gens.data(), r.dual_gens.size(),
                           r.k,             r.m,                r.perfect ? 1 : 0,
                           r.multiplicity,  r.frobenius};
  last_error.clear();
  return NUMSG_OK;
}

NUMSG_API void numsg_reports_free(numsg_reports* reports) { delete reports; }

NUMSG_API numsg_status numsg_reports_write(const numsg_reports* reports, const char* path,
                                           numsg_format format) {
  NUMSG_REQUIRE(reports);
  return guarded([&] {
    const auto fmt = format == NUMSG_FORMAT_TABLE ? numsg::RecordFormat::Table
                                                  : numsg::RecordFormat::Line;
    if (!path) {
      numsg::write_reports(reports->items, std::cout, fmt);
      return;
    }
    std::ofstream file;
    open_or_throw(file, path);
    numsg::write_reports(reports->items, file, fmt);
  });
}

NUMSG_API numsg_status numsg_reports_write_summary(const numsg_reports* reports,
                                                   const char* path) {
  NUMSG_REQUIRE(reports);
  return guarded([&] {
    const auto summary = numsg::summarize(reports->items);
    const numsg::SearchStats* stats = reports->has_stats ? &reports->stats : nullptr;
    if (!path) {
      numsg::write_summary(summary, stats, std::cerr);
      return;
    }
    std::ofstream file;
    open_or_throw(file, path);
    numsg::write_summary(summary, stats, file);
  });
}

NUMSG_API numsg_status numsg_reports_read(const char* path, numsg_format format,
                                          numsg_reports** out) {
  NUMSG_REQUIRE(path);
  NUMSG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::ifstream file;
    open_or_throw(file, path);
    auto list = std::make_unique<numsg_reports>();
    list->items = numsg::read_reports(
        file, format == NUMSG_FORMAT_TABLE ? numsg::RecordFormat::Table
                                           : numsg::RecordFormat::Line);
    *out = list.release();
  });
}

} // extern "C"
