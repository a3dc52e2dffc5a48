#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "numsg/numsg.h"

using V = std::vector<int64_t>;

namespace {

numsg_semigroup* semigroup(const V& gens) {
  numsg_semigroup* s = nullptr;
  REQUIRE(numsg_semigroup_new(gens.data(), gens.size(), &s) == NUMSG_OK);
  return s;
}

numsg_ideal* ideal(const numsg_semigroup* s, const V& gens) {
  numsg_ideal* i = nullptr;
  REQUIRE(numsg_ideal_new(s, gens.data(), gens.size(), &i) == NUMSG_OK);
  return i;
}

V gens_of(const numsg_ideal* i) {
  V out(numsg_ideal_gens(i, nullptr, 0));
  numsg_ideal_gens(i, out.data(), out.size());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(numsg_status_name(NUMSG_OK)) == "Ok");
  CHECK(std::string(numsg_status_name(NUMSG_ERR_NON_COPRIME)) == "NonCoprime");
  const V bad{4, 6};
  numsg_semigroup* s = nullptr;
  CHECK(numsg_semigroup_new(bad.data(), bad.size(), &s) == NUMSG_ERR_NON_COPRIME);
  CHECK(s == nullptr);
  CHECK(std::string(numsg_last_error()).find("gcd") != std::string::npos);
  CHECK(numsg_semigroup_new(nullptr, 0, &s) == NUMSG_ERR_EMPTY_INPUT);
  CHECK(numsg_semigroup_new(bad.data(), bad.size(), nullptr) == NUMSG_ERR_NULL_POINTER);
  CHECK(numsg_semigroup_new(nullptr, 2, &s) == NUMSG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("semigroup handle") {
  auto* s = semigroup({10, 11, 13, 17, 19});
  CHECK(numsg_semigroup_multiplicity(s) == 10);
  CHECK(numsg_semigroup_frobenius(s) == 25);
  CHECK(numsg_semigroup_n_count(s) == 11);
  CHECK(numsg_semigroup_is_symmetric(s) == 0);
  CHECK(numsg_semigroup_contains(s, 26) == 1);
  CHECK(numsg_semigroup_contains(s, 25) == 0);
  V ap(numsg_semigroup_apery(s, nullptr, 0));
  CHECK(ap.size() == 10);
  numsg_semigroup_apery(s, ap.data(), ap.size());
  CHECK(ap == V{0, 11, 13, 17, 19, 22, 24, 26, 28, 35});
  int64_t two[2] = {0, 0};
  CHECK(numsg_semigroup_gens(s, two, 2) == 5);
  CHECK(two[0] == 10);
  CHECK(two[1] == 11);
  numsg_semigroup_free(s);
  numsg_semigroup_free(nullptr);
}

TEST_CASE("ideal handles") {
  auto* s = semigroup({10, 11, 13, 17, 19});
  auto* i = ideal(s, {5, 2});
  CHECK(gens_of(i) == V{2, 5});
  CHECK(numsg_ideal_mu(i) == 2);
  numsg_ideal* d = nullptr;
  REQUIRE(numsg_ideal_dual(s, i, &d) == NUMSG_OK);
  CHECK(gens_of(d) == V{8, 15, 17, 22, 24});
  numsg_ideal* sum = nullptr;
  REQUIRE(numsg_ideal_add(i, d, &sum) == NUMSG_OK);
  CHECK(gens_of(sum) == V{10, 13, 17, 19, 22});
  numsg_brick_info info{};
  REQUIRE(numsg_brick_check(s, i, &info) == NUMSG_OK);
  CHECK(info.mu_ideal == 2);
  CHECK(info.mu_dual == 5);
  CHECK(info.mu_sum == 5);
  CHECK(info.is_brick == 0);

  numsg_ideal* max = nullptr;
  REQUIRE(numsg_ideal_maximal(s, &max) == NUMSG_OK);
  CHECK(gens_of(max) == V{10, 11, 13, 17, 19});
  int eq = -1;
  REQUIRE(numsg_ideal_equals(sum, max, &eq) == NUMSG_OK);
  CHECK(eq == 0);
  REQUIRE(numsg_ideal_equals(i, i, &eq) == NUMSG_OK);
  CHECK(eq == 1);

  auto* u = semigroup({14, 15, 20, 21});
  auto* ui = ideal(u, {0, 1});
  numsg_ideal* out = nullptr;
  CHECK(numsg_ideal_dual(s, ui, &out) == NUMSG_ERR_PARENT_MISMATCH);
  CHECK(numsg_ideal_add(i, ui, &out) == NUMSG_ERR_PARENT_MISMATCH);
  CHECK(out == nullptr);
  CHECK(numsg_ideal_new(s, nullptr, 0, &out) == NUMSG_ERR_EMPTY_INPUT);
  CHECK(numsg_ideal_new(nullptr, nullptr, 0, &out) == NUMSG_ERR_NULL_POINTER);
  REQUIRE(numsg_brick_check(u, ui, &info) == NUMSG_OK);
  CHECK(info.is_brick == 1);
  CHECK(info.is_perfect == 1);

  for (auto* h : {i, d, sum, max, ui}) numsg_ideal_free(h);
  numsg_semigroup_free(s);
  numsg_semigroup_free(u);
}

TEST_CASE("classification through the C interface") {
  const V u{21, 20, 15, 14};
  numsg_classification c{};
  REQUIRE(numsg_classify(u.data(), u.size(), &c) == NUMSG_OK);
  CHECK(c.kind == NUMSG_UNITARY);
  CHECK(c.failure == NUMSG_FAIL_NONE);
  CHECK(c.profile.d == 7);
  CHECK(c.profile.e == 5);
  CHECK(c.profile.q[0] == 2);
  CHECK(c.profile.q[3] == 3);
  int64_t g = 0;
  REQUIRE(numsg_frobenius_t(&c.profile, &g) == NUMSG_OK);
  CHECK(g == 81);
  REQUIRE(numsg_frobenius_s(&c.profile, &g) == NUMSG_OK);
  CHECK(g == 67);
  int64_t id[2], du[2];
  REQUIRE(numsg_canonical_brick(&c.profile, id, du) == NUMSG_OK);
  CHECK(id[0] == 0);
  CHECK(id[1] == 1);
  CHECK(du[0] == 14);
  CHECK(du[1] == 20);
  CHECK(std::string(numsg_balance_kind_name(c.kind)) == "Unitary");

  const V b{12, 15, 25, 28};
  REQUIRE(numsg_classify(b.data(), b.size(), &c) == NUMSG_OK);
  CHECK(c.kind == NUMSG_BALANCED);
  CHECK(c.profile.common_quotient == 2);
  CHECK(numsg_frobenius_t(&c.profile, &g) == NUMSG_ERR_NOT_UNITARY);
  CHECK(numsg_canonical_brick(&c.profile, id, du) == NUMSG_ERR_NOT_UNITARY);

  const V n{10, 14, 15, 21};
  REQUIRE(numsg_classify(n.data(), n.size(), &c) == NUMSG_OK);
  CHECK(c.kind == NUMSG_NOT_BALANCED);
  CHECK(c.failure == NUMSG_FAIL_UNEQUAL_SUMS);
  CHECK(c.profile.d == 0);
  CHECK(std::string(numsg_balance_failure_name(c.failure)) == "UnequalSums");

  CHECK(numsg_classify(n.data(), 3, &c) == NUMSG_ERR_WRONG_ARITY);

  int64_t quad[4];
  int found = -1;
  REQUIRE(numsg_unitary_family(5, quad, &found) == NUMSG_OK);
  CHECK(found == 1);
  CHECK(V(quad, quad + 4) == V{22, 25, 30, 33});
  REQUIRE(numsg_unitary_family(7, quad, &found) == NUMSG_OK);
  CHECK(found == 0);
}

TEST_CASE("lift through the C interface") {
  auto* s = semigroup({10, 15, 18, 27});
  auto* i = ideal(s, {0, 2});
  int64_t quad[4];
  numsg_semigroup* lifted = nullptr;
  numsg_ideal* li = nullptr;
  numsg_brick_info check{};
  REQUIRE(numsg_lift(s, i, quad, &lifted, &li, &check) == NUMSG_OK);
  CHECK(V(quad, quad + 4) == V{18, 20, 25, 27});
  CHECK(numsg_semigroup_frobenius(lifted) == numsg_semigroup_frobenius(lifted));
  CHECK(gens_of(li) == V{0, 2});
  CHECK(check.is_perfect == 1);
  REQUIRE(numsg_lift(s, i, quad, nullptr, nullptr, &check) == NUMSG_OK);

  auto* bad = ideal(s, {1, 3});
  CHECK(numsg_lift(s, bad, quad, nullptr, nullptr, &check) == NUMSG_ERR_ZERO_NOT_GENERATOR);
  auto* wide = ideal(s, {0, 1});
  CHECK(numsg_lift(s, wide, quad, nullptr, nullptr, &check) == NUMSG_ERR_NOT_TWO_BY_TWO);

  numsg_semigroup_free(lifted);
  for (auto* h : {i, li, bad, wide}) numsg_ideal_free(h);
  numsg_semigroup_free(s);
}

TEST_CASE("enumeration callbacks") {
  numsg_search_config c;
  numsg_search_config_default(&c);
  CHECK(c.t_min == 2);
  CHECK(c.t_max == 5);
  CHECK(c.gen_max == 50);
  CHECK(c.mu_cap <= 0);
  c.t_max = 2;
  c.gen_max = 4;
  std::vector<V> seen;
  auto collect = [](const int64_t* g, size_t n, void* user) -> int {
    static_cast<std::vector<V>*>(user)->emplace_back(g, g + n);
    return 0;
  };
  REQUIRE(numsg_enumerate_semigroups(&c, collect, &seen) == NUMSG_OK);
  CHECK(seen == std::vector<V>{{2, 3}, {3, 4}});

  seen.clear();
  auto first_only = [](const int64_t* g, size_t n, void* user) -> int {
    static_cast<std::vector<V>*>(user)->emplace_back(g, g + n);
    return 1;
  };
  REQUIRE(numsg_enumerate_semigroups(&c, first_only, &seen) == NUMSG_OK);
  CHECK(seen.size() == 1);

  auto* s = semigroup({10, 15, 18, 27});
  numsg_search_config_default(&c);
  seen.clear();
  REQUIRE(numsg_enumerate_ideals(s, &c, collect, &seen) == NUMSG_OK);
  CHECK(std::find(seen.begin(), seen.end(), V{0, 2}) != seen.end());
  numsg_semigroup_free(s);

  c.t_min = 1;
  CHECK(numsg_enumerate_semigroups(&c, collect, &seen) == NUMSG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("search, reports and files") {
  numsg_search_config c;
  numsg_search_config_default(&c);
  c.t_min = c.t_max = 4;
  c.gen_max = 27;
  numsg_reports* reports = nullptr;
  REQUIRE(numsg_search(&c, &reports) == NUMSG_OK);
  REQUIRE(numsg_reports_count(reports) > 0);
  bool found = false;
  for (size_t k = 0; k < numsg_reports_count(reports); ++k) {
    numsg_report_view v{};
    REQUIRE(numsg_reports_get(reports, k, &v) == NUMSG_OK);
    if (V(v.s_gens, v.s_gens + v.s_count) == V{10, 15, 18, 27} &&
        V(v.i_gens, v.i_gens + v.i_count) == V{0, 2}) {
      found = true;
      CHECK(V(v.dual_gens, v.dual_gens + v.dual_count) == V{18, 25});
      CHECK(v.k == 2);
      CHECK(v.m == 2);
      CHECK(v.perfect == 0);
      CHECK(v.frobenius == 59);
    }
  }
  CHECK(found);
  numsg_report_view v{};
  CHECK(numsg_reports_get(reports, numsg_reports_count(reports), &v) ==
        NUMSG_ERR_INVALID_ARGUMENT);

  const auto dir = std::filesystem::temp_directory_path() / "numsg_capi_test";
  std::filesystem::create_directories(dir);
  for (auto format : {NUMSG_FORMAT_LINE, NUMSG_FORMAT_TABLE}) {
    const auto path = (dir / ("reports" + std::to_string(format))).string();
    REQUIRE(numsg_reports_write(reports, path.c_str(), format) == NUMSG_OK);
    numsg_reports* back = nullptr;
    REQUIRE(numsg_reports_read(path.c_str(), format, &back) == NUMSG_OK);
    REQUIRE(numsg_reports_count(back) == numsg_reports_count(reports));
    const auto copy = (dir / "copy").string();
    REQUIRE(numsg_reports_write(back, copy.c_str(), format) == NUMSG_OK);
    CHECK(slurp(copy) == slurp(path));
    numsg_reports_free(back);
  }
  const auto summary = (dir / "summary").string();
  REQUIRE(numsg_reports_write_summary(reports, summary.c_str()) == NUMSG_OK);
  CHECK(slurp(summary).rfind("# brick search summary\n", 0) == 0);

  numsg_reports* none = nullptr;
  CHECK(numsg_reports_read((dir / "missing").string().c_str(), NUMSG_FORMAT_LINE, &none) ==
        NUMSG_ERR_IO);
  CHECK(numsg_reports_write(reports, (dir / "no/such/dir/x").string().c_str(),
                            NUMSG_FORMAT_LINE) == NUMSG_ERR_IO);
  {
    std::ofstream junk(dir / "junk");
    junk << "not a record\n";
  }
  CHECK(numsg_reports_read((dir / "junk").string().c_str(), NUMSG_FORMAT_LINE, &none) ==
        NUMSG_ERR_INVALID_ARGUMENT);
  numsg_reports_free(reports);
  std::filesystem::remove_all(dir);
}
