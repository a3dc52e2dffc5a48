// numsg command-line front end. Talks to the library only through the C API.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "numsg/numsg.h"

namespace {

enum Exit { kOk = 0, kUsage = 2, kDomain = 3, kIo = 4 };

struct Failure {
  int exit;
  std::string kind;
  std::string message;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

void check(numsg_status status) {
  if (status == NUMSG_OK) return;
  const int exit = status == NUMSG_ERR_IO ? kIo : kDomain;
  throw Failure{exit, numsg_status_name(status), numsg_last_error()};
}

using SemigroupHandle = std::unique_ptr<numsg_semigroup, decltype(&numsg_semigroup_free)>;
using IdealHandle = std::unique_ptr<numsg_ideal, decltype(&numsg_ideal_free)>;
using ReportsHandle = std::unique_ptr<numsg_reports, decltype(&numsg_reports_free)>;

SemigroupHandle make_semigroup(const std::vector<int64_t>& gens) {
  numsg_semigroup* raw = nullptr;
  check(numsg_semigroup_new(gens.data(), gens.size(), &raw));
  return {raw, numsg_semigroup_free};
}

IdealHandle adopt(numsg_ideal* raw) { return {raw, numsg_ideal_free}; }

IdealHandle make_ideal(const numsg_semigroup* s, const std::vector<int64_t>& gens) {
  numsg_ideal* raw = nullptr;
  check(numsg_ideal_new(s, gens.data(), gens.size(), &raw));
  return adopt(raw);
}

std::vector<int64_t> gens_of(const numsg_semigroup* s) {
  std::vector<int64_t> v(numsg_semigroup_gens(s, nullptr, 0));
  numsg_semigroup_gens(s, v.data(), v.size());
  return v;
}

std::vector<int64_t> gens_of(const numsg_ideal* i) {
  std::vector<int64_t> v(numsg_ideal_gens(i, nullptr, 0));
  numsg_ideal_gens(i, v.data(), v.size());
  return v;
}

std::string join(const int64_t* v, size_t n, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join(const std::vector<int64_t>& v, const char* sep = ",") {
  return join(v.data(), v.size(), sep);
}

std::string angle(const std::vector<int64_t>& v) { return "<" + join(v) + ">"; }
std::string paren(const std::vector<int64_t>& v) { return "(" + join(v) + ")"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<int64_t> parse_ints(const std::vector<std::string>& words, const char* what) {
  std::vector<int64_t> out;
  for (const auto& w : words) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size())
      throw Failure{kUsage, "Usage", std::string("invalid integer in ") + what + ": '" + w + "'"};
    out.push_back(v);
  }
  return out;
}

void require_positive(const std::vector<int64_t>& gens) {
  if (gens.empty()) throw Failure{kUsage, "Usage", "no semigroup generators given"};
  for (int64_t g : gens)
    if (g < 1)
      throw Failure{kDomain, "InvalidArgument",
                    "semigroup generators must be positive, got " + std::to_string(g)};
}

void require_ideal(const std::optional<std::vector<int64_t>>& ideal) {
  if (!ideal || ideal->empty())
    throw Failure{kUsage, "Usage", "expected ideal generators after '--'"};
}

// ---- commands --------------------------------------------------------------

void run_analyze(const std::vector<int64_t>& gens, std::ostream& out) {
  require_positive(gens);
  auto s = make_semigroup(gens);
  std::vector<int64_t> ap(numsg_semigroup_apery(s.get(), nullptr, 0));
  numsg_semigroup_apery(s.get(), ap.data(), ap.size());
  out << "semigroup: " << angle(gens_of(s.get())) << '\n'
      << "multiplicity: " << numsg_semigroup_multiplicity(s.get()) << '\n'
      << "frobenius: " << numsg_semigroup_frobenius(s.get()) << '\n'
      << "n: " << numsg_semigroup_n_count(s.get()) << '\n'
      << "symmetric: " << yes_no(numsg_semigroup_is_symmetric(s.get())) << '\n'
      << "apery: {" << join(ap) << "}\n";
}

struct PairView {
  SemigroupHandle s;
  IdealHandle ideal;
  IdealHandle dual;
  IdealHandle sum;
};

PairView build_pair(const std::vector<int64_t>& gens, const std::vector<int64_t>& ideal_gens) {
  require_positive(gens);
  auto s = make_semigroup(gens);
  auto ideal = make_ideal(s.get(), ideal_gens);
  numsg_ideal* d = nullptr;
  check(numsg_ideal_dual(s.get(), ideal.get(), &d));
  auto dual = adopt(d);
  numsg_ideal* k = nullptr;
  check(numsg_ideal_add(ideal.get(), dual.get(), &k));
  return PairView{std::move(s), std::move(ideal), std::move(dual), adopt(k)};
}

void print_pair(const PairView& p, std::ostream& out) {
  out << "semigroup: " << angle(gens_of(p.s.get())) << '\n'
      << "ideal: " << paren(gens_of(p.ideal.get())) << '\n'
      << "dual: " << paren(gens_of(p.dual.get())) << '\n'
      << "sum: " << paren(gens_of(p.sum.get())) << '\n';
}

void run_dual(const std::vector<int64_t>& gens, const std::vector<int64_t>& ideal_gens,
              std::ostream& out) {
  const auto p = build_pair(gens, ideal_gens);
  print_pair(p, out);
  out << "mu(I): " << numsg_ideal_mu(p.ideal.get()) << '\n'
      << "mu(S-I): " << numsg_ideal_mu(p.dual.get()) << '\n'
      << "mu(I+(S-I)): " << numsg_ideal_mu(p.sum.get()) << '\n';
}

void print_check(const numsg_brick_info& c, std::ostream& out) {
  out << "dimensions: " << c.mu_ideal << 'x' << c.mu_dual << '\n'
      << "product: " << c.mu_ideal * c.mu_dual << '\n'
      << "mu(I+(S-I)): " << c.mu_sum << '\n'
      << "brick: " << yes_no(c.is_brick) << '\n'
      << "perfect: " << yes_no(c.is_perfect) << '\n';
}

void run_brick(const std::vector<int64_t>& gens, const std::vector<int64_t>& ideal_gens,
               std::ostream& out) {
  const auto p = build_pair(gens, ideal_gens);
  numsg_brick_info info{};
  check(numsg_brick_check(p.s.get(), p.ideal.get(), &info));
  print_pair(p, out);
  print_check(info, out);
}

void print_classification(const numsg_classification& c, std::ostream& out) {
  out << "class: " << numsg_balance_kind_name(c.kind) << '\n';
  if (c.kind == NUMSG_NOT_BALANCED) {
    out << "reason: " << numsg_balance_failure_name(c.failure) << '\n';
    return;
  }
  const auto& p = c.profile;
  out << "D: " << p.d << '\n'
      << "E: " << p.e << '\n'
      << "q: " << join(p.q, 4, " ") << '\n'
      << "common_sum: " << p.common_sum << '\n'
      << "common_quotient: " << p.common_quotient << '\n'
      << "shift: " << p.shift << '\n';
  if (c.kind != NUMSG_UNITARY) return;
  int64_t gt = 0, gs = 0, ideal[2], dual[2];
  check(numsg_frobenius_t(&p, &gt));
  check(numsg_frobenius_s(&p, &gs));
  check(numsg_canonical_brick(&p, ideal, dual));
  out << "g(T): " << gt << '\n'
      << "g(S): " << gs << '\n'
      << "canonical_brick: I=(" << join(ideal, 2) << ") S-I=(" << join(dual, 2) << ")\n";
}

void run_classify(const std::vector<int64_t>& values, std::ostream& out) {
  numsg_classification c{};
  check(numsg_classify(values.data(), values.size(), &c));
  out << "quadruple: " << join(values, " ") << '\n';
  print_classification(c, out);
}

void run_family(int64_t z_max, std::ostream& out) {
  for (int64_t z = 3; z <= z_max; ++z) {
    int64_t quad[4];
    int found = 0;
    check(numsg_unitary_family(z, quad, &found));
    if (!found) continue;
    numsg_classification c{};
    check(numsg_classify(quad, 4, &c));
    int64_t ideal[2], dual[2];
    check(numsg_canonical_brick(&c.profile, ideal, dual));
    auto s = make_semigroup({quad, quad + 4});
    auto i = make_ideal(s.get(), {ideal, ideal + 2});
    numsg_brick_info info{};
    check(numsg_brick_check(s.get(), i.get(), &info));
    out << "z=" << z << " S=<" << join(quad, 4) << "> I=(" << join(ideal, 2) << ") S-I=("
        << join(dual, 2) << ") class=" << numsg_balance_kind_name(c.kind) << " check="
        << info.mu_ideal << 'x' << info.mu_dual << (info.is_perfect ? " perfect" : "")
        << (info.is_brick ? " brick" : " not-brick") << '\n';
  }
}

void run_lift(const std::vector<int64_t>& gens, const std::vector<int64_t>& ideal_gens,
              std::ostream& out) {
  const auto p = build_pair(gens, ideal_gens);
  int64_t quad[4];
  numsg_semigroup* ls = nullptr;
  numsg_ideal* li = nullptr;
  numsg_brick_info info{};
  check(numsg_lift(p.s.get(), p.ideal.get(), quad, &ls, &li, &info));
  SemigroupHandle lifted(ls, numsg_semigroup_free);
  IdealHandle lifted_ideal(li, numsg_ideal_free);
  numsg_ideal* d = nullptr;
  check(numsg_ideal_dual(lifted.get(), lifted_ideal.get(), &d));
  auto lifted_dual = adopt(d);
  numsg_classification c{};
  check(numsg_classify(quad, 4, &c));
  out << "source: S=" << angle(gens_of(p.s.get())) << " I=" << paren(gens_of(p.ideal.get()))
      << " S-I=" << paren(gens_of(p.dual.get())) << '\n'
      << "quadruple: " << join(quad, 4, " ") << '\n'
      << "lifted: S=" << angle(gens_of(lifted.get())) << " I="
      << paren(gens_of(lifted_ideal.get())) << " S-I=" << paren(gens_of(lifted_dual.get()))
      << '\n';
  print_check(info, out);
  out << "class: " << numsg_balance_kind_name(c.kind) << '\n';
}

void write_human(const numsg_reports* list, std::ostream& out) {
  for (size_t i = 0; i < numsg_reports_count(list); ++i) {
    numsg_report_view r{};
    check(numsg_reports_get(list, i, &r));
    out << "S=<" << join(r.s_gens, r.s_count) << "> I=(" << join(r.i_gens, r.i_count)
        << ") S-I=(" << join(r.dual_gens, r.dual_count) << ") " << r.k << 'x' << r.m
        << (r.perfect ? " perfect" : "") << " brick\n";
  }
}

struct SearchOptions {
  numsg_search_config config{};
  std::string format = "human";
  std::string out_path;
};

void run_search(const SearchOptions& opts, std::ostream& out) {
  numsg_reports* raw = nullptr;
  check(numsg_search(&opts.config, &raw));
  ReportsHandle list(raw, numsg_reports_free);
  const char* path = opts.out_path.empty() ? nullptr : opts.out_path.c_str();
  if (opts.format == "human") {
    if (path) {
      std::ofstream file(path);
      if (!file) throw Failure{kIo, "IoFailure", "cannot open " + opts.out_path};
      write_human(list.get(), file);
      if (!file.flush()) throw Failure{kIo, "IoFailure", "failed writing " + opts.out_path};
    } else {
      write_human(list.get(), out);
    }
  } else {
    out.flush();
    check(numsg_reports_write(list.get(), path,
                              opts.format == "table" ? NUMSG_FORMAT_TABLE : NUMSG_FORMAT_LINE));
  }
  check(numsg_reports_write_summary(list.get(), nullptr));
}

int run(int argc, char** argv) {
  // Everything after the first "--" is the list of ideal generators.
  std::vector<std::string> head;
  std::optional<std::vector<int64_t>> ideal_gens;
  for (int i = 0; i < argc; ++i) {
    if (std::string_view(argv[i]) == "--" && !ideal_gens) {
      ideal_gens = parse_ints({argv + i + 1, argv + argc}, "ideal generators");
      break;
    }
    head.emplace_back(argv[i]);
  }

  CLI::App app{"Numerical semigroups, relative ideals and brick search"};
  app.require_subcommand(1);

  std::vector<std::string> words;
  auto* analyze = app.add_subcommand("analyze", "Minimal generators, g, n, symmetry, Apery set");
  analyze->add_option("gens", words, "semigroup generators")->required();
  auto* dual = app.add_subcommand("dual", "Dual S-I of an ideal: dual <gens...> -- <ideal...>");
  dual->add_option("gens", words, "semigroup generators")->required();
  auto* brick = app.add_subcommand("brick", "Brick check: brick <gens...> -- <ideal...>");
  brick->add_option("gens", words, "semigroup generators")->required();
  auto* classify = app.add_subcommand("classify", "Balanced/unitary classification of four values");
  classify->add_option("values", words, "a1 a2 a3 a4")->required();
  auto* lift = app.add_subcommand("lift", "Lift a 2x2 brick: lift <gens...> -- <ideal...>");
  lift->add_option("gens", words, "semigroup generators")->required();

  int64_t z_max = 0;
  auto* family = app.add_subcommand("family", "Unitary family members with canonical bricks");
  family->add_option("--z-max", z_max, "largest z")->required();

  SearchOptions sopts;
  numsg_search_config_default(&sopts.config);
  int mu_cap = 0;
  auto* search = app.add_subcommand("search", "Brute-force brick search");
  search->add_option("--t-min", sopts.config.t_min, "fewest generators")->required();
  search->add_option("--t-max", sopts.config.t_max, "most generators")->required();
  search->add_option("--gen-max", sopts.config.gen_max, "largest generator")->required();
  search->add_option("--mu-cap", mu_cap, "ideal generator cap (default floor(1+t/2))");
  search->add_flag("--perfect-only", sopts.config.perfect_only, "keep perfect bricks only");
  search->add_option("--workers", sopts.config.workers, "worker threads (0 = all cores)");
  search->add_option("--format", sopts.format, "human, line or table")
      ->check(CLI::IsMember({"human", "line", "table"}));
  search->add_option("--out", sopts.out_path, "write records to PATH");

  std::vector<char*> cargv;
  for (auto& h : head) cargv.push_back(h.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw Failure{kUsage, "Usage", e.what()};
  }

  const bool wants_ideal = dual->parsed() || brick->parsed() || lift->parsed();
  if (ideal_gens && !wants_ideal)
    throw Failure{kUsage, "Usage", "'--' is only valid for dual, brick and lift"};

  std::ostringstream out;
  if (analyze->parsed()) {
    run_analyze(parse_ints(words, "generators"), out);
  } else if (dual->parsed() || brick->parsed() || lift->parsed()) {
    require_ideal(ideal_gens);
    const auto gens = parse_ints(words, "generators");
    if (dual->parsed()) run_dual(gens, *ideal_gens, out);
    if (brick->parsed()) run_brick(gens, *ideal_gens, out);
    if (lift->parsed()) run_lift(gens, *ideal_gens, out);
  } else if (classify->parsed()) {
    run_classify(parse_ints(words, "values"), out);
  } else if (family->parsed()) {
    run_family(z_max, out);
  } else if (search->parsed()) {
    sopts.config.mu_cap = mu_cap;
    std::cout << out.str();
    run_search(sopts, std::cout);
    std::cout.flush();
    return std::cout ? kOk : kIo;
  }
  std::cout << out.str();
  std::cout.flush();
  return std::cout ? kOk : kIo;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "{\"error\": \"" << json_escape(f.kind) << "\", \"message\": \""
              << json_escape(f.message) << "\", \"exit\": " << f.exit << "}\n";
    return f.exit;
  }
}
