#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "json.hpp"
#include "numsg/brickhunt.hpp"

namespace numsg {

namespace {

constexpr std::string_view kTableHeader = "s_gens;i_gens;dual_gens;k;m;perfect;mult;frob";

void put_list(std::ostream& out, const std::vector<Int>& v, std::string_view sep) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
}

void write_line_record(std::ostream& out, const BrickReport& r) {
  out << "{\"s\": [";
  put_list(out, r.s_gens, ", ");
  out << "], \"i\": [";
  put_list(out, r.i_gens, ", ");
  out << "], \"dual\": [";
  put_list(out, r.dual_gens, ", ");
  out << "], \"k\": " << r.k << ", \"m\": " << r.m
      << ", \"perfect\": " << (r.perfect ? "true" : "false")
      << ", \"mult\": " << r.multiplicity << ", \"frob\": " << r.frobenius << "}\n";
}

void write_table_record(std::ostream& out, const BrickReport& r) {
  put_list(out, r.s_gens, ",");
  out << ';';
  put_list(out, r.i_gens, ",");
  out << ';';
  put_list(out, r.dual_gens, ",");
  out << ';' << r.k << ';' << r.m << ';' << (r.perfect ? "true" : "false") << ';'
      << r.multiplicity << ';' << r.frobenius << '\n';
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::InvalidArgument, "malformed brick record: " + why);
}

Int parse_int(std::string_view text) {
  Int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) malformed("bad integer '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  malformed("bad boolean '" + std::string(text) + "'");
}

BrickReport parse_line_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    BrickReport r;
    r.s_gens = j.at("s").get<std::vector<Int>>();
    r.i_gens = j.at("i").get<std::vector<Int>>();
    r.dual_gens = j.at("dual").get<std::vector<Int>>();
    r.k = j.at("k").get<Int>();
    r.m = j.at("m").get<Int>();
    r.perfect = j.at("perfect").get<bool>();
    r.multiplicity = j.at("mult").get<Int>();
    r.frobenius = j.at("frob").get<Int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

BrickReport parse_table_record(std::string_view line) {
  const auto fields = split(line, ';');
  if (fields.size() != 8) malformed("expected 8 fields");
  auto list = [](std::string_view f) {
    std::vector<Int> v;
    if (!f.empty())
      for (auto part : split(f, ',')) v.push_back(parse_int(part));
    return v;
  };
  BrickReport r;
  r.s_gens = list(fields[0]);
  r.i_gens = list(fields[1]);
  r.dual_gens = list(fields[2]);
  r.k = parse_int(fields[3]);
  r.m = parse_int(fields[4]);
  r.perfect = parse_bool(fields[5]);
  r.multiplicity = parse_int(fields[6]);
  r.frobenius = parse_int(fields[7]);
  return r;
}

} // namespace

void write_reports(std::span<const BrickReport> reports, std::ostream& out,
                   RecordFormat format) {
  if (format == RecordFormat::Table) out << kTableHeader << '\n';
  for (const auto& r : reports) {
    if (format == RecordFormat::Line)
      write_line_record(out, r);
    else
      write_table_record(out, r);
  }
  out.flush();
  if (!out) throw Error(Errc::IoFailure, "failed writing brick records");
}

std::vector<BrickReport> read_reports(std::istream& in, RecordFormat format) {
  std::vector<BrickReport> out;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (format == RecordFormat::Table && !header_seen) {
      if (line != kTableHeader) malformed("missing table header");
      header_seen = true;
      continue;
    }
    out.push_back(format == RecordFormat::Line ? parse_line_record(line)
                                               : parse_table_record(line));
  }
  if (in.bad()) throw Error(Errc::IoFailure, "failed reading brick records");
  return out;
}

SearchSummary summarize(std::span<const BrickReport> reports) {
  SearchSummary s;
  std::set<std::vector<Int>> semigroups;
  for (const auto& r : reports) {
    ++s.bricks;
    semigroups.insert(r.s_gens);
    ++s.by_dimension[{r.k, r.m}];
    ++s.by_multiplicity[r.multiplicity];
    if (r.perfect) {
      ++s.perfect;
      ++s.perfect_by_dimension[{r.k, r.m}];
      if (r.k != 2 || r.m != 2) ++s.perfect_not_2x2;
    }
    if (r.multiplicity == 9 || r.multiplicity == 11 || r.multiplicity == 13)
      ++s.multiplicity_9_11_13;
  }
  s.distinct_semigroups = semigroups.size();
  return s;
}

void write_summary(const SearchSummary& summary, const SearchStats* stats,
                   std::ostream& out) {
  out << "# brick search summary\n";
  if (stats) {
    out << "semigroups_scanned: " << stats->semigroups << '\n'
        << "pairs_checked: " << stats->pairs << '\n'
        << "skipped: " << stats->skipped << '\n';
  }
  out << "bricks: " << summary.bricks << '\n'
      << "distinct_semigroups: " << summary.distinct_semigroups << '\n'
      << "perfect: " << summary.perfect << '\n';
  for (const auto& [dim, count] : summary.by_dimension) {
    const auto it = summary.perfect_by_dimension.find(dim);
    const auto perfect = it == summary.perfect_by_dimension.end() ? 0 : it->second;
    out << "dimension " << dim.first << 'x' << dim.second << ": " << count
        << " (perfect " << perfect << ")\n";
  }
  for (const auto& [mult, count] : summary.by_multiplicity)
    out << "multiplicity " << mult << ": " << count << '\n';
  out << "perfect_not_2x2: " << summary.perfect_not_2x2 << '\n'
      << "multiplicity_9_11_13: " << summary.multiplicity_9_11_13 << '\n';
  out.flush();
  if (!out) throw Error(Errc::IoFailure, "failed writing summary");
}

} // namespace numsg
