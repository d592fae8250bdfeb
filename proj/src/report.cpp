#include "bachet/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bachet/error.hpp"

namespace bachet {

namespace {


const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h = {"p", "class", "a_rep", "N", "b", "t", "n", "m", "order3"};
    for (ClaimId id : kAllClaims) h.emplace_back(to_string(id));
    return h;
  }();
  return header;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename Int>
Int parse_int(const std::string& s, const char* column) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<Int>(v);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("bad integer in column ") + column + ": '" + s + "'");
  }
}

ResidueClass parse_class(std::string_view s) {
  if (auto c = residue_class_from_string(s)) return *c;
  throw InvalidArgument("bad residue class '" + std::string(s) + "'");
}

Verdict parse_verdict(std::string_view s) {
  if (auto v = verdict_from_string(s)) return *v;
  throw InvalidArgument("bad verdict '" + std::string(s) + "'");
}

nlohmann::ordered_json to_json(const ClassReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["class"] = to_string(r.residue_class);
  j["a_rep"] = r.a_rep;
  j["N"] = r.order;
  j["b"] = r.trace;
  j["t"] = r.abs_trace;
  j["n"] = r.n;
  j["m"] = r.m;
  j["order3"] = r.order3;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (ClaimId id : kAllClaims) {
    const auto it = r.verdicts.find(id);
    verdicts[std::string(to_string(id))] =
        std::string(to_string(it == r.verdicts.end() ? Verdict::na : it->second));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

std::string signed_trace(std::int64_t b) { return b > 0 ? "+" + std::to_string(b) : std::to_string(b); }

}  // namespace

std::optional<OutputFormat> output_format_from_string(std::string_view s) noexcept {
  if (s == "table") return OutputFormat::table;
  if (s == "csv") return OutputFormat::csv;
  if (s == "jsonl") return OutputFormat::jsonl;
  return std::nullopt;
}

void write_csv(std::ostream& os, const std::vector<ClassReport>& rows) {
  const auto& header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const ClassReport& r : rows) {
    os << r.p << ',' << to_string(r.residue_class) << ',' << r.a_rep << ',' << r.order << ','
       << r.trace << ',' << r.abs_trace << ',' << r.n << ',' << r.m << ',' << r.order3;
    for (ClaimId id : kAllClaims) {
      const auto it = r.verdicts.find(id);
      os << ',' << to_string(it == r.verdicts.end() ? Verdict::na : it->second);
    }
    os << '\n';
  }
}

void write_jsonl(std::ostream& os, const std::vector<ClassReport>& rows) {
  for (const ClassReport& r : rows) os << to_json(r).dump() << '\n';
}

void write_table(std::ostream& os, const std::vector<ClassReport>& rows) {
  os << std::left << std::setw(7) << "p" << std::setw(5) << "cls" << std::setw(6) << "a"
     << std::setw(8) << "N" << std::setw(7) << "b" << std::setw(6) << "t" << std::setw(14)
     << "group" << std::setw(7) << "ord3" << "failed claims\n";
  for (const ClassReport& r : rows) {
    std::string group = r.n == 1 ? "C_" + std::to_string(r.m)
                                 : "C_" + std::to_string(r.n) + "xC_" + std::to_string(r.n * r.m);
    std::string failed;
    for (const auto& [id, v] : r.verdicts) {
      if (v == Verdict::fail) failed += (failed.empty() ? "" : " ") + std::string(to_string(id));
    }
    os << std::left << std::setw(7) << r.p << std::setw(5) << to_string(r.residue_class)
       << std::setw(6) << r.a_rep << std::setw(8) << r.order << std::setw(7)
       << signed_trace(r.trace) << std::setw(6) << r.abs_trace << std::setw(14) << group
       << std::setw(7) << r.order3 << (failed.empty() ? "-" : failed) << '\n';
  }
}

void write_report(std::ostream& os, const std::vector<ClassReport>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: write_table(os, rows); break;
    case OutputFormat::csv: write_csv(os, rows); break;
    case OutputFormat::jsonl: write_jsonl(os, rows); break;
  }
}

std::vector<ClassReport> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidArgument("empty CSV report");
  if (split(line, ',') != csv_header()) throw InvalidArgument("unexpected CSV header");
  const std::size_t width = csv_header().size();

  std::vector<ClassReport> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != width) throw InvalidArgument("CSV row has wrong column count: " + line);
    ClassReport r;
    r.p = parse_int<std::uint64_t>(f[0], "p");
    r.residue_class = parse_class(f[1]);
    r.a_rep = parse_int<std::uint64_t>(f[2], "a_rep");
    r.order = parse_int<std::uint64_t>(f[3], "N");
    r.trace = parse_int<std::int64_t>(f[4], "b");
    r.abs_trace = parse_int<std::uint64_t>(f[5], "t");
    r.n = parse_int<std::uint64_t>(f[6], "n");
    r.m = parse_int<std::uint64_t>(f[7], "m");
    r.order3 = parse_int<unsigned>(f[8], "order3");
    for (std::size_t i = 0; i < kAllClaims.size(); ++i) {
      r.verdicts[kAllClaims[i]] = parse_verdict(f[9 + i]);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ClassReport> parse_jsonl(std::istream& is) {
  std::vector<ClassReport> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      ClassReport r;
      r.p = j.at("p").get<std::uint64_t>();
      r.residue_class = parse_class(j.at("class").get<std::string>());
      r.a_rep = j.at("a_rep").get<std::uint64_t>();
      r.order = j.at("N").get<std::uint64_t>();
      r.trace = j.at("b").get<std::int64_t>();
      r.abs_trace = j.at("t").get<std::uint64_t>();
      r.n = j.at("n").get<std::uint64_t>();
      r.m = j.at("m").get<std::uint64_t>();
      r.order3 = j.at("order3").get<unsigned>();
      const auto& verdicts = j.at("verdicts");
      for (ClaimId id : kAllClaims) {
        r.verdicts[id] = parse_verdict(verdicts.at(std::string(to_string(id))).get<std::string>());
      }
      rows.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed JSONL row: ") + e.what());
    }
  }
  return rows;
}

}  // namespace bachet
