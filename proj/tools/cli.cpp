#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bachet/counting.hpp"
#include "bachet/curve.hpp"
#include "bachet/kernels.hpp"
#include "bachet/report.hpp"
#include "bachet/structure.hpp"
#include "bachet/theorems.hpp"

namespace bachet::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::uint64_t p = 0;
  std::int64_t a = 0;
  std::optional<std::int64_t> g;
  std::uint64_t max_p = 0;
  bool all_a = false;
  bool strict_s1 = false;
  std::string format = "table";
  std::string out_path;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

OutputFormat format_of(const Options& o) { return *output_format_from_string(o.format); }

BachetCurve curve_from(const Options& o) {
  const Prime p(o.p);
  if (o.a < 1 || static_cast<std::uint64_t>(o.a) >= o.p) {
    throw UsageError("--a must satisfy 1 <= a <= p - 1");
  }
  return BachetCurve(p, o.a);
}

std::string signed_str(std::int64_t v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

std::string group_name(const GroupStructure& s) {
  if (s.is_cyclic()) return "C_" + std::to_string(s.nm()) + " (cyclic)";
  return "Z_" + std::to_string(s.n()) + " x Z_" + std::to_string(s.nm());
}

// Writes a flat record set in the chosen format. CSV gets a header from the
// keys of the first record.
void emit_records(std::ostream& os, const std::vector<ordered_json>& records, OutputFormat format,
                  const std::vector<std::string>& table_lines) {
  switch (format) {
    case OutputFormat::table:
      for (const auto& line : table_lines) os << line << '\n';
      return;
    case OutputFormat::jsonl:
      for (const auto& r : records) os << r.dump() << '\n';
      return;
    case OutputFormat::csv: {
      if (records.empty()) return;
      bool first = true;
      for (const auto& [key, _] : records.front().items()) {
        os << (first ? "" : ",") << key;
        first = false;
      }
      os << '\n';
      for (const auto& r : records) {
        first = true;
        for (const auto& [_, value] : r.items()) {
          os << (first ? "" : ",");
          if (value.is_string()) {
            os << value.get<std::string>();
          } else if (!value.is_null()) {
            os << value.dump();
          }
          first = false;
        }
        os << '\n';
      }
      return;
    }
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  const BachetCurve curve = curve_from(o);
  const CurveCount count = count_by_character_sum(curve);
  const std::int64_t b = count.trace();
  const bool hasse = within_hasse_bound(curve.prime(), b);
  ordered_json r;
  r["p"] = o.p;
  r["a"] = o.a;
  r["class"] = to_string(residue_class_of_a(curve));
  r["N"] = count.order();
  r["b"] = b;
  r["t"] = count.abs_trace();
  r["hasse_ok"] = hasse;
  std::ostringstream line;
  line << "p=" << o.p << " a=" << o.a << " class=" << to_string(residue_class_of_a(curve))
       << " N=" << count.order() << " b=" << b << " t=" << count.abs_trace()
       << " hasse=" << (hasse ? "ok" : "VIOLATED") << " (b^2=" << b * b
       << " <= 4p=" << 4 * o.p << ")";
  emit_records(out, {r}, format_of(o), {line.str()});
  return kSuccess;
}

int cmd_points(const Options& o, std::ostream& out) {
  const BachetCurve curve = curve_from(o);
  const std::vector<Point> points = enumerate_points(curve);
  const Factorization order(points.size());
  const std::vector<std::uint64_t> orders = kernels::point_orders_parallel(points, order);
  const std::size_t shown = std::min(points.size(), o.limit.value_or(points.size()));

  std::vector<ordered_json> records;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < shown; ++i) {
    ordered_json r;
    std::ostringstream text;
    text << points[i];
    if (points[i].is_infinity()) {
      r["x"] = nullptr;
      r["y"] = nullptr;
    } else {
      r["x"] = points[i].x().value();
      r["y"] = points[i].y().value();
    }
    r["order"] = orders[i];
    records.push_back(std::move(r));
    std::string cell = text.str();
    cell.resize(std::max<std::size_t>(cell.size(), 16), ' ');
    lines.push_back(cell + std::to_string(orders[i]));
  }
  emit_records(out, records, format_of(o), lines);
  return kSuccess;
}

int cmd_structure(const Options& o, std::ostream& out, std::ostream& err) {
  const BachetCurve curve = curve_from(o);
  const bool exhaustive = o.p <= kEnumerationBound;
  std::optional<GroupStructure> structure;
  bool verified = true;
  if (exhaustive) {
    structure = structure_exhaustive(curve);
  } else {
    const RandomizedStructure r = structure_randomized(curve, kDefaultSampleBudget, o.seed);
    structure = r.structure;
    verified = r.verified;
  }
  const TorsionCensus census = count_order3(curve);

  ordered_json r;
  r["p"] = o.p;
  r["a"] = o.a;
  r["N"] = structure->order();
  r["n"] = structure->n();
  r["m"] = structure->m();
  r["nm"] = structure->nm();
  r["order3"] = census.order3_count;
  r["full_3torsion"] = census.full_3torsion;
  r["path"] = exhaustive ? "exhaustive" : "randomized";
  r["verified"] = verified;
  std::ostringstream line;
  line << "p=" << o.p << " a=" << o.a << " N=" << structure->order() << " group="
       << group_name(*structure) << " n=" << structure->n() << " m=" << structure->m()
       << " nm=" << structure->nm() << " order3=" << census.order3_count
       << " full_3torsion=" << (census.full_3torsion ? "yes" : "no")
       << " path=" << (exhaustive ? "exhaustive" : "randomized")
       << (verified ? "" : " UNVERIFIED");
  emit_records(out, {r}, format_of(o), {line.str()});
  if (!verified) {
    err << "structure not verified within " << kDefaultSampleBudget << " samples\n";
    return kUnverified;
  }
  return kSuccess;
}

int cmd_twist(const Options& o, std::ostream& out) {
  const BachetCurve curve = curve_from(o);
  if (o.p % 6 != 1) throw UsageError("twist pairing needs p = 1 (mod 6)");
  std::optional<FieldElement> g;
  if (o.g) {
    if (*o.g <= 0 || static_cast<std::uint64_t>(*o.g) >= o.p) throw UsageError("--g must be in 1..p-1");
    g = FieldElement(*o.g, curve.prime());
  }
  const TwistPair pair = twist(curve, g);
  ordered_json r;
  r["p"] = o.p;
  r["g"] = pair.g.value();
  r["a"] = pair.original.curve.a().value();
  r["N"] = pair.original.count.order();
  r["b"] = pair.original.count.trace();
  r["a_twist"] = pair.twist.curve.a().value();
  r["N_twist"] = pair.twist.count.order();
  r["b_twist"] = pair.twist.count.trace();
  std::ostringstream line;
  line << "p=" << o.p << " g=" << pair.g << " | a=" << pair.original.curve.a()
       << " N=" << pair.original.count.order() << " b=" << signed_str(pair.original.count.trace())
       << " | twist a'=" << pair.twist.curve.a() << " N'=" << pair.twist.count.order()
       << " b'=" << signed_str(pair.twist.count.trace())
       << " | N+N'=" << pair.original.count.order() + pair.twist.count.order();
  emit_records(out, {r}, format_of(o), {line.str()});
  return kSuccess;
}

std::uint64_t require_bound(const Options& o) {
  if (o.max_p < 7) throw UsageError("--max-p must be at least 7");
  return o.max_p;
}

// Runs `write` against --out when given, else against `out`.
template <typename Write>
void with_output(const Options& o, std::ostream& out, Write write) {
  if (o.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open --out file " + o.out_path);
  write(file);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SweepOptions sweep_options;
  sweep_options.all_a = o.all_a;
  sweep_options.jobs = o.jobs;
  const std::vector<ClassReport> rows = sweep(require_bound(o), sweep_options);
  with_output(o, out, [&](std::ostream& os) { write_report(os, rows, format_of(o)); });

  const auto failures = collect_failures(rows, o.strict_s1);
  const auto invariance = o.all_a ? check_class_invariance(rows) : std::vector<InvarianceFailure>{};
  std::size_t s1_counterexamples = 0;
  for (const auto& f : collect_failures(rows, true)) {
    if (is_hypothesis(f.claim)) ++s1_counterexamples;
  }

  err << "checked " << rows.size() << " rows for primes 5.." << o.max_p << ": "
      << failures.size() << " claim failure(s)";
  if (!o.strict_s1) {
    err << "; hypothesis S1_sign_hypothesis has " << s1_counterexamples
        << " counterexample(s), not counted (use --strict-s1)";
  }
  err << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < failures.size() && i < kShown; ++i) {
    const auto& f = failures[i];
    err << "FAIL " << to_string(f.claim) << " p=" << f.p << " class=" << to_string(f.residue_class)
        << " a=" << f.a << " b=" << f.trace << '\n';
  }
  if (failures.size() > kShown) err << "... " << failures.size() - kShown << " more\n";
  for (const auto& f : invariance) {
    err << "FAIL class-invariance p=" << f.p << " a=" << f.a << " N=" << f.order
        << " representative N=" << f.representative_order << '\n';
  }
  return failures.empty() && invariance.empty() ? kSuccess : kClaimViolation;
}

int cmd_washington(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<NnInstance> instances = find_nn_instances(require_bound(o), o.jobs);
  std::vector<ordered_json> records;
  std::vector<std::string> lines;
  bool all_ok = true;
  for (const NnInstance& inst : instances) {
    ordered_json r;
    r["p"] = inst.p;
    r["class"] = to_string(inst.residue_class);
    r["n"] = inst.n;
    r["p_mod_12"] = inst.p % 12;
    r["form"] = to_string(inst.form);
    r["satisfies"] = inst.satisfies_refinement;
    records.push_back(std::move(r));
    std::ostringstream line;
    line << "p=" << inst.p << " class=" << to_string(inst.residue_class) << " Z_" << inst.n
         << " x Z_" << inst.n << " p_mod_12=" << inst.p % 12 << " form=" << to_string(inst.form)
         << (inst.satisfies_refinement ? " ok" : " VIOLATES");
    lines.push_back(line.str());
    all_ok = all_ok && inst.satisfies_refinement;
  }
  with_output(o, out, [&](std::ostream& os) { emit_records(os, records, format_of(o), lines); });
  if (!all_ok) {
    for (const NnInstance& inst : instances) {
      if (!inst.satisfies_refinement) {
        err << "FAIL T18_washington_refined p=" << inst.p << " n=" << inst.n
            << " p_mod_12=" << inst.p % 12 << " form=" << to_string(inst.form) << '\n';
      }
    }
    return kClaimViolation;
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bachet elliptic curves y^2 = x^3 + a^3 over F_p"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "csv", "jsonl"});

  auto add_curve = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "prime modulus (> 3)")->required();
    cmd->add_option("--a", o.a, "curve parameter, 1 <= a <= p-1")->required();
    cmd->add_option("--format", o.format, "table | csv | jsonl")->check(formats);
  };
  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--max-p", o.max_p, "largest prime to include")->required();
    cmd->add_option("--format", o.format, "table | csv | jsonl")->check(formats);
    cmd->add_option("--out", o.out_path, "write the report to this file");
    cmd->add_option("--jobs", o.jobs, "worker threads (default: all)");
  };

  CLI::App* count = app.add_subcommand("count", "point count N, trace b and t = |b|");
  add_curve(count);
  CLI::App* points = app.add_subcommand("points", "list every point with its order");
  add_curve(points);
  points->add_option("--limit", o.limit, "print only the first rows");
  CLI::App* structure = app.add_subcommand("structure", "group structure C_n x C_nm");
  add_curve(structure);
  structure->add_option("--seed", o.seed, "seed for the randomized path");
  CLI::App* twist_cmd = app.add_subcommand("twist", "curve and quadratic twist counts");
  add_curve(twist_cmd);
  twist_cmd->add_option("--g", o.g, "quadratic non-residue (default: smallest)");
  CLI::App* verify = app.add_subcommand("verify", "check every claim on all primes up to --max-p");
  add_sweep(verify);
  verify->add_flag("--all-a", o.all_a, "one row per a in F_p^* for p <= 200");
  verify->add_flag("--strict-s1", o.strict_s1, "count the sign hypothesis toward the exit code");
  CLI::App* washington = app.add_subcommand("washington", "list Z_n x Z_n groups");
  add_sweep(washington);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (points->parsed()) return cmd_points(o, out);
    if (structure->parsed()) return cmd_structure(o, out, err);
    if (twist_cmd->parsed()) return cmd_twist(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (washington->parsed()) return cmd_washington(o, out, err);
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kClaimViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bachet::cli
