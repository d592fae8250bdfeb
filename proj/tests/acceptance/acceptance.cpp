#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bachet/counting.hpp"
#include "bachet/curve.hpp"
#include "bachet/structure.hpp"
#include "bachet/theorems.hpp"
#include "cli.hpp"

using namespace bachet;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bachet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string fmt_group(std::uint64_t n, std::uint64_t nm) {
  return "C_" + std::to_string(n) + " x C_" + std::to_string(nm);
}

Outcome dual_oracle_counting() {
  std::size_t curves = 0;
  for (Prime p : primes_in_class(1999, 0, 1)) {
    for (std::uint64_t a = 1; a < p.value(); ++a) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const auto by_sum = count_by_character_sum(e).order();
      const auto by_enum = count_by_enumeration(e).order();
      if (by_sum != by_enum) {
        return {false, "p=" + std::to_string(p.value()) + " a=" + std::to_string(a) +
                           " character sum " + std::to_string(by_sum) + " vs enumeration " +
                           std::to_string(by_enum)};
      }
      ++curves;
    }
  }
  return {true, std::to_string(curves) + " curves"};
}

Outcome claim_sweep() {
  const CliRun r = run_cli({"verify", "--max-p", "1000", "--format", "csv"});
  return {r.code == cli::kSuccess, "exit " + std::to_string(r.code) + "; " + first_line(r.err)};
}

Outcome sign_hypothesis() {
  const CliRun r = run_cli({"verify", "--max-p", "1000", "--strict-s1"});
  const bool listed = r.err.find("FAIL S1_sign_hypothesis p=7 class=QR a=1 b=-4") != std::string::npos;
  return {r.code == cli::kClaimViolation && listed,
          "exit " + std::to_string(r.code) + (listed ? ", p=7 QR b=-4 reported" : ", p=7 missing")};
}

Outcome cyclic_case() {
  std::size_t curves = 0;
  for (Prime p : primes_in_class(1999, 5, 6)) {
    for (std::uint64_t a = 1; a < p.value(); ++a) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const GroupStructure s = structure_exhaustive(e);
      const std::int64_t b = count_by_enumeration(e).trace();
      if (!s.is_cyclic() || s.order() != p.value() + 1 || b != 0) {
        return {false, "p=" + std::to_string(p.value()) + " a=" + std::to_string(a) + " got " +
                           fmt_group(s.n(), s.nm()) + " b=" + std::to_string(b)};
      }
      ++curves;
    }
  }
  return {true, std::to_string(curves) + " curves"};
}

Outcome pinned_fixtures() {
  struct Fixture {
    std::uint64_t p;
    std::int64_t a;
    std::uint64_t order;
    std::optional<std::int64_t> trace;
    std::uint64_t n;
    std::uint64_t nm;
    std::optional<unsigned> order3;
  };
  const std::vector<Fixture> fixtures = {
      {7, 1, 12, -4, 2, 6, 2},
      {7, 3, 4, std::nullopt, 2, 2, 0},
      {13, 1, 12, 2, 2, 6, std::nullopt},
      {13, 2, 16, std::nullopt, 2, 8, std::nullopt},
      {5, 1, 6, std::nullopt, 1, 6, std::nullopt},
  };
  std::string mismatches;
  for (const Fixture& f : fixtures) {
    const BachetCurve e(Prime(f.p), f.a);
    const CurveCount c = count_by_enumeration(e);
    const GroupStructure s = structure_exhaustive(e);
    const unsigned o3 = count_order3(e).order3_count;
    const bool ok = c.order() == f.order && (!f.trace || c.trace() == *f.trace) && s.n() == f.n &&
                    s.nm() == f.nm && (!f.order3 || o3 == *f.order3);
    if (!ok) {
      mismatches += " p=" + std::to_string(f.p) + ",a=" + std::to_string(f.a) + ": got N=" +
                    std::to_string(c.order()) + " " + fmt_group(s.n(), s.nm()) + ", expected N=" +
                    std::to_string(f.order) + " " + fmt_group(f.n, f.nm) + ";";
    }
  }
  if (mismatches.empty()) return {true, std::to_string(fixtures.size()) + " fixtures"};
  return {false, "mismatch:" + mismatches};
}

Outcome chi_sum_lemma() {
  std::size_t primes = 0;
  for (Prime p : primes_in_class(9999, 1, 6)) {
    const std::int64_t s = chi_sum_x3_plus_1(p);
    if (((s % 6) + 6) % 6 != 4) {
      return {false, "p=" + std::to_string(p.value()) + " sum=" + std::to_string(s)};
    }
    ++primes;
  }
  return {true, std::to_string(primes) + " primes"};
}

Outcome washington_refinement() {
  const CliRun r = run_cli({"washington", "--max-p", "500"});
  const bool lists_7 = r.out.find("p=7 class=NQR Z_2 x Z_2") != std::string::npos;
  std::string detail = "exit " + std::to_string(r.code) + (lists_7 ? ", lists (7, n=2)" : ", (7, n=2) missing");
  if (!r.err.empty()) detail += "; first violation: " + first_line(r.err);
  return {r.code == cli::kSuccess && lists_7, detail};
}

std::string where(const BachetCurve& e) {
  return "p=" + std::to_string(e.prime().value()) + " a=" + std::to_string(e.a().value());
}

Outcome group_law() {
  for (Prime p : primes_in_class(50, 0, 1)) {
    for (std::uint64_t a = 1; a < p.value(); ++a) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const auto pts = enumerate_points(e);
      const Point o = Point::infinity(e);
      for (const Point& x : pts) {
        if (x + o != x || o + x != x || x + negate(x) != o) return {false, "identity/inverse " + where(e)};
        for (const Point& y : pts) {
          if (x + y != y + x) return {false, "commutativity " + where(e)};
        }
      }
    }
  }
  for (Prime p : primes_in_class(13, 0, 1)) {
    for (std::uint64_t a = 1; a < p.value(); ++a) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const auto pts = enumerate_points(e);
      for (const Point& x : pts)
        for (const Point& y : pts)
          for (const Point& z : pts)
            if ((x + y) + z != x + (y + z)) return {false, "associativity " + where(e)};
    }
  }
  std::mt19937_64 rng(2024);
  const auto large = primes_in_class(5000, 0, 1);
  std::vector<BachetCurve> curves;
  for (std::size_t i = 0; curves.size() < 20; ++i) {
    const Prime p = large[large.size() - 1 - 7 * i];
    curves.emplace_back(p, static_cast<std::int64_t>(1 + i % 5));
  }
  for (const BachetCurve& e : curves) {
    const auto pts = enumerate_points(e);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const Point& x = pts[pick(rng)];
      const Point& y = pts[pick(rng)];
      const Point& z = pts[pick(rng)];
      if ((x + y) + z != x + (y + z)) return {false, "random associativity " + where(e)};
    }
  }
  std::size_t checked = 0;
  for (Prime p : primes_in_class(499, 0, 1)) {
    for (std::uint64_t a = 1; a < p.value(); ++a) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const auto pts = enumerate_points(e);
      for (const Point& x : pts) {
        if (!scalar_mul(pts.size(), x).is_infinity()) return {false, "N*P != o " + where(e)};
      }
      checked += pts.size();
    }
  }
  return {true, "20 random-triple curves, " + std::to_string(checked) + " points annihilated by N"};
}

Outcome duplication() {
  const RationalSolution start(Rational(3), Rational(5), BigInt(-2));
  const RationalSolution d = bachet_duplicate(start);
  if (d.x() != Rational(129, 100) || d.y() != Rational(383, 1000)) {
    std::ostringstream os;
    os << "(3,5) -> (" << d.x() << ", " << d.y() << ")";
    return {false, os.str()};
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-60, 60);
  int chains = 0;
  while (chains < 100) {
    const int x = coord(rng);
    const int y = coord(rng);
    if (y == 0) continue;
    const BigInt c = BigInt(y) * y - BigInt(x) * x * x;
    RationalSolution s(Rational(x), Rational(y), c);
    bool complete = true;
    for (int depth = 0; depth < 3; ++depth) {
      if (s.y() == 0) {
        complete = false;
        break;
      }
      s = bachet_duplicate(s);
      if (s.y() * s.y() - s.x() * s.x() * s.x() != Rational(c)) {
        return {false, "chain from (" + std::to_string(x) + "," + std::to_string(y) + ") left the curve"};
      }
    }
    if (complete) ++chains;
  }
  return {true, "(3,5) -> (129/100, 383/1000), 100 chains"};
}

Outcome structure_agreement() {
  std::size_t curves = 0;
  for (Prime p : primes_in_class(1999, 0, 1)) {
    std::vector<std::uint64_t> as{1};
    if (p.value() % 6 == 1) as.push_back(smallest_nonresidue(p).value());
    if (p.value() <= 200) {
      as.clear();
      for (std::uint64_t a = 1; a < p.value(); ++a) as.push_back(a);
    }
    for (std::uint64_t a : as) {
      const BachetCurve e(p, static_cast<std::int64_t>(a));
      const GroupStructure exhaustive = structure_exhaustive(e);
      const RandomizedStructure randomized =
          structure_randomized(e, kDefaultSampleBudget, p.value() * 1000 + a);
      if (!randomized.verified) return {false, "unverified at " + where(e)};
      if (randomized.structure != exhaustive) {
        return {false, where(e) + " randomized " +
                           fmt_group(randomized.structure.n(), randomized.structure.nm()) +
                           " vs exhaustive " + fmt_group(exhaustive.n(), exhaustive.nm())};
      }
      ++curves;
    }
  }
  return {true, std::to_string(curves) + " curves"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string first = (dir / "bachet_acceptance_1.csv").string();
  const std::string second = (dir / "bachet_acceptance_2.csv").string();
  run_cli({"verify", "--max-p", "1000", "--format", "csv", "--out", first});
  run_cli({"verify", "--max-p", "1000", "--format", "csv", "--out", second});
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  if (a.empty()) return {false, "no output written"};
  return {a == b, std::to_string(a.size()) + " bytes" + (a == b ? ", identical" : ", differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dual-oracle counting, every a, p < 2000", dual_oracle_counting},
      {"verify --max-p 1000 exits 0", claim_sweep},
      {"verify --max-p 1000 --strict-s1 exits 1 with p=7 QR b=-4", sign_hypothesis},
      {"p = 5 (mod 6), every a, p < 2000: cyclic of order p+1, b = 0", cyclic_case},
      {"pinned fixtures", pinned_fixtures},
      {"chi sum of x^3+1 = 4 (mod 6), p = 1 (mod 6), p < 10000", chi_sum_lemma},
      {"washington --max-p 500 lists (7, n=2), all instances p = 7 (mod 12), exits 0",
       washington_refinement},
      {"group-law suite", group_law},
      {"duplication formula", duplication},
      {"randomized and exhaustive structure agree, p < 2000, budget 200", structure_agreement},
      {"verify --max-p 1000 --format csv is byte-identical across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.pass) ++failed;
    std::printf("%s %2zu  %s  [%s] (%.1fs)\n", r.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
