#include "bachet/theorems.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <utility>

#include <omp.h>

#include "bachet/structure.hpp"

namespace bachet {

namespace {

constexpr std::pair<ClaimId, std::string_view> kClaimNames[] = {
    {ClaimId::T2_twist_pairing, "T2_twist_pairing"},
    {ClaimId::T3a, "T3a"},
    {ClaimId::T3b, "T3b"},
    {ClaimId::T4_six_ndiv_b, "T4_six_ndiv_b"},
    {ClaimId::C5_N_mod6, "C5_N_mod6"},
    {ClaimId::C6_b_mod12, "C6_b_mod12"},
    {ClaimId::T7a, "T7a"},
    {ClaimId::T7b, "T7b"},
    {ClaimId::C8_order3_by_t, "C8_order3_by_t"},
    {ClaimId::T9_count_in_2_8, "T9_count_in_2_8"},
    {ClaimId::C10_unique_preimage, "C10_unique_preimage"},
    {ClaimId::T11_three_roots, "T11_three_roots"},
    {ClaimId::T12_chisum_mod6, "T12_chisum_mod6"},
    {ClaimId::T13_QR_iff_N0, "T13_QR_iff_N0"},
    {ClaimId::C14_b_mod6, "C14_b_mod6"},
    {ClaimId::T15_NQR_iff_N4, "T15_NQR_iff_N4"},
    {ClaimId::C16_order3_by_residue, "C16_order3_by_residue"},
    {ClaimId::T18_washington_refined, "T18_washington_refined"},
    {ClaimId::P5_cyclic_structure, "P5_cyclic_structure"},
    {ClaimId::S1_sign_hypothesis, "S1_sign_hypothesis"},
};

std::int64_t mod(std::int64_t v, std::int64_t m) noexcept { return ((v % m) + m) % m; }
std::int64_t mod(std::uint64_t v, std::int64_t m) noexcept {
  return static_cast<std::int64_t>(v % static_cast<std::uint64_t>(m));
}

Verdict verdict(bool holds) noexcept { return holds ? Verdict::pass : Verdict::fail; }

// Of the curve and its twist, the one with b = +t and the one
// with b = -t land in the stated classes mod 6.
bool twist_partition_holds(const RowFacts& f, std::int64_t n_mod6_when_plus) noexcept {
  const auto t = static_cast<std::int64_t>(f.abs_trace());
  const std::int64_t other = n_mod6_when_plus == 0 ? 4 : 0;
  const bool this_plus = f.trace == t && mod(f.order, 6) == n_mod6_when_plus &&
                         f.twist_trace == -t && mod(f.twist_order, 6) == other;
  const bool this_minus = f.trace == -t && mod(f.order, 6) == other && f.twist_trace == t &&
                          mod(f.twist_order, 6) == n_mod6_when_plus;
  return this_plus || this_minus;
}

// For (p mod 12, t mod 12), the b = +t curve has
// N = plus_n (mod 12) and order-3 points iff plus_n = 0; the b = -t curve the opposite.
Verdict order3_by_trace(const RowFacts& f) noexcept {
  const std::int64_t pm = mod(f.p, 12);
  const std::int64_t tm = mod(f.abs_trace(), 12);
  std::int64_t plus_n = -1;
  if (pm == 1 && tm == 2) plus_n = 0;
  if (pm == 1 && tm == 10) plus_n = 4;
  if (pm == 7 && tm == 4) plus_n = 4;
  if (pm == 7 && tm == 8) plus_n = 0;
  if (plus_n < 0) return Verdict::fail;
  const bool plus = f.trace == static_cast<std::int64_t>(f.abs_trace());
  const std::int64_t expected_n = plus ? plus_n : 4 - plus_n;
  const bool expected_order3 = expected_n == 0;
  return verdict(mod(f.order, 12) == expected_n && (f.order3 > 0) == expected_order3);
}

}  // namespace

std::string_view to_string(ClaimId id) noexcept {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == id) return name;
  }
  return "unknown";
}

std::optional<ClaimId> claim_from_string(std::string_view name) noexcept {
  for (const auto& [claim, claim_name] : kClaimNames) {
    if (claim_name == name) return claim;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::na: return "na";
  }
  return "na";
}

std::optional<Verdict> verdict_from_string(std::string_view s) noexcept {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "na") return Verdict::na;
  return std::nullopt;
}

std::optional<ResidueClass> residue_class_from_string(std::string_view s) noexcept {
  if (s == "QR") return ResidueClass::QR;
  if (s == "NQR") return ResidueClass::NQR;
  return std::nullopt;
}

RowFacts compute_facts(Prime p, std::uint64_t a, Exec exec) {
  const BachetCurve curve(p, static_cast<std::int64_t>(a));
  RowFacts f;
  f.p = p.value();
  f.a = curve.a().value();
  f.residue_class = residue_class_of_a(curve);

  const CurveCount count = count_by_character_sum(curve, exec);
  f.order = count.order();
  f.trace = count.trace();

  if (p.value() <= kEnumerationBound) {
    const GroupStructure s = structure_exhaustive(curve, exec);
    f.n = s.n();
    f.nm = s.nm();
  } else {
    const RandomizedStructure r = structure_randomized(curve, kDefaultSampleBudget, 0);
    if (!r.verified) {
      throw ConsistencyError("randomized structure unverified for p = " +
                             std::to_string(p.value()));
    }
    f.n = r.structure.n();
    f.nm = r.structure.nm();
  }
  f.order3 = count_order3(curve).order3_count;

  if (p.value() % 6 == 1) {
    const FieldElement g = smallest_nonresidue(p);
    const CurveCount twisted = count_by_character_sum(BachetCurve(p, g * curve.a()), exec);
    f.twist_order = twisted.order();
    f.twist_trace = twisted.trace();
    f.chi_sum = exec == Exec::parallel ? kernels::character_sum_parallel(p.value(), 1)
                                       : kernels::character_sum_serial(p.value(), 1);
    f.preimages_of_one = cube_roots(FieldElement(0, p)).size();
    f.roots_of_x3_plus_1 = cube_roots(FieldElement(-1, p)).size();
  }
  return f;
}

Verdict evaluate_claim(ClaimId id, const RowFacts& f) noexcept {
  const std::int64_t p_mod6 = mod(f.p, 6);
  const std::int64_t p_mod12 = mod(f.p, 12);
  const bool qr = f.residue_class == ResidueClass::QR;
  const std::int64_t b = f.trace;
  const std::int64_t n_mod6 = mod(f.order, 6);
  const std::int64_t n_mod12 = mod(f.order, 12);
  const std::int64_t b_mod6 = mod(b, 6);
  const std::int64_t b_mod12 = mod(b, 12);
  const std::int64_t t_mod6 = mod(f.abs_trace(), 6);

  if (id == ClaimId::P5_cyclic_structure) {
    if (p_mod6 != 5) return Verdict::na;
    return verdict(f.n == 1 && f.nm == f.p + 1 && b == 0);
  }
  if (p_mod6 != 1) return Verdict::na;

  switch (id) {
    case ClaimId::T2_twist_pairing:
      return verdict(static_cast<std::int64_t>(f.twist_order) ==
                     static_cast<std::int64_t>(f.p) + 1 + b);
    case ClaimId::T3a:
      if (p_mod12 != 1) return Verdict::na;
      return verdict((b_mod12 == 2) == (n_mod12 == 0) && (b_mod12 == 10) == (n_mod12 == 4));
    case ClaimId::T3b:
      if (p_mod12 != 7) return Verdict::na;
      return verdict((b_mod12 == 4) == (n_mod12 == 4) && (b_mod12 == 8) == (n_mod12 == 0));
    case ClaimId::T4_six_ndiv_b:
      return verdict(b_mod6 == 2 || b_mod6 == 4);
    case ClaimId::C5_N_mod6:
      return verdict(n_mod6 == 0 || n_mod6 == 4);
    case ClaimId::C6_b_mod12:
      if (p_mod12 == 1) return verdict(b_mod12 == 2 || b_mod12 == 10);
      return verdict(b_mod12 == 4 || b_mod12 == 8);
    case ClaimId::T7a:
      if (t_mod6 != 2) return Verdict::na;
      return verdict(twist_partition_holds(f, 0));
    case ClaimId::T7b:
      if (t_mod6 != 4) return Verdict::na;
      return verdict(twist_partition_holds(f, 4));
    case ClaimId::C8_order3_by_t:
      return order3_by_trace(f);
    case ClaimId::T9_count_in_2_8:
      if (n_mod6 != 0) return Verdict::na;
      return verdict(f.order3 == 2 || f.order3 == 8);
    case ClaimId::C10_unique_preimage:
      return verdict(f.preimages_of_one == 1);
    case ClaimId::T11_three_roots:
      return verdict(f.roots_of_x3_plus_1 == 3);
    case ClaimId::T12_chisum_mod6:
      return verdict(mod(f.chi_sum, 6) == 4);
    case ClaimId::T13_QR_iff_N0:
      return verdict(qr == (n_mod6 == 0));
    case ClaimId::C14_b_mod6:
      if (n_mod6 != 0) return Verdict::na;
      return verdict(b_mod6 == 2);
    case ClaimId::T15_NQR_iff_N4:
      return verdict(!qr == (n_mod6 == 4));
    case ClaimId::C16_order3_by_residue: {
      const bool has_order3 = f.order3 == 2 || f.order3 == 8;
      return verdict(has_order3 == qr && (f.order3 == 0) == !qr);
    }
    case ClaimId::T18_washington_refined:
      if (f.n != f.nm) return Verdict::na;
      return verdict(classify_nn_instance(f.p, f.residue_class, f.n).satisfies_refinement);
    case ClaimId::S1_sign_hypothesis:
      return verdict((b > 0) == qr);
    case ClaimId::P5_cyclic_structure:
      break;
  }
  return Verdict::na;
}

ClassReport make_report(const RowFacts& facts) {
  ClassReport r;
  r.p = facts.p;
  r.residue_class = facts.residue_class;
  r.a_rep = facts.a;
  r.order = facts.order;
  r.trace = facts.trace;
  r.abs_trace = facts.abs_trace();
  r.n = facts.n;
  r.m = facts.nm / facts.n;
  r.order3 = facts.order3;
  for (ClaimId id : kAllClaims) r.verdicts[id] = evaluate_claim(id, facts);
  return r;
}

ClassReport evaluate_claims(Prime p, ResidueClass cls, Exec exec) {
  const std::uint64_t a = cls == ResidueClass::QR ? 1 : smallest_nonresidue(p).value();
  return make_report(compute_facts(p, a, exec));
}

namespace {

struct RowTask {
  Prime p;
  std::uint64_t a;
};

std::vector<RowTask> plan_rows(std::uint64_t bound, const SweepOptions& options) {
  std::vector<RowTask> tasks;
  auto wanted = [&](ResidueClass c) { return !options.class_filter || *options.class_filter == c; };
  for (const Prime p : primes_in_class(bound, 1, 1)) {
    if (options.all_a && p.value() <= options.all_a_bound) {
      for (ResidueClass cls : {ResidueClass::QR, ResidueClass::NQR}) {
        if (!wanted(cls)) continue;
        for (std::uint64_t a = 1; a < p.value(); ++a) {
          const bool is_qr = chi(FieldElement::from_canonical(a, p)) == Chi::plus_one;
          if (is_qr == (cls == ResidueClass::QR)) tasks.push_back({p, a});
        }
      }
    } else if (p.value() % 6 == 5) {
      if (wanted(ResidueClass::QR)) tasks.push_back({p, 1});
    } else {
      if (wanted(ResidueClass::QR)) tasks.push_back({p, 1});
      if (wanted(ResidueClass::NQR)) tasks.push_back({p, smallest_nonresidue(p).value()});
    }
  }
  return tasks;
}

}  // namespace

std::vector<ClassReport> sweep(std::uint64_t bound, const SweepOptions& options) {
  if (bound < 7) throw InvalidArgument("sweep bound must be at least 7");
  const std::vector<RowTask> tasks = plan_rows(bound, options);
  std::vector<ClassReport> rows(tasks.size());
  std::exception_ptr failure;
  const int threads = options.jobs == 0 ? omp_get_max_threads() : static_cast<int>(options.jobs);
  const auto total = static_cast<std::ptrdiff_t>(tasks.size());

  // Larger primes first for load balance; results land at their own index.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t k = total - 1; k >= 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      rows[i] = make_report(compute_facts(tasks[i].p, tasks[i].a, Exec::serial));
    } catch (...) {
#pragma omp critical(bachet_sweep)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<ClaimFailure> collect_failures(const std::vector<ClassReport>& rows,
                                           bool include_hypothesis) {
  std::vector<ClaimFailure> failures;
  for (const ClassReport& row : rows) {
    for (const auto& [claim, v] : row.verdicts) {
      if (v != Verdict::fail) continue;
      if (is_hypothesis(claim) && !include_hypothesis) continue;
      failures.push_back({row.p, row.residue_class, row.a_rep, row.trace, claim});
    }
  }
  return failures;
}

std::vector<InvarianceFailure> check_class_invariance(const std::vector<ClassReport>& rows) {
  std::vector<InvarianceFailure> failures;
  for (std::size_t begin = 0; begin < rows.size();) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].p == rows[begin].p) ++end;
    const Prime p(rows[begin].p);
    const std::uint64_t g = smallest_nonresidue(p).value();
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t rep_a = rows[i].residue_class == ResidueClass::QR ? 1 : g;
      const auto rep = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(begin),
                                    rows.begin() + static_cast<std::ptrdiff_t>(end),
                                    [&](const ClassReport& r) { return r.a_rep == rep_a; });
      if (rep == rows.begin() + static_cast<std::ptrdiff_t>(end)) continue;
      if (rows[i].order != rep->order) {
        failures.push_back({rows[i].p, rows[i].a_rep, rows[i].order, rep->order});
      }
    }
    begin = end;
  }
  return failures;
}

std::string_view to_string(NnForm f) noexcept {
  switch (f) {
    case NnForm::n2_plus_n_plus_1: return "n^2+n+1";
    case NnForm::n2_minus_n_plus_1: return "n^2-n+1";
    case NnForm::none: return "none";
  }
  return "none";
}

NnInstance classify_nn_instance(std::uint64_t p, ResidueClass cls, std::uint64_t n) noexcept {
  const std::uint64_t sq = n * n;
  NnForm form = NnForm::none;
  if (p == sq + n + 1) form = NnForm::n2_plus_n_plus_1;
  if (p + n == sq + 1) form = NnForm::n2_minus_n_plus_1;
  const bool excluded_forms =
      p == sq + 1 || p == (n - 1) * (n - 1) || p == (n + 1) * (n + 1);
  const bool ok = p % 12 == 7 && form != NnForm::none && !excluded_forms;
  return {p, cls, n, form, ok};
}

std::vector<NnInstance> find_nn_instances(std::uint64_t bound, unsigned jobs) {
  SweepOptions options;
  options.jobs = jobs;
  std::vector<NnInstance> instances;
  for (const ClassReport& row : sweep(bound, options)) {
    if (row.m == 1) instances.push_back(classify_nn_instance(row.p, row.residue_class, row.n));
  }
  return instances;
}

}  // namespace bachet
