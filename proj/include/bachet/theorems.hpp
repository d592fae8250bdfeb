#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bachet/counting.hpp"
#include "bachet/field.hpp"

namespace bachet {

/// One id per checked claim. Column order of the report follows this order.
enum class ClaimId {
  T2_twist_pairing,
  T3a,
  T3b,
  T4_six_ndiv_b,
  C5_N_mod6,
  C6_b_mod12,
  T7a,
  T7b,
  C8_order3_by_t,
  T9_count_in_2_8,
  C10_unique_preimage,
  T11_three_roots,
  T12_chisum_mod6,
  T13_QR_iff_N0,
  C14_b_mod6,
  T15_NQR_iff_N4,
  C16_order3_by_residue,
  T18_washington_refined,
  P5_cyclic_structure,
  S1_sign_hypothesis,
};

inline constexpr std::array kAllClaims = {
    ClaimId::T2_twist_pairing,    ClaimId::T3a,
    ClaimId::T3b,                 ClaimId::T4_six_ndiv_b,
    ClaimId::C5_N_mod6,           ClaimId::C6_b_mod12,
    ClaimId::T7a,                 ClaimId::T7b,
    ClaimId::C8_order3_by_t,      ClaimId::T9_count_in_2_8,
    ClaimId::C10_unique_preimage, ClaimId::T11_three_roots,
    ClaimId::T12_chisum_mod6,     ClaimId::T13_QR_iff_N0,
    ClaimId::C14_b_mod6,          ClaimId::T15_NQR_iff_N4,
    ClaimId::C16_order3_by_residue, ClaimId::T18_washington_refined,
    ClaimId::P5_cyclic_structure, ClaimId::S1_sign_hypothesis,
};

std::string_view to_string(ClaimId id) noexcept;
std::optional<ClaimId> claim_from_string(std::string_view name) noexcept;
/// S1 is a measured hypothesis and is expected to fail on some rows.
constexpr bool is_hypothesis(ClaimId id) noexcept { return id == ClaimId::S1_sign_hypothesis; }

enum class Verdict { pass, fail, na };

std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view s) noexcept;
std::optional<ResidueClass> residue_class_from_string(std::string_view s) noexcept;

/// Everything the predicates look at, computed once per row.
struct RowFacts {
  std::uint64_t p = 0;
  ResidueClass residue_class = ResidueClass::QR;
  std::uint64_t a = 0;
  std::uint64_t order = 0;  // N
  std::int64_t trace = 0;   // b
  std::uint64_t n = 0;
  std::uint64_t nm = 0;
  unsigned order3 = 0;
  // p = 1 (mod 6) only:
  std::uint64_t twist_order = 0;
  std::int64_t twist_trace = 0;
  std::int64_t chi_sum = 0;
  std::uint64_t preimages_of_one = 0;      // |{x : x^3 + 1 = 1}|
  std::uint64_t roots_of_x3_plus_1 = 0;    // |{x in 1..p-1 : x^3 + 1 = 0}|

  std::uint64_t abs_trace() const noexcept {
    return static_cast<std::uint64_t>(trace < 0 ? -trace : trace);
  }
};

/// Collects the facts for y^2 = x^3 + a^3 (structure by enumeration when
/// p <= kEnumerationBound, randomized otherwise).
RowFacts compute_facts(Prime p, std::uint64_t a, Exec exec = Exec::serial);

/// The verdict of a single claim on one row.
Verdict evaluate_claim(ClaimId id, const RowFacts& facts) noexcept;

struct ClassReport {
  std::uint64_t p = 0;
  ResidueClass residue_class = ResidueClass::QR;
  std::uint64_t a_rep = 0;
  std::uint64_t order = 0;
  std::int64_t trace = 0;
  std::uint64_t abs_trace = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  unsigned order3 = 0;
  std::map<ClaimId, Verdict> verdicts;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

ClassReport make_report(const RowFacts& facts);

/// Row for the class representative: a = 1 for QR, a = smallest_nonresidue for NQR.
ClassReport evaluate_claims(Prime p, ResidueClass cls, Exec exec = Exec::serial);

/// Default --all-a ceiling: rows for every a in F_p^* only for p up to this.
inline constexpr std::uint64_t kAllABound = 200;

struct SweepOptions {
  std::optional<ResidueClass> class_filter;
  /// Emit one row per a (p <= all_a_bound) instead of class representatives.
  bool all_a = false;
  std::uint64_t all_a_bound = kAllABound;
  /// Worker threads; 0 means all available.
  unsigned jobs = 0;
};

/// Rows for every prime 5 <= p <= bound, ascending by p, then class, then a.
/// p = 5 (mod 6) primes get a single QR row (a = 1) with the cyclic check.
std::vector<ClassReport> sweep(std::uint64_t bound, const SweepOptions& options = {});

/// A row whose verdict disagrees with the claim.
struct ClaimFailure {
  std::uint64_t p;
  ResidueClass residue_class;
  std::uint64_t a;
  std::int64_t trace;
  ClaimId claim;
};

/// Failing verdicts in row order; S1 is included only when include_hypothesis.
std::vector<ClaimFailure> collect_failures(const std::vector<ClassReport>& rows,
                                           bool include_hypothesis);

/// A row whose N differs from its class representative's N.
struct InvarianceFailure {
  std::uint64_t p;
  std::uint64_t a;
  std::uint64_t order;
  std::uint64_t representative_order;
};

/// Class invariance over rows produced with SweepOptions::all_a.
std::vector<InvarianceFailure> check_class_invariance(const std::vector<ClassReport>& rows);

enum class NnForm { n2_plus_n_plus_1, n2_minus_n_plus_1, none };

std::string_view to_string(NnForm f) noexcept;

/// E(F_p) = Z_n x Z_n.
struct NnInstance {
  std::uint64_t p;
  ResidueClass residue_class;
  std::uint64_t n;
  NnForm form;
  /// p = 7 (mod 12), p = n^2 -+ n + 1, and none of p = n^2 + 1, (n -+ 1)^2.
  bool satisfies_refinement;

  friend bool operator==(const NnInstance&, const NnInstance&) = default;
};

NnInstance classify_nn_instance(std::uint64_t p, ResidueClass cls, std::uint64_t n) noexcept;

/// Every (p, class) with p <= bound whose group is Z_n x Z_n.
std::vector<NnInstance> find_nn_instances(std::uint64_t bound, unsigned jobs = 0);

}  // namespace bachet
