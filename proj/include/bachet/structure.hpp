#pragma once

#include <cstdint>
#include <random>

#include "bachet/counting.hpp"
#include "bachet/curve.hpp"

namespace bachet {

/// E(F_p) = C_n x C_{nm}, n | nm, n * nm = N.
class GroupStructure {
 public:
  /// Throws InvalidArgument when n or nm is zero.
  GroupStructure(std::uint64_t n, std::uint64_t nm);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t nm() const noexcept { return nm_; }
  std::uint64_t m() const noexcept { return nm_ / n_; }
  std::uint64_t order() const noexcept { return n_ * nm_; }
  bool is_cyclic() const noexcept { return n_ == 1; }
  /// n | nm and n | p - 1.
  bool consistent_with(Prime p) const noexcept;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;

 private:
  std::uint64_t n_;
  std::uint64_t nm_;
};

/// Exponent over the full point set. Throws BoundExceeded above kEnumerationBound.
GroupStructure structure_exhaustive(const BachetCurve& curve, Exec exec = Exec::parallel);

struct RandomizedStructure {
  GroupStructure structure;
  /// False when the budget ran out before every Sylow subgroup was pinned;
  /// structure is then the best candidate (N / lambda, lambda).
  bool verified;
  unsigned samples_used;
};

inline constexpr unsigned kDefaultSampleBudget = 200;

/// Random points accumulate the exponent lambda; the answer is verified when,
/// for every prime l | N, two sampled points generate the whole l-Sylow subgroup.
RandomizedStructure structure_randomized(const BachetCurve& curve, unsigned sample_budget,
                                         std::mt19937_64& rng);
RandomizedStructure structure_randomized(const BachetCurve& curve, unsigned sample_budget,
                                         std::uint64_t seed = 0);

struct TorsionCensus {
  unsigned order3_count;  // 0, 2 or 8
  bool full_3torsion;
};

/// Points of order 3 from the 3-division condition x (x^3 + 4B) = 0.
TorsionCensus count_order3(const BachetCurve& curve);

}  // namespace bachet
