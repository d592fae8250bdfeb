#pragma once

#include <cstdint>
#include <optional>

#include "bachet/curve.hpp"
#include "bachet/field.hpp"
#include "bachet/kernels.hpp"

namespace bachet {

/// N = |E(F_p)| with trace b = p + 1 - N and t = |b|.
class CurveCount {
 public:
  /// Throws ConsistencyError if the Hasse bound b^2 <= 4p fails.
  CurveCount(Prime p, std::uint64_t order);

  Prime prime() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return n_; }
  std::int64_t trace() const noexcept {
    return static_cast<std::int64_t>(p_.value()) + 1 - static_cast<std::int64_t>(n_);
  }
  std::uint64_t abs_trace() const noexcept {
    const auto b = trace();
    return static_cast<std::uint64_t>(b < 0 ? -b : b);
  }

  friend bool operator==(const CurveCount&, const CurveCount&) = default;

 private:
  Prime p_;
  std::uint64_t n_;
};

/// Integer form of the Hasse bound: b^2 <= 4p.
bool within_hasse_bound(Prime p, std::int64_t trace) noexcept;

/// N = p + 1 + sum chi(x^3 + a^3).
CurveCount count_by_character_sum(const BachetCurve& curve, Exec exec = Exec::parallel);

/// N = |enumerate_points(curve)|. Throws BoundExceeded above kEnumerationBound.
CurveCount count_by_enumeration(const BachetCurve& curve);

/// Sum over x of chi(x^3 + 1). Requires p = 1 (mod 6); throws
/// ConsistencyError if the result is not 4 (mod 6).
std::int64_t chi_sum_x3_plus_1(Prime p, Exec exec = Exec::parallel);

enum class ResidueClass { QR, NQR };

const char* to_string(ResidueClass c) noexcept;

ResidueClass residue_class_of_a(const BachetCurve& curve) noexcept;

struct TwistedCurve {
  BachetCurve curve;
  CurveCount count;
};

/// A curve with its quadratic twist y^2 = x^3 + (g a)^3.
struct TwistPair {
  TwistedCurve original;
  TwistedCurve twist;
  FieldElement g;
};

/// Requires p = 1 (mod 6). g defaults to smallest_nonresidue(p); a supplied
/// g must be a non-residue (InvalidArgument otherwise).
TwistPair twist(const BachetCurve& curve, std::optional<FieldElement> g = std::nullopt,
                Exec exec = Exec::parallel);

}  // namespace bachet
