#include "bachet/counting.hpp"

#include <string>

namespace bachet {

bool within_hasse_bound(Prime p, std::int64_t trace) noexcept {
  const auto b = static_cast<unsigned __int128>(trace < 0 ? -trace : trace);
  return b * b <= 4 * static_cast<unsigned __int128>(p.value());
}

CurveCount::CurveCount(Prime p, std::uint64_t order) : p_(p), n_(order) {
  if (!within_hasse_bound(p, trace())) {
    throw ConsistencyError("Hasse bound violated: N = " + std::to_string(order) + " for p = " +
                           std::to_string(p.value()));
  }
}

namespace {

std::int64_t character_sum(std::uint64_t p, std::uint64_t coefficient, Exec exec) {
  return exec == Exec::parallel ? kernels::character_sum_parallel(p, coefficient)
                                : kernels::character_sum_serial(p, coefficient);
}

}  // namespace

CurveCount count_by_character_sum(const BachetCurve& curve, Exec exec) {
  const std::uint64_t p = curve.prime().value();
  const std::int64_t sum = character_sum(p, curve.coefficient().value(), exec);
  return CurveCount(curve.prime(), static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum));
}

CurveCount count_by_enumeration(const BachetCurve& curve) {
  return CurveCount(curve.prime(), enumerate_points(curve).size());
}

std::int64_t chi_sum_x3_plus_1(Prime p, Exec exec) {
  if (p.value() % 6 != 1) {
    throw InvalidArgument("the x^3 + 1 character sum lemma needs p = 1 (mod 6), got " +
                          std::to_string(p.value()));
  }
  const std::int64_t sum = character_sum(p.value(), 1, exec);
  if (((sum % 6) + 6) % 6 != 4) {
    throw ConsistencyError("sum of chi(x^3 + 1) = " + std::to_string(sum) + " is not 4 mod 6");
  }
  return sum;
}

const char* to_string(ResidueClass c) noexcept { return c == ResidueClass::QR ? "QR" : "NQR"; }

ResidueClass residue_class_of_a(const BachetCurve& curve) noexcept {
  return chi(curve.a()) == Chi::plus_one ? ResidueClass::QR : ResidueClass::NQR;
}

TwistPair twist(const BachetCurve& curve, std::optional<FieldElement> g, Exec exec) {
  const Prime p = curve.prime();
  if (p.value() % 6 != 1) {
    throw InvalidArgument("twist pairing is stated for p = 1 (mod 6), got " +
                          std::to_string(p.value()));
  }
  const FieldElement factor = g.value_or(smallest_nonresidue(p));
  if (factor.modulus() != p) throw ModulusMismatch("twist factor g is not an element of F_p");
  if (chi(factor) != Chi::minus_one) {
    throw InvalidArgument("twist factor g = " + std::to_string(factor.value()) +
                          " is not a quadratic non-residue");
  }
  const BachetCurve twisted(p, factor * curve.a());
  TwistPair pair{{curve, count_by_character_sum(curve, exec)},
                 {twisted, count_by_character_sum(twisted, exec)},
                 factor};
  if (pair.twist.count.trace() != -pair.original.count.trace()) {
    throw ConsistencyError("twist trace is not the negated trace");
  }
  return pair;
}

}  // namespace bachet
