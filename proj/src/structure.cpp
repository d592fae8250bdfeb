#include "bachet/structure.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bachet/factor.hpp"
#include "bachet/kernels.hpp"

namespace bachet {

GroupStructure::GroupStructure(std::uint64_t n, std::uint64_t nm) : n_(n), nm_(nm) {
  if (n == 0 || nm == 0) throw InvalidArgument("invariant factors must be positive");
}

bool GroupStructure::consistent_with(Prime p) const noexcept {
  return nm_ % n_ == 0 && (p.value() - 1) % n_ == 0;
}

namespace {

void require_consistent(const GroupStructure& s, Prime p, std::uint64_t order) {
  if (s.order() != order || !s.consistent_with(p)) {
    throw ConsistencyError("structure C_" + std::to_string(s.n()) + " x C_" +
                           std::to_string(s.nm()) + " is impossible for N = " +
                           std::to_string(order) + ", p = " + std::to_string(p.value()));
  }
  if (p.value() % 6 == 5 && (s.n() != 1 || order != p.value() + 1)) {
    throw ConsistencyError("p = 5 (mod 6) must give the cyclic group of order p + 1");
  }
}

}  // namespace

GroupStructure structure_exhaustive(const BachetCurve& curve, Exec exec) {
  const std::vector<Point> points = enumerate_points(curve);
  const Factorization order(points.size());
  const std::uint64_t exponent = exec == Exec::parallel ? kernels::exponent_parallel(points, order)
                                                        : kernels::exponent_serial(points, order);
  GroupStructure s(order.value() / exponent, exponent);
  require_consistent(s, curve.prime(), order.value());
  return s;
}

namespace {

// True when r is a multiple of g, where g has order prime^exponent.
// Pohlig-Hellman digit by digit; each digit found by a scan of <prime^(exponent-1) g>.
bool in_cyclic_subgroup(const Point& r, const Point& g, std::uint64_t prime, unsigned exponent) {
  if (exponent == 0) return r.is_infinity();
  const Point gamma = scalar_mul(ipow(prime, exponent - 1), g);
  std::uint64_t log = 0;
  std::uint64_t digit_weight = 1;
  for (unsigned k = 0; k < exponent; ++k) {
    const Point h = scalar_mul(ipow(prime, exponent - 1 - k), r + negate(scalar_mul(log, g)));
    Point probe = Point::infinity(g.curve());
    std::uint64_t digit = 0;
    while (digit < prime && !(probe == h)) {
      probe = probe + gamma;
      ++digit;
    }
    if (digit == prime) return false;
    log += digit * digit_weight;
    digit_weight *= prime;
  }
  return scalar_mul(log, g) == r;
}

// Least c with prime^c q in <g>.
unsigned subgroup_index_exponent(const Point& q, const Point& g, std::uint64_t prime,
                                 unsigned exponent) {
  Point r = q;
  unsigned c = 0;
  while (!in_cyclic_subgroup(r, g, prime, exponent)) {
    r = scalar_mul(prime, r);
    ++c;
  }
  return c;
}

// Tracks one l-Sylow subgroup S of order l^v: the sampled element of largest
// order (l^a) and whether some pair of samples generates all of S.
struct SylowTracker {
  std::uint64_t prime;
  unsigned full;  // v
  std::optional<Point> generator;
  unsigned generator_exponent = 0;
  bool verified = false;

  void observe(const Point& q, unsigned q_exponent) {
    if (verified) return;
    if (!generator || q_exponent > generator_exponent) {
      std::optional<Point> previous = generator;
      generator = q;
      generator_exponent = q_exponent;
      const unsigned c =
          previous ? subgroup_index_exponent(*previous, q, prime, q_exponent) : 0;
      verified = generator_exponent + c == full;
      return;
    }
    verified = generator_exponent + subgroup_index_exponent(q, *generator, prime,
                                                            generator_exponent) ==
               full;
  }
};

}  // namespace

RandomizedStructure structure_randomized(const BachetCurve& curve, unsigned sample_budget,
                                         std::mt19937_64& rng) {
  const Prime prime = curve.prime();
  const std::uint64_t p = prime.value();
  const std::uint64_t group_order = count_by_character_sum(curve, Exec::serial).order();
  const Factorization factored(group_order);

  std::vector<SylowTracker> sylows;
  for (const auto& [q, v] : factored.factors()) sylows.push_back({q, v, std::nullopt});

  std::uniform_int_distribution<std::uint64_t> pick_x(0, p - 1);
  std::uint64_t exponent = 1;
  unsigned samples = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 64 * std::uint64_t{sample_budget} + 64;
  auto all_verified = [&] {
    return std::all_of(sylows.begin(), sylows.end(), [](const auto& s) { return s.verified; });
  };

  while (samples < sample_budget && attempts < max_attempts && !all_verified()) {
    ++attempts;
    const FieldElement x = FieldElement::from_canonical(pick_x(rng), prime);
    const std::vector<FieldElement> ys = sqrt_mod(curve.rhs(x));
    if (ys.empty()) continue;
    const FieldElement& y = ys[ys.size() == 1 ? 0 : rng() % 2];
    const Point point = Point::affine(curve, x, y);
    ++samples;

    const std::uint64_t order = point_order(point, factored);
    exponent = lcm(exponent, order);
    for (SylowTracker& sylow : sylows) {
      const Point projected = scalar_mul(group_order / ipow(sylow.prime, sylow.full), point);
      sylow.observe(projected, valuation(order, sylow.prime));
    }
  }

  GroupStructure candidate(group_order / exponent, exponent);
  bool verified = all_verified() && candidate.order() == group_order &&
                  candidate.consistent_with(prime);
  if (verified) {
    std::uint64_t pinned_exponent = 1;
    for (const SylowTracker& s : sylows) pinned_exponent *= ipow(s.prime, s.generator_exponent);
    if (pinned_exponent != exponent) {
      throw ConsistencyError("Sylow generators disagree with the sampled exponent");
    }
    require_consistent(candidate, prime, group_order);
  }
  return {candidate, verified, samples};
}

RandomizedStructure structure_randomized(const BachetCurve& curve, unsigned sample_budget,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return structure_randomized(curve, sample_budget, rng);
}

TorsionCensus count_order3(const BachetCurve& curve) {
  const Prime p = curve.prime();
  const FieldElement& coefficient = curve.coefficient();
  // 3-division polynomial for A = 0: 3x^4 + 12Bx = 3x (x^3 + 4B).
  auto count = static_cast<unsigned>(sqrt_mod(coefficient).size());
  const FieldElement four(4, p);
  for (const FieldElement& x : cube_roots(-(four * coefficient))) {
    count += static_cast<unsigned>(sqrt_mod(curve.rhs(x)).size());
  }
  if (count != 0 && count != 2 && count != 8) {
    throw ConsistencyError("impossible number of order-3 points: " + std::to_string(count));
  }
  return {count, count == 8};
}

}  // namespace bachet
