#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bachet/factor.hpp"
#include "bachet/field.hpp"

namespace bachet {

/// Largest p for which the full point set may be materialized.
inline constexpr std::uint64_t kEnumerationBound = 50'000;

/// y^2 = x^3 + a^3 over F_p, a != 0.
class BachetCurve {
 public:
  /// Throws InvalidArgument when a = 0 and ModulusMismatch when a lives in another field.
  BachetCurve(Prime p, FieldElement a);
  BachetCurve(Prime p, std::int64_t a) : BachetCurve(p, FieldElement(a, p)) {}

  Prime prime() const noexcept { return p_; }
  const FieldElement& a() const noexcept { return a_; }
  /// The constant term B = a^3.
  const FieldElement& coefficient() const noexcept { return b_; }

  /// x^3 + B
  FieldElement rhs(const FieldElement& x) const { return x * x * x + b_; }
  bool contains(const FieldElement& x, const FieldElement& y) const { return y * y == rhs(x); }

  /// Curves are equal when they have the same equation; a and a*w (w^3 = 1) coincide.
  friend bool operator==(const BachetCurve& l, const BachetCurve& r) noexcept {
    return l.p_ == r.p_ && l.b_ == r.b_;
  }

 private:
  Prime p_;
  FieldElement a_;
  FieldElement b_;
};

std::ostream& operator<<(std::ostream& os, const BachetCurve& e);

/// The point at infinity o or an affine point on a specific curve.
/// Affine points always satisfy the curve equation.
class Point {
 public:
  static Point infinity(const BachetCurve& curve) noexcept { return Point(curve); }
  /// Throws InvalidArgument when (x, y) is not on the curve.
  static Point affine(const BachetCurve& curve, const FieldElement& x, const FieldElement& y);
  static Point affine(const BachetCurve& curve, std::int64_t x, std::int64_t y) {
    return affine(curve, FieldElement(x, curve.prime()), FieldElement(y, curve.prime()));
  }

  bool is_infinity() const noexcept { return !coords_.has_value(); }
  const BachetCurve& curve() const noexcept { return curve_; }
  /// Precondition: !is_infinity().
  const FieldElement& x() const { return coords_->x; }
  const FieldElement& y() const { return coords_->y; }

  friend bool operator==(const Point& l, const Point& r) noexcept {
    return l.curve_ == r.curve_ && l.coords_ == r.coords_;
  }
  /// o first, then lexicographic by (x, y). Points of one curve only.
  friend std::strong_ordering operator<=>(const Point& l, const Point& r) noexcept;

 private:
  struct Coords {
    FieldElement x;
    FieldElement y;
    friend bool operator==(const Coords&, const Coords&) = default;
  };

  explicit Point(const BachetCurve& curve) noexcept : curve_(curve) {}
  Point(const BachetCurve& curve, const FieldElement& x, const FieldElement& y)
      : curve_(curve), coords_(Coords{x, y}) {}

  BachetCurve curve_;
  std::optional<Coords> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point negate(const Point& p);
/// Chord-and-tangent addition. Throws ModulusMismatch for points of different curves.
Point add(const Point& p, const Point& q);
Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p);
/// k·P by double-and-add.
Point scalar_mul(std::uint64_t k, const Point& p);
/// k·P = o, without leaving projective coordinates.
bool annihilates(std::uint64_t k, const Point& p);

/// Least k >= 1 with k·P = o, given the factorization of a multiple of the
/// order (normally N = |E(F_p)|). Throws ConsistencyError if N·P != o.
std::uint64_t point_order(const Point& p, const Factorization& group_order);

/// o followed by every affine point in (x, y) order. Throws BoundExceeded
/// for p > kEnumerationBound.
std::vector<Point> enumerate_points(const BachetCurve& curve);

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A rational solution of y^2 - x^3 = c.
class RationalSolution {
 public:
  /// Throws InvalidArgument unless y^2 - x^3 = c exactly.
  RationalSolution(Rational x, Rational y, BigInt c);

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const BigInt& c() const noexcept { return c_; }

  friend bool operator==(const RationalSolution&, const RationalSolution&) = default;

 private:
  Rational x_;
  Rational y_;
  BigInt c_;
};

/// Bachet's duplication: ((x^4 - 8cx) / 4y^2, (-x^6 - 20cx^3 + 8c^2) / 8y^3).
/// Throws InvalidArgument when y = 0.
RationalSolution bachet_duplicate(const RationalSolution& s);

}  // namespace bachet
