#include "bachet/curve.hpp"

#include <bit>
#include <string>

namespace bachet {

BachetCurve::BachetCurve(Prime p, FieldElement a) : p_(p), a_(a), b_(a * a * a) {
  if (a.modulus() != p) throw ModulusMismatch("coefficient a is not an element of F_p");
  if (a.is_zero()) throw InvalidArgument("a must be nonzero (the curve would be singular)");
}

std::ostream& operator<<(std::ostream& os, const BachetCurve& e) {
  return os << "y^2 = x^3 + " << e.a() << "^3 over F_" << e.prime().value();
}

Point Point::affine(const BachetCurve& curve, const FieldElement& x, const FieldElement& y) {
  if (x.modulus() != curve.prime() || y.modulus() != curve.prime()) {
    throw ModulusMismatch("point coordinates are not elements of the curve's field");
  }
  if (!curve.contains(x, y)) {
    throw InvalidArgument("(" + std::to_string(x.value()) + ", " + std::to_string(y.value()) +
                          ") is not on the curve");
  }
  return Point(curve, x, y);
}

std::strong_ordering operator<=>(const Point& l, const Point& r) noexcept {
  if (l.is_infinity() || r.is_infinity()) {
    return r.is_infinity() <=> l.is_infinity();
  }
  if (auto c = l.x() <=> r.x(); c != 0) return c;
  return l.y() <=> r.y();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  if (p.is_infinity()) return os << 'o';
  return os << '(' << p.x() << ',' << p.y() << ')';
}

Point negate(const Point& p) {
  if (p.is_infinity()) return p;
  return Point::affine(p.curve(), p.x(), -p.y());
}

Point add(const Point& p, const Point& q) {
  if (!(p.curve() == q.curve())) throw ModulusMismatch("points lie on different curves");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  const FieldElement& x1 = p.x();
  const FieldElement& y1 = p.y();
  const FieldElement& x2 = q.x();
  const FieldElement& y2 = q.y();
  // Covers P + (-P) and the doubling of a point with y = 0.
  if (x1 == x2 && (y1 + y2).is_zero()) return Point::infinity(p.curve());

  const Prime prime = p.curve().prime();
  FieldElement slope(0, prime);
  if (x1 == x2) {
    // Tangent; A = 0 on a Bachet curve.
    const FieldElement three(3, prime);
    slope = three * x1 * x1 * (y1 + y1).inverse();
  } else {
    slope = (y2 - y1) * (x2 - x1).inverse();
  }
  const FieldElement x3 = slope * slope - x1 - x2;
  const FieldElement y3 = slope * (x1 - x3) - y1;
  return Point::affine(p.curve(), x3, y3);
}

Point operator+(const Point& p, const Point& q) { return add(p, q); }
Point operator-(const Point& p) { return negate(p); }

namespace {

// Jacobian coordinates: (X, Y, Z) stands for (X / Z^2, Y / Z^3); Z = 0 is o.
struct Jacobian {
  std::uint64_t x;
  std::uint64_t y;
  std::uint64_t z;
};

class JacobianArithmetic {
 public:
  explicit JacobianArithmetic(std::uint64_t p) noexcept : p_(p), barrett_(p) {}

  Jacobian twice(const Jacobian& a) const noexcept {
    if (a.z == 0 || a.y == 0) return {1, 1, 0};
    const std::uint64_t xx = mul(a.x, a.x);
    const std::uint64_t yy = mul(a.y, a.y);
    const std::uint64_t yyyy = mul(yy, yy);
    const std::uint64_t t = add(a.x, yy);
    const std::uint64_t d = dbl(sub(sub(mul(t, t), xx), yyyy));
    const std::uint64_t e = add(dbl(xx), xx);
    const std::uint64_t x3 = sub(mul(e, e), dbl(d));
    const std::uint64_t y3 = sub(mul(e, sub(d, x3)), dbl(dbl(dbl(yyyy))));
    return {x3, y3, dbl(mul(a.y, a.z))};
  }

  Jacobian plus_affine(const Jacobian& a, std::uint64_t x2, std::uint64_t y2) const noexcept {
    if (a.z == 0) return {x2, y2, 1};
    const std::uint64_t zz = mul(a.z, a.z);
    const std::uint64_t h = sub(mul(x2, zz), a.x);
    const std::uint64_t r = sub(mul(y2, mul(a.z, zz)), a.y);
    if (h == 0) return r == 0 ? twice(a) : Jacobian{1, 1, 0};
    const std::uint64_t hh = mul(h, h);
    const std::uint64_t hhh = mul(h, hh);
    const std::uint64_t v = mul(a.x, hh);
    const std::uint64_t x3 = sub(sub(mul(r, r), hhh), dbl(v));
    const std::uint64_t y3 = sub(mul(r, sub(v, x3)), mul(a.y, hhh));
    return {x3, y3, mul(a.z, h)};
  }

 private:
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return barrett_.mul(a, b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    return detail::add_mod(a, b, p_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return detail::sub_mod(a, b, p_);
  }
  std::uint64_t dbl(std::uint64_t a) const noexcept { return add(a, a); }

  std::uint64_t p_;
  detail::Barrett barrett_;
};

Jacobian multiply(std::uint64_t k, const Point& p) {
  Jacobian acc{1, 1, 0};
  if (k == 0 || p.is_infinity()) return acc;
  const JacobianArithmetic arith(p.curve().prime().value());
  const std::uint64_t px = p.x().value();
  const std::uint64_t py = p.y().value();
  for (int bit = 63 - std::countl_zero(k); bit >= 0; --bit) {
    acc = arith.twice(acc);
    if ((k >> bit) & 1U) acc = arith.plus_affine(acc, px, py);
  }
  return acc;
}

}  // namespace

Point scalar_mul(std::uint64_t k, const Point& p) {
  const Jacobian acc = multiply(k, p);
  if (acc.z == 0) return Point::infinity(p.curve());
  const Prime prime = p.curve().prime();
  const std::uint64_t q = prime.value();
  const std::uint64_t zi = detail::inv_mod(acc.z, q);
  const std::uint64_t zi2 = detail::mul_mod(zi, zi, q);
  return Point::affine(p.curve(),
                       FieldElement::from_canonical(detail::mul_mod(acc.x, zi2, q), prime),
                       FieldElement::from_canonical(
                           detail::mul_mod(acc.y, detail::mul_mod(zi2, zi, q), q), prime));
}

bool annihilates(std::uint64_t k, const Point& p) { return multiply(k, p).z == 0; }

std::uint64_t point_order(const Point& p, const Factorization& group_order) {
  std::uint64_t order = group_order.value();
  if (!annihilates(order, p)) {
    throw ConsistencyError("N*P != o for N = " + std::to_string(order));
  }
  for (const auto& [prime, exponent] : group_order.factors()) {
    for (unsigned i = 0; i < exponent; ++i) {
      if (!annihilates(order / prime, p)) break;
      order /= prime;
    }
  }
  return order;
}

std::vector<Point> enumerate_points(const BachetCurve& curve) {
  const Prime prime = curve.prime();
  const std::uint64_t p = prime.value();
  if (p > kEnumerationBound) {
    throw BoundExceeded("point enumeration limited to p <= " + std::to_string(kEnumerationBound));
  }
  const SquareRootTable table(prime);
  const std::uint64_t coefficient = curve.coefficient().value();

  std::vector<Point> points;
  points.reserve(2 * p + 1);
  points.push_back(Point::infinity(curve));
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t u =
        detail::add_mod(detail::mul_mod(detail::mul_mod(x, x, p), x, p), coefficient, p);
    const std::int64_t r = table.smaller_root(u);
    if (r < 0) continue;
    const auto fx = FieldElement::from_canonical(x, prime);
    const auto ry = static_cast<std::uint64_t>(r);
    points.push_back(Point::affine(curve, fx, FieldElement::from_canonical(ry, prime)));
    if (ry != 0) {
      points.push_back(Point::affine(curve, fx, FieldElement::from_canonical(p - ry, prime)));
    }
  }
  return points;
}

RationalSolution::RationalSolution(Rational x, Rational y, BigInt c)
    : x_(std::move(x)), y_(std::move(y)), c_(std::move(c)) {
  if (y_ * y_ - x_ * x_ * x_ != Rational(c_)) {
    throw InvalidArgument("(x, y) does not satisfy y^2 - x^3 = c");
  }
}

RationalSolution bachet_duplicate(const RationalSolution& s) {
  const Rational& x = s.x();
  const Rational& y = s.y();
  const Rational c(s.c());
  if (y == 0) throw InvalidArgument("duplication is undefined for y = 0");

  const Rational x3 = x * x * x;
  const Rational x_new = (x3 * x - 8 * c * x) / (4 * y * y);
  const Rational y_new = (-x3 * x3 - 20 * c * x3 + 8 * c * c) / (8 * y * y * y);
  return RationalSolution(x_new, y_new, s.c());
}

}  // namespace bachet
