#include "bachet/field.hpp"

#include <algorithm>
#include <string>

namespace bachet {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (p <= 3) throw InvalidArgument("modulus must be a prime greater than 3, got " + std::to_string(p));
  if (p > kMaxPrime) throw InvalidArgument("modulus " + std::to_string(p) + " exceeds 2^32 - 1");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

namespace detail {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t old_r = static_cast<std::int64_t>(a % p);
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw NotInvertible("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  return reduce_signed(old_s, p);
}

}  // namespace detail

namespace {

void require_same_field(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw ModulusMismatch("operands live in F_" + std::to_string(lhs.modulus().value()) +
                          " and F_" + std::to_string(rhs.modulus().value()));
  }
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return from_canonical(detail::add_mod(value_, rhs.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return from_canonical(detail::sub_mod(value_, rhs.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return from_canonical(detail::mul_mod(value_, rhs.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-() const noexcept {
  return from_canonical(value_ == 0 ? 0 : modulus_.value() - value_, modulus_);
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw NotInvertible("zero has no inverse");
  return from_canonical(detail::inv_mod(value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::pow(std::uint64_t e) const noexcept {
  return from_canonical(detail::pow_mod(value_, e, modulus_.value()), modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value(); }

FieldElement fp_add(const FieldElement& lhs, const FieldElement& rhs) { return lhs + rhs; }
FieldElement fp_sub(const FieldElement& lhs, const FieldElement& rhs) { return lhs - rhs; }
FieldElement fp_mul(const FieldElement& lhs, const FieldElement& rhs) { return lhs * rhs; }
FieldElement fp_neg(const FieldElement& u) noexcept { return -u; }
FieldElement fp_inv(const FieldElement& u) { return u.inverse(); }

Chi chi_from_int(int v) {
  switch (v) {
    case -1: return Chi::minus_one;
    case 0: return Chi::zero;
    case 1: return Chi::plus_one;
    default: throw InvalidArgument("character value must be -1, 0 or 1");
  }
}

Chi chi(const FieldElement& u) noexcept {
  if (u.is_zero()) return Chi::zero;
  const std::uint64_t p = u.modulus().value();
  return detail::pow_mod(u.value(), (p - 1) / 2, p) == 1 ? Chi::plus_one : Chi::minus_one;
}

std::vector<FieldElement> sqrt_mod(const FieldElement& u) {
  const Prime prime = u.modulus();
  const std::uint64_t p = prime.value();
  if (u.is_zero()) return {u};
  if (chi(u) != Chi::plus_one) return {};

  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t root = 0;
  if (s == 1) {
    root = detail::pow_mod(u.value(), (p + 1) / 4, p);
  } else {
    std::uint64_t z = 2;
    while (detail::pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = detail::pow_mod(z, q, p);
    std::uint64_t t = detail::pow_mod(u.value(), q, p);
    root = detail::pow_mod(u.value(), (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      for (std::uint64_t t2 = t; t2 != 1; t2 = detail::mul_mod(t2, t2, p)) ++i;
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = detail::mul_mod(b, b, p);
      m = i;
      c = detail::mul_mod(b, b, p);
      t = detail::mul_mod(t, c, p);
      root = detail::mul_mod(root, b, p);
    }
  }
  const std::uint64_t other = p - root;
  return {FieldElement::from_canonical(std::min(root, other), prime),
          FieldElement::from_canonical(std::max(root, other), prime)};
}

std::vector<FieldElement> cube_roots(const FieldElement& u) {
  const Prime prime = u.modulus();
  const std::uint64_t p = prime.value();
  if (p > kCubeRootScanLimit) {
    throw BoundExceeded("cube-root scan limited to p <= " + std::to_string(kCubeRootScanLimit));
  }
  std::vector<FieldElement> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (detail::mul_mod(detail::mul_mod(x, x, p), x, p) == u.value()) {
      roots.push_back(FieldElement::from_canonical(x, prime));
    }
  }
  return roots;
}

FieldElement smallest_nonresidue(Prime p) {
  for (std::uint64_t g = 2;; ++g) {
    const auto candidate = FieldElement::from_canonical(g, p);
    if (chi(candidate) == Chi::minus_one) return candidate;
  }
}

std::vector<Prime> primes_in_class(std::uint64_t bound, std::uint64_t residue,
                                   std::uint64_t modulus) {
  if (modulus != 1 && modulus != 6 && modulus != 12) {
    throw InvalidArgument("modulus must be 1, 6 or 12");
  }
  if (modulus > 1) {
    std::uint64_t a = residue % modulus;
    std::uint64_t b = modulus;
    while (b != 0) {
      a %= b;
      std::swap(a, b);
    }
    if (a != 1) throw InvalidArgument("residue class is not coprime to the modulus");
  }
  if (bound < 5) throw InvalidArgument("bound must be at least 5");
  if (bound > kMaxPrime) throw InvalidArgument("bound exceeds 2^32 - 1");

  std::vector<bool> composite(bound + 1, false);
  std::vector<Prime> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    if (i >= 5 && (modulus == 1 || i % modulus == residue % modulus)) primes.emplace_back(i);
  }
  return primes;
}

SquareRootTable::SquareRootTable(Prime p) : p_(p), root_(p.value(), -1) {
  const std::uint64_t q = p.value();
  if (q > (std::uint64_t{1} << 31)) throw BoundExceeded("square-root table too large");
  for (std::uint64_t y = 0; y <= q / 2; ++y) {
    root_[detail::mul_mod(y, y, q)] = static_cast<std::int32_t>(y);
  }
}

std::vector<FieldElement> SquareRootTable::roots(const FieldElement& u) const {
  if (u.modulus() != p_) throw ModulusMismatch("square-root table built for another prime");
  const std::int64_t r = root_[u.value()];
  if (r < 0) return {};
  if (r == 0) return {FieldElement::from_canonical(0, p_)};
  return {FieldElement::from_canonical(static_cast<std::uint64_t>(r), p_),
          FieldElement::from_canonical(p_.value() - static_cast<std::uint64_t>(r), p_)};
}

}  // namespace bachet
