#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bachet/error.hpp"

namespace bachet {

/// Largest modulus accepted; keeps every product of two residues in 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;

/// Upper limit of the exhaustive cube-root scan.
inline constexpr std::uint64_t kCubeRootScanLimit = 1'000'000;

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p > 3, checked at construction.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint64_t p_;
};

namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return (a * b) % p;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

/// Extended Euclid. Requires gcd(a, p) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) noexcept {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

/// Barrett reduction for a fixed modulus below 2^32. Used by the O(p) kernels
/// where hardware division dominates otherwise.
class Barrett {
 public:
  explicit Barrett(std::uint64_t p) noexcept
      : p_(p), m_(static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p)) {}

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce(a * b); }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mul(r, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return r;
  }

  /// Euler's criterion as -1, 0, +1.
  int legendre(std::uint64_t u) const noexcept {
    if (u == 0) return 0;
    return pow(u, (p_ - 1) / 2) == 1 ? 1 : -1;
  }

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

}  // namespace detail

/// Canonical residue in [0, p).
class FieldElement {
 public:
  FieldElement(std::int64_t value, Prime modulus) noexcept
      : value_(detail::reduce_signed(value, modulus.value())), modulus_(modulus) {}

  static FieldElement from_canonical(std::uint64_t value, Prime modulus) noexcept {
    return FieldElement(value, modulus, Canonical{});
  }

  std::uint64_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Throws NotInvertible for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const noexcept;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  /// Orders by residue; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& l, const FieldElement& r) noexcept {
    if (auto c = l.modulus_ <=> r.modulus_; c != 0) return c;
    return l.value_ <=> r.value_;
  }

 private:
  struct Canonical {};
  FieldElement(std::uint64_t value, Prime modulus, Canonical) noexcept
      : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  Prime modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

FieldElement fp_add(const FieldElement& lhs, const FieldElement& rhs);
FieldElement fp_sub(const FieldElement& lhs, const FieldElement& rhs);
FieldElement fp_mul(const FieldElement& lhs, const FieldElement& rhs);
FieldElement fp_neg(const FieldElement& u) noexcept;
FieldElement fp_inv(const FieldElement& u);

/// Quadratic character (Legendre symbol).
enum class Chi : int { minus_one = -1, zero = 0, plus_one = 1 };

constexpr int to_int(Chi c) noexcept { return static_cast<int>(c); }
Chi chi_from_int(int v);

/// Legendre symbol by Euler's criterion.
Chi chi(const FieldElement& u) noexcept;

/// All y with y^2 = u, ascending. Tonelli-Shanks.
std::vector<FieldElement> sqrt_mod(const FieldElement& u);

/// All x with x^3 = u, ascending. Exhaustive scan; throws BoundExceeded
/// for p > kCubeRootScanLimit.
std::vector<FieldElement> cube_roots(const FieldElement& u);

/// Least g >= 2 with chi(g) = -1.
FieldElement smallest_nonresidue(Prime p);

/// Primes 5 <= p <= bound with p = residue (mod modulus), ascending.
/// modulus must be 1, 6 or 12; modulus 1 selects every prime.
std::vector<Prime> primes_in_class(std::uint64_t bound, std::uint64_t residue,
                                   std::uint64_t modulus);

/// Square roots of every residue for one prime, built once per curve
/// enumeration. roots(u) answers in O(1) what sqrt_mod answers in O(log^2 p).
class SquareRootTable {
 public:
  explicit SquareRootTable(Prime p);

  Prime prime() const noexcept { return p_; }
  /// The smaller root of u, or -1 when u is a non-residue.
  std::int64_t smaller_root(std::uint64_t u) const noexcept { return root_[u]; }
  std::vector<FieldElement> roots(const FieldElement& u) const;

 private:
  Prime p_;
  std::vector<std::int32_t> root_;
};

}  // namespace bachet
