#pragma once

#include <cstdint>
#include <vector>

namespace bachet {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime factorization, primes ascending.
class Factorization {
 public:
  /// Trial division; n >= 1.
  explicit Factorization(std::uint64_t n);

  std::uint64_t value() const noexcept { return n_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t ipow(std::uint64_t base, unsigned e) noexcept;
/// Exponent of prime q in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t q) noexcept;

}  // namespace bachet
