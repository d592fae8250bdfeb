#include "bachet/factor.hpp"

#include <utility>

#include "bachet/error.hpp"

namespace bachet {

Factorization::Factorization(std::uint64_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e != 0) factors_.push_back({d, e});
  }
  if (n > 1) factors_.push_back({n, 1});
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) noexcept { return a / gcd(a, b) * b; }

std::uint64_t ipow(std::uint64_t base, unsigned e) noexcept {
  std::uint64_t r = 1;
  while (e-- != 0) r *= base;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) noexcept {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace bachet
