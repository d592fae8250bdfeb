#include "bachet/kernels.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "bachet/field.hpp"

namespace bachet::kernels {

namespace {

std::uint64_t cube_plus(const detail::Barrett& mod, std::uint64_t x, std::uint64_t coefficient) {
  const std::uint64_t v = mod.mul(mod.mul(x, x), x) + coefficient;
  return v >= mod.modulus() ? v - mod.modulus() : v;
}

bool kills_all(std::span<const Point> points, std::uint64_t k) {
  return std::all_of(points.begin(), points.end(),
                     [k](const Point& p) { return annihilates(k, p); });
}

// Blocked so a counterexample stops the scan early, like the serial all_of.
bool kills_all_parallel(std::span<const Point> points, std::uint64_t k) {
  const auto total = static_cast<std::ptrdiff_t>(points.size());
  const std::ptrdiff_t block = 256 * std::max(1, omp_get_max_threads());
  for (std::ptrdiff_t start = 0; start < total; start += block) {
    const std::ptrdiff_t stop = std::min(total, start + block);
    bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(static)
    for (std::ptrdiff_t i = start; i < stop; ++i) {
      ok = ok && annihilates(k, points[static_cast<std::size_t>(i)]);
    }
    if (!ok) return false;
  }
  return true;
}

template <typename KillsAll>
std::uint64_t strip_exponent(std::span<const Point> points, const Factorization& group_order,
                             KillsAll kills) {
  std::uint64_t exponent = group_order.value();
  if (!kills(points, exponent)) {
    throw ConsistencyError("N*P != o for some point; N is not the group order");
  }
  for (const auto& [prime, multiplicity] : group_order.factors()) {
    for (unsigned i = 0; i < multiplicity; ++i) {
      if (!kills(points, exponent / prime)) break;
      exponent /= prime;
    }
  }
  return exponent;
}

}  // namespace

std::int64_t character_sum_serial(std::uint64_t p, std::uint64_t coefficient) {
  const detail::Barrett mod(p);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) sum += mod.legendre(cube_plus(mod, x, coefficient));
  return sum;
}

std::int64_t character_sum_parallel(std::uint64_t p, std::uint64_t coefficient) {
  const detail::Barrett mod(p);
  const auto count = static_cast<std::int64_t>(p);
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t x = 0; x < count; ++x) {
    sum += mod.legendre(cube_plus(mod, static_cast<std::uint64_t>(x), coefficient));
  }
  return sum;
}

std::vector<std::uint64_t> point_orders_serial(std::span<const Point> points,
                                               const Factorization& group_order) {
  std::vector<std::uint64_t> orders;
  orders.reserve(points.size());
  for (const Point& p : points) orders.push_back(point_order(p, group_order));
  return orders;
}

std::vector<std::uint64_t> point_orders_parallel(std::span<const Point> points,
                                                 const Factorization& group_order) {
  std::vector<std::uint64_t> orders(points.size());
  std::exception_ptr failure;
  const auto total = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      orders[idx] = point_order(points[idx], group_order);
    } catch (...) {
#pragma omp critical(bachet_point_orders)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return orders;
}

std::uint64_t exponent_serial(std::span<const Point> points, const Factorization& group_order) {
  return strip_exponent(points, group_order, kills_all);
}

std::uint64_t exponent_parallel(std::span<const Point> points, const Factorization& group_order) {
  return strip_exponent(points, group_order, kills_all_parallel);
}

}  // namespace bachet::kernels
