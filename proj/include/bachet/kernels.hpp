#pragma once

// O(p) and O(N) loops behind counting and structure. Each kernel has a
// serial reference and an OpenMP version; tests require them to agree and
// bench/ compares their throughput.

#include <cstdint>
#include <span>
#include <vector>

#include "bachet/curve.hpp"
#include "bachet/factor.hpp"

namespace bachet {

enum class Exec { serial, parallel };

namespace kernels {

/// Sum over x in F_p of chi(x^3 + coefficient), chi by Euler's criterion.
std::int64_t character_sum_serial(std::uint64_t p, std::uint64_t coefficient);
std::int64_t character_sum_parallel(std::uint64_t p, std::uint64_t coefficient);

/// Order of every point, same indexing as the input.
std::vector<std::uint64_t> point_orders_serial(std::span<const Point> points,
                                               const Factorization& group_order);
std::vector<std::uint64_t> point_orders_parallel(std::span<const Point> points,
                                                 const Factorization& group_order);

/// Group exponent: the least k with k·P = o for every listed point.
/// The points must be the whole group for this to be the exponent of E(F_p).
std::uint64_t exponent_serial(std::span<const Point> points, const Factorization& group_order);
std::uint64_t exponent_parallel(std::span<const Point> points, const Factorization& group_order);

}  // namespace kernels
}  // namespace bachet
