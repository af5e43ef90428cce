#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypermod/matroid.hpp"

namespace hypermod {

using Coordinate = std::int64_t;
using PointVector = std::vector<Coordinate>;

/// Homogeneous coordinate vectors over the prime field GF(prime).
struct PointConfig {
  std::int64_t prime = 2;
  std::size_t dim = 0;
  std::vector<PointVector> points;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

bool is_prime(std::int64_t p);

/// Reduces every coordinate into [0, p) and scales so the first nonzero
/// coordinate is 1. Throws std::invalid_argument for a non-prime field, a
/// wrong arity or a zero vector.
PointConfig normalized(PointConfig cfg);

/// Index pairs (i < j) of points with equal normalized coordinates.
std::vector<std::pair<std::size_t, std::size_t>> parallel_points(const PointConfig& cfg);

/// Rank of the given vectors over GF(p), by Gaussian elimination.
int matrix_rank(const std::vector<PointVector>& rows, std::int64_t p);

/// The matroid whose flats are the sets of points inside GF(p)-linear spans,
/// generated grade by grade as closures of (flat + one point).
Matroid matroid_from_points(const PointConfig& cfg);

/// All normalized nonzero vectors of GF(q)^dim, in lexicographic order.
std::vector<PointVector> projective_points(std::int64_t q, std::size_t dim);

/// The point configuration of PG(3,q), elements in lexicographic order of
/// their normalized coordinates.
PointConfig pg3_points(std::int64_t q);

/// PG(3,q) for prime q. Throws std::invalid_argument for non-prime q and for
/// q whose point count exceeds the element capacity.
Matroid pg3(std::int64_t q);

/// U_{r,n}: every subset of size below r is a flat, plus the ground set.
Matroid uniform(int r, std::size_t n);

/// The Vamos matroid on 0..7.
Matroid vamos();

}  // namespace hypermod
