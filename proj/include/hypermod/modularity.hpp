#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypermod/matroid.hpp"

namespace hypermod {

using FlatPair = std::pair<ElementSet, ElementSet>;

/// r(A) + r(B) - r(A u B) - r(A n B) for flats A, B. Throws
/// std::invalid_argument if either argument is not a flat.
int modular_defect(const Matroid& m, const ElementSet& a, const ElementSet& b);

bool is_modular_pair(const Matroid& m, const ElementSet& a, const ElementSet& b);

/// Modular with every flat of m.
bool is_modular_flat(const Matroid& m, const ElementSet& f);

bool is_modular(const Matroid& m);

/// Every pair of corank-1 flats is modular. Throws std::invalid_argument for
/// rank below 3.
bool is_hypermodular(const Matroid& m);

/// First pair of corank-1 flats with positive defect, in canonical order.
/// Requires rank >= 3.
std::optional<FlatPair> hypermodularity_witness(const Matroid& m);

struct DefectReport {
  /// Unordered flat pairs (smaller flat first) with positive defect.
  std::map<FlatPair, int> pair_defects;
  long long total = 0;
  /// Disjoint (rank-3, rank-2) flat pairs.
  std::vector<FlatPair> disjoint_flags;
};

/// Sum of modular defects over all unordered pairs of distinct flats.
DefectReport total_modular_defect(const Matroid& m);

/// All disjoint (rank-3 flat, rank-2 flat) pairs, ordered by the rank-3 flat
/// and then the rank-2 flat. Requires a loopless rank-4 matroid.
std::vector<FlatPair> disjoint_rank32_pairs(const Matroid& m);

}  // namespace hypermod
