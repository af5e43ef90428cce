// Named fixtures shared by the test binaries.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypermod/extension.hpp"
#include "hypermod/matroid.hpp"
#include "hypermod/realize.hpp"

namespace fixtures {

using hypermod::ElementSet;
using hypermod::Matroid;

inline Matroid pg3_minus(std::int64_t q, const ElementSet& removed) {
  return hypermod::deletion(hypermod::pg3(q), removed).matroid;
}

/// A cone point joined to a Fano plane: e1 plus the seven points of GF(2)^4
/// with first coordinate 0. Rank 4, modular, separable.
inline Matroid cone_fano() {
  hypermod::PointConfig cfg{2, 4, {{1, 0, 0, 0}}};
  for (const auto& v : hypermod::projective_points(2, 3)) cfg.points.push_back({0, v[0], v[1], v[2]});
  return hypermod::matroid_from_points(cfg);
}

/// A point next to a three-point line, rank 3.
inline Matroid point_plus_line() {
  return hypermod::matroid_from_points({3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}});
}

/// The eight points of GF(2)^4 with first coordinate 1: an affine 3-space.
inline Matroid ag32() {
  hypermod::PointConfig cfg{2, 4, {}};
  for (const auto& v : hypermod::projective_points(2, 4))
    if (v[0] == 1) cfg.points.push_back(v);
  return hypermod::matroid_from_points(cfg);
}

/// Two U(1,2) blocks: elements {0,1} parallel, {2,3} parallel.
inline Matroid two_parallel_pairs() {
  return hypermod::matroid_from_points({2, 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}});
}

/// Rank-3 configuration over GF(3) with two lines meeting in c = element 0:
/// f-line {0,1,2} and l-line {0,3,4}. Their meet {0} is a degenerate flat.
inline Matroid two_lines_through_point() {
  return hypermod::matroid_from_points({3, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}}});
}

struct Named {
  std::string name;
  Matroid matroid;
};

/// Loopless rank-4 hypermodular fixtures used by the property suites.
inline std::vector<Named> rank4_hypermodular() {
  std::vector<Named> out;
  out.push_back({"pg3(2)", hypermod::pg3(2)});
  out.push_back({"pg3(2)-0", pg3_minus(2, {0})});
  out.push_back({"pg3(2)-9", pg3_minus(2, {9})});
  out.push_back({"pg3(3)", hypermod::pg3(3)});
  out.push_back({"pg3(3)-0", pg3_minus(3, {0})});
  out.push_back({"pg3(3)-0,1", pg3_minus(3, {0, 1})});
  out.push_back({"pg3(3)-5,30", pg3_minus(3, {5, 30})});
  out.push_back({"U(4,4)", hypermod::uniform(4, 4)});
  out.push_back({"cone+fano", cone_fano()});
  const Matroid deleted = pg3_minus(3, {0, 1});
  const auto search = hypermod::find_extendable_flag(deleted);
  out.push_back({"pg3(3)-0,1 +1", hypermod::extend_once(deleted, *search.context).extended});
  return out;
}

/// Every loopless rank-4 fixture, hypermodular or not.
inline std::vector<Named> rank4_loopless() {
  auto out = rank4_hypermodular();
  out.push_back({"vamos", hypermod::vamos()});
  out.push_back({"U(4,5)", hypermod::uniform(4, 5)});
  out.push_back({"U(4,6)", hypermod::uniform(4, 6)});
  out.push_back({"ag(3,2)", ag32()});
  out.push_back({"pg3(2)-0,1", pg3_minus(2, {0, 1})});
  out.push_back({"pg3(2)|0..10", hypermod::restriction(hypermod::pg3(2), ElementSet::from_range(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10})).matroid});
  return out;
}

}  // namespace fixtures
