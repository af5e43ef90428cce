#pragma once

#include <vector>

#include "hypermod/extension.hpp"
#include "hypermod/matroid.hpp"

namespace hypermod {

/// The subspace attached to a proper flat F: dimension r(M/F) - 1 and
/// codimension r(M|F).
struct Subspace {
  ElementSet flat;
  int sdim = 0;
  int scodim = 0;
};

/// The hyperplane carried by element `label`, i.e. the subspace of cl({label}).
struct LabeledHyperplane {
  Element label = 0;
  Subspace subspace;
};

/// Throws std::invalid_argument if f is not a flat or is the whole ground set.
Subspace subspace_of(const Matroid& m, const ElementSet& f);

std::vector<LabeledHyperplane> labeled_hyperplanes(const Matroid& m);

/// Rank-4 view: points are rank-3 flats, lines rank-2 flats, planes rank-1
/// flats.
struct Classification {
  std::vector<ElementSet> points;
  std::vector<ElementSet> lines;
  std::vector<ElementSet> planes;
};

/// Requires a loopless rank-4 matroid.
Classification classify(const Matroid& m);

/// For any rank: proper flats grouped by subspace dimension; entry d holds
/// the flats whose subspaces have dimension d.
std::vector<std::vector<ElementSet>> subspaces_by_dimension(const Matroid& m);

/// Whether the subspaces of the given distinct proper flats meet in a point:
/// r(union) = r(M) - 1.
bool meet_at_point(const Matroid& m, const std::vector<ElementSet>& flats);

/// Every two distinct rank-3 flats meet in a rank-2 flat, i.e. every two
/// points of a rank-4 arrangement lie on a common line. Requires a loopless
/// rank-4 matroid.
AxiomReport check_line_connectivity(const Matroid& m);

/// Every rank-1 flat lies in one of the hyperplanes through the context's
/// line.
AxiomReport plane_cover_check(const Matroid& m, const ExtensionContext& ctx);

}  // namespace hypermod
