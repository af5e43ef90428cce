#include "hypermod/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypermod {

namespace {

void require_loopless_rank4(const Matroid& m) {
  if (m.rank() != 4) {
    throw std::invalid_argument("arrangement classification needs rank 4, got rank " +
                                std::to_string(m.rank()));
  }
  if (!m.is_loopless()) throw std::invalid_argument("arrangement needs a loopless matroid");
}

}  // namespace

Subspace subspace_of(const Matroid& m, const ElementSet& f) {
  const auto g = m.grade_of(f);
  if (!g) throw std::invalid_argument(f.to_string() + " is not a flat");
  if (f == m.ground()) throw std::invalid_argument("the ground set has no subspace");
  return {f, m.rank() - *g - 1, *g};
}

std::vector<LabeledHyperplane> labeled_hyperplanes(const Matroid& m) {
  std::vector<LabeledHyperplane> out;
  for (Element i = 0; i < m.ground_size(); ++i) {
    const ElementSet flat = m.closure(ElementSet::singleton(i));
    if (flat == m.ground()) continue;
    out.push_back({i, subspace_of(m, flat)});
  }
  return out;
}

Classification classify(const Matroid& m) {
  require_loopless_rank4(m);
  return {m.flats_of_rank(3), m.flats_of_rank(2), m.flats_of_rank(1)};
}

std::vector<std::vector<ElementSet>> subspaces_by_dimension(const Matroid& m) {
  std::vector<std::vector<ElementSet>> out(static_cast<std::size_t>(std::max(m.rank(), 0)));
  for (int k = 0; k < m.rank(); ++k) {
    out[static_cast<std::size_t>(m.rank() - k - 1)] = m.flats_of_rank(k);
  }
  return out;
}

bool meet_at_point(const Matroid& m, const std::vector<ElementSet>& flats) {
  ElementSet all;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (!m.is_flat(flats[i])) throw std::invalid_argument(flats[i].to_string() + " is not a flat");
    if (flats[i] == m.ground()) throw std::invalid_argument("the ground set has no subspace");
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[i] == flats[j]) {
        throw std::invalid_argument("subspaces must be distinct; " + flats[i].to_string() +
                                    " repeats");
      }
    }
    all |= flats[i];
  }
  return m.rank_of(all) == m.rank() - 1;
}

AxiomReport check_line_connectivity(const Matroid& m) {
  require_loopless_rank4(m);
  AxiomReport report;
  const auto& points = m.flats_of_rank(3);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (m.rank_of(points[i] & points[j]) != 2) {
        report.add("line", {points[i], points[j]}, "two points are not joined by a line");
      }
    }
  }
  return report;
}

AxiomReport plane_cover_check(const Matroid& m, const ExtensionContext& ctx) {
  require_loopless_rank4(m);
  if (ctx.hyperplanes_through_line.empty()) {
    throw std::invalid_argument("plane cover check needs a built extension context");
  }
  AxiomReport report;
  for (const auto& p : m.flats_of_rank(1)) {
    const bool covered =
        std::any_of(ctx.hyperplanes_through_line.begin(), ctx.hyperplanes_through_line.end(),
                    [&](const ElementSet& a) { return p.is_subset_of(a); });
    if (!covered) report.add("cover", {p}, "plane contains none of the points on the line");
  }
  return report;
}

}  // namespace hypermod
