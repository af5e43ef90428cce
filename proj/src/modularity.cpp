#include "hypermod/modularity.hpp"

#include <stdexcept>
#include <string>

namespace hypermod {

namespace {

int grade_or_throw(const Matroid& m, const ElementSet& f) {
  auto g = m.grade_of(f);
  if (!g) throw std::invalid_argument("modular defect of " + f.to_string() + ", which is not a flat");
  return *g;
}

// Both arguments known to be flats.
int defect_of_flats(const Matroid& m, const ElementSet& a, int ra, const ElementSet& b, int rb) {
  return ra + rb - m.rank_of(a | b) - m.rank_of(a & b);
}

std::vector<FlatPair> disjoint_32(const Matroid& m) {
  std::vector<FlatPair> out;
  if (m.rank() < 3) return out;
  for (const auto& f : m.flats_of_rank(3)) {
    for (const auto& l : m.flats_of_rank(2)) {
      if (!f.intersects(l)) out.emplace_back(f, l);
    }
  }
  return out;
}

}  // namespace

int modular_defect(const Matroid& m, const ElementSet& a, const ElementSet& b) {
  const int ra = grade_or_throw(m, a);
  const int rb = grade_or_throw(m, b);
  return defect_of_flats(m, a, ra, b, rb);
}

bool is_modular_pair(const Matroid& m, const ElementSet& a, const ElementSet& b) {
  return modular_defect(m, a, b) == 0;
}

bool is_modular_flat(const Matroid& m, const ElementSet& f) {
  const int rf = grade_or_throw(m, f);
  for (int k = 0; k <= m.rank(); ++k) {
    for (const auto& l : m.flats_of_rank(k)) {
      if (defect_of_flats(m, f, rf, l, k) != 0) return false;
    }
  }
  return true;
}

bool is_modular(const Matroid& m) {
  const auto& flats = m.all_flats();
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const int ri = *m.grade_of(flats[i]);
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      if (defect_of_flats(m, flats[i], ri, flats[j], *m.grade_of(flats[j])) != 0) return false;
    }
  }
  return true;
}

std::optional<FlatPair> hypermodularity_witness(const Matroid& m) {
  if (m.rank() < 3) {
    throw std::invalid_argument("hypermodularity needs rank >= 3, got rank " +
                                std::to_string(m.rank()));
  }
  const int k = m.rank() - 1;
  const auto& hyperplanes = m.flats_of_rank(k);
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
      if (defect_of_flats(m, hyperplanes[i], k, hyperplanes[j], k) != 0) {
        return FlatPair{hyperplanes[i], hyperplanes[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_hypermodular(const Matroid& m) { return !hypermodularity_witness(m).has_value(); }

DefectReport total_modular_defect(const Matroid& m) {
  DefectReport report;
  const auto& flats = m.all_flats();
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const int ri = *m.grade_of(flats[i]);
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const int d = defect_of_flats(m, flats[i], ri, flats[j], *m.grade_of(flats[j]));
      if (d > 0) {
        const bool ordered = flats[i] < flats[j];
        report.pair_defects.emplace(ordered ? FlatPair{flats[i], flats[j]}
                                            : FlatPair{flats[j], flats[i]},
                                    d);
        report.total += d;
      }
    }
  }
  report.disjoint_flags = disjoint_32(m);
  return report;
}

std::vector<FlatPair> disjoint_rank32_pairs(const Matroid& m) {
  if (m.rank() != 4) {
    throw std::invalid_argument("disjoint flags need a rank-4 matroid, got rank " +
                                std::to_string(m.rank()));
  }
  if (!m.is_loopless()) throw std::invalid_argument("disjoint flags need a loopless matroid");
  return disjoint_32(m);
}

}  // namespace hypermod
