#include "hypermod/extension.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

namespace hypermod {

namespace {

void require_rank4_hypermodular(const Matroid& m) {
  if (m.rank() != 4) {
    throw std::invalid_argument("extension needs a rank-4 matroid, got rank " +
                                std::to_string(m.rank()));
  }
  if (!m.is_loopless()) throw std::invalid_argument("extension needs a loopless matroid");
  if (auto w = hypermodularity_witness(m)) {
    throw std::invalid_argument("matroid is not hypermodular: " + w->first.to_string() + " and " +
                                w->second.to_string() + " are not a modular pair");
  }
}

bool contains(const std::vector<ElementSet>& sorted, const ElementSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<ElementSet> join_spectrum(const Matroid& m, const ElementSet& flat,
                                      const std::vector<ElementSet>& family, int k) {
  if (!m.is_flat(flat)) throw std::invalid_argument(flat.to_string() + " is not a flat");
  std::vector<ElementSet> out;
  for (const auto& t : family) {
    if (!m.is_flat(t)) throw std::invalid_argument(t.to_string() + " is not a flat");
    const ElementSet join = m.closure(flat | t);
    if (*m.grade_of(join) == k) out.push_back(join);
  }
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> compute_transversals(const Matroid& m, const ExtensionContext& ctx) {
  const ElementSet flag = ctx.rank3_flat | ctx.rank2_flat;
  std::vector<ElementSet> out;
  for (const auto& j : m.flats_of_rank(2)) {
    if (j.intersects(flag)) continue;
    if (join_spectrum(m, j, ctx.traces, 3).size() >= 2) out.push_back(j);
  }
  return out;
}

std::vector<ElementSet> compute_marked_planes(const Matroid& m, const ExtensionContext& ctx) {
  std::vector<ElementSet> out;
  for (const auto& x : m.flats_of_rank(3)) {
    const bool hit = std::any_of(ctx.traces.begin(), ctx.traces.end(),
                                 [&](const ElementSet& t) { return t.is_subset_of(x); });
    if (hit) out.push_back(x);
  }
  return out;
}

std::vector<ElementSet> pairwise_line_joins(const Matroid& m, const ExtensionContext& ctx) {
  std::vector<ElementSet> out;
  const auto& lines = ctx.marked_lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) out.push_back(m.closure(lines[i] | lines[j]));
  }
  return sorted_unique(std::move(out));
}

ExtensionContext build_context(const Matroid& m, const ElementSet& rank3_flat,
                               const ElementSet& rank2_flat) {
  require_rank4_hypermodular(m);
  if (m.grade_of(rank3_flat) != 3) {
    throw std::invalid_argument(rank3_flat.to_string() + " is not a rank-3 flat");
  }
  if (m.grade_of(rank2_flat) != 2) {
    throw std::invalid_argument(rank2_flat.to_string() + " is not a rank-2 flat");
  }
  if (rank3_flat.intersects(rank2_flat)) {
    throw std::invalid_argument("flag flats " + rank3_flat.to_string() + " and " +
                                rank2_flat.to_string() + " are not disjoint");
  }

  ExtensionContext ctx;
  ctx.rank3_flat = rank3_flat;
  ctx.rank2_flat = rank2_flat;
  ctx.traces.push_back(rank2_flat);
  for (const auto& a : m.flats_of_rank(3)) {
    if (!rank2_flat.is_subset_of(a)) continue;
    const ElementSet trace = a & rank3_flat;
    if (m.grade_of(trace) != 2) {
      throw ConsistencyError("hyperplane " + a.to_string() + " meets " + rank3_flat.to_string() +
                             " in " + trace.to_string() + ", not a rank-2 flat");
    }
    ctx.hyperplanes_through_line.push_back(a);
    ctx.traces.push_back(trace);
  }

  const auto& planes = ctx.hyperplanes_through_line;
  if (planes.size() < 3) {
    throw ConsistencyError("only " + std::to_string(planes.size()) +
                           " rank-3 flats contain " + rank2_flat.to_string());
  }
  ElementSet covered;
  const ElementSet flag = rank3_flat | rank2_flat;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    covered |= planes[i];
    if ((planes[i] - flag).empty()) {
      throw ConsistencyError("hyperplane " + planes[i].to_string() + " lies inside the flag");
    }
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      if (!((planes[i] & planes[j]) - rank2_flat).empty()) {
        throw ConsistencyError("hyperplanes " + planes[i].to_string() + " and " +
                               planes[j].to_string() + " overlap outside the line");
      }
    }
  }
  if (covered != m.ground()) {
    throw ConsistencyError("hyperplanes through " + rank2_flat.to_string() +
                           " miss " + (m.ground() - covered).to_string());
  }

  ctx.transversals = compute_transversals(m, ctx);
  std::vector<ElementSet> lines = ctx.transversals;
  lines.insert(lines.end(), ctx.traces.begin(), ctx.traces.end());
  ctx.marked_lines = sorted_unique(std::move(lines));
  ctx.marked_planes = compute_marked_planes(m, ctx);

  const auto joins = pairwise_line_joins(m, ctx);
  for (const auto& x : ctx.marked_planes) {
    if (!contains(joins, x)) {
      throw ConsistencyError("marked plane " + x.to_string() +
                             " is not the join of two marked lines");
    }
  }
  return ctx;
}

CriterionResult criterion_holds(const Matroid& m, const ExtensionContext& ctx) {
  const auto& lines = ctx.marked_lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const ElementSet join = m.closure(lines[i] | lines[j]);
      if (!contains(ctx.marked_planes, join)) {
        return {false, FlatPair{lines[i], lines[j]}, join};
      }
    }
  }
  return {true, std::nullopt, {}};
}

AxiomReport verify_span2_properties(const Matroid& m, const ExtensionContext& ctx) {
  if (!criterion_holds(m, ctx).holds) {
    throw std::invalid_argument("line-join properties need a context satisfying the criterion");
  }
  AxiomReport report;

  if (pairwise_line_joins(m, ctx) != ctx.marked_planes) {
    report.add("span2.1", {}, "marked planes differ from the pairwise joins of marked lines");
  }

  const auto& lines = ctx.marked_lines;
  ElementSet cover;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    cover |= lines[i];
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].intersects(lines[j])) {
        report.add("span2.2", {lines[i], lines[j]}, "marked lines intersect");
      }
    }
  }
  if (cover != m.ground()) {
    report.add("span2.3", {m.ground() - cover}, "marked lines do not cover the ground set");
  }

  for (const auto& x : m.flats_of_rank(2)) {
    if (contains(lines, x)) continue;
    const auto spectrum = join_spectrum(m, x, ctx.traces, 3);
    if (spectrum.size() != 1) {
      report.add("span2.4", {x},
                 "unmarked line joins the traces in " + std::to_string(spectrum.size()) +
                     " rank-3 flats");
    }
  }

  for (const auto& x : ctx.marked_planes) {
    for (const auto& j : lines) {
      if (!j.is_subset_of(x) && j.intersects(x)) {
        report.add("span2.5", {x, j}, "marked line straddles a marked plane");
      }
    }
  }
  return report;
}

AxiomReport verify_context_structure(const Matroid& m, const ExtensionContext& ctx) {
  AxiomReport report;
  const auto& planes = ctx.hyperplanes_through_line;
  const ElementSet flag = ctx.rank3_flat | ctx.rank2_flat;
  if (planes.size() < 3) report.add("disjoint0.n", {}, "fewer than three hyperplanes through the line");
  ElementSet covered;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    covered |= planes[i];
    if ((planes[i] - flag).empty()) {
      report.add("disjoint0.outside", {planes[i]}, "hyperplane has nothing off the flag");
    }
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      if ((planes[i] - ctx.rank2_flat).intersects(planes[j] - ctx.rank2_flat)) {
        report.add("disjoint0.disjoint", {planes[i], planes[j]}, "hyperplanes overlap off the line");
      }
    }
    if (component_count(restriction(m, planes[i]).matroid) != 1) {
      report.add("disjoint0.insep", {planes[i]}, "hyperplane through the line is separable");
    }
  }
  if (covered != m.ground()) report.add("disjoint0.cover", {covered}, "hyperplanes miss elements");
  if (component_count(m) != 1) report.add("disjoint0.insep", {m.ground()}, "matroid is separable");
  if (component_count(restriction(m, ctx.rank3_flat).matroid) != 1) {
    report.add("disjoint0.insep", {ctx.rank3_flat}, "rank-3 flag flat is separable");
  }
  const auto joins = pairwise_line_joins(m, ctx);
  for (const auto& x : ctx.marked_planes) {
    if (!contains(joins, x)) report.add("span1", {x}, "marked plane is not a join of marked lines");
  }
  return report;
}

ExtensionResult extend_once(const Matroid& m, const ExtensionContext& ctx) {
  const auto verdict = criterion_holds(m, ctx);
  if (!verdict.holds) {
    throw std::invalid_argument("criterion fails: " + verdict.witness->first.to_string() + " and " +
                                verdict.witness->second.to_string() + " join to " +
                                verdict.witness_join.to_string());
  }
  const std::size_t n = m.ground_size();
  if (n + 1 > ElementSet::kCapacity) throw std::invalid_argument("no room for a new element");
  const Element fresh = n;
  auto with_fresh = [&](ElementSet s) {
    s.insert(fresh);
    return s;
  };

  std::vector<std::vector<ElementSet>> graded(5);
  graded[0].push_back(ElementSet{});
  graded[1] = m.flats_of_rank(1);
  graded[1].push_back(ElementSet::singleton(fresh));
  for (const auto& x : m.flats_of_rank(2)) {
    graded[2].push_back(contains(ctx.marked_lines, x) ? with_fresh(x) : x);
  }
  for (const auto& x : m.flats_of_rank(3)) {
    graded[3].push_back(contains(ctx.marked_planes, x) ? with_fresh(x) : x);
  }
  graded[4].push_back(ElementSet::full(n + 1));

  ExtensionResult result{Matroid(n + 1, std::move(graded)), fresh, {}, 0, 0};
  std::set_union(ctx.marked_lines.begin(), ctx.marked_lines.end(), ctx.marked_planes.begin(),
                 ctx.marked_planes.end(), std::back_inserter(result.epsilon_moved));
  std::sort(result.epsilon_moved.begin(), result.epsilon_moved.end());

  const Matroid& ext = result.extended;
  const AxiomReport axioms = verify_flat_axioms(ext);
  if (!axioms.passed()) {
    const auto& v = axioms.violations.front();
    throw ConsistencyError("extension violates " + v.axiom + ": " + v.explanation);
  }
  if (!(restriction(ext, m.ground()).matroid == m)) {
    throw ConsistencyError("extension does not restrict to the input matroid");
  }
  if (auto w = hypermodularity_witness(ext)) {
    throw ConsistencyError("extension is not hypermodular: " + w->first.to_string() + " and " +
                           w->second.to_string());
  }
  result.defect_before = total_modular_defect(m).total;
  result.defect_after = total_modular_defect(ext).total;
  if (result.defect_after >= result.defect_before) {
    throw ConsistencyError("total modular defect did not drop: " +
                           std::to_string(result.defect_before) + " -> " +
                           std::to_string(result.defect_after));
  }
  return result;
}

FlagSearch find_extendable_flag(const Matroid& m) {
  FlagSearch search;
  for (const auto& [f, l] : disjoint_rank32_pairs(m)) {
    ++search.flags_tried;
    ExtensionContext ctx = build_context(m, f, l);
    const auto verdict = criterion_holds(m, ctx);
    if (verdict.holds) {
      search.context = std::move(ctx);
      return search;
    }
    search.failures.push_back({FlatPair{f, l}, *verdict.witness, verdict.witness_join});
  }
  return search;
}

CompletionResult complete_to_modular(const Matroid& m, std::optional<std::size_t> max_steps) {
  require_rank4_hypermodular(m);
  CompletionResult result{false, m, {}, {}};
  const long long initial = total_modular_defect(m).total;
  const std::size_t limit = max_steps.value_or(static_cast<std::size_t>(initial) + 1);

  while (!is_modular(result.matroid)) {
    if (result.steps.size() >= limit) {
      throw std::runtime_error("completion exceeded " + std::to_string(limit) + " steps");
    }
    FlagSearch search = find_extendable_flag(result.matroid);
    if (!search.context) {
      result.dead_end = std::move(search.failures);
      return result;
    }
    ExtensionResult step = extend_once(result.matroid, *search.context);
    result.steps.push_back({FlatPair{search.context->rank3_flat, search.context->rank2_flat},
                            step.new_element, step.defect_before, step.defect_after,
                            search.flags_tried});
    result.matroid = std::move(step.extended);
  }
  result.completed = true;
  return result;
}

}  // namespace hypermod
