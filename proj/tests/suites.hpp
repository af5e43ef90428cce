// Property suites shared by test_properties and the acceptance binary. Each
// suite records one entry per failed check, with enough context to reproduce.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hypermod/arrangement.hpp"
#include "hypermod/extension.hpp"
#include "hypermod/modularity.hpp"
#include "hypermod/realize.hpp"

namespace suites {

using namespace hypermod;
using fixtures::Named;

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline std::string flag_text(const ElementSet& f, const ElementSet& l) { return f.to_string() + " " + l.to_string(); }

inline RankCheckMode rank_mode_for(const Matroid& m) {
  return m.ground_size() <= kExhaustiveRankLimit ? RankCheckMode::exhaustive() : RankCheckMode::sampled(1, 10000);
}

inline void check_axioms(Tally& t, const std::string& name, const Matroid& m) {
  const AxiomReport flats = verify_flat_axioms(m);
  t.expect(flats.passed(), name + ": flat axioms, " + std::to_string(flats.total_violations) + " violation(s)");
  const AxiomReport ranks = verify_rank_axioms(m, rank_mode_for(m));
  t.expect(ranks.passed(), name + ": rank axioms, " + std::to_string(ranks.total_violations) + " violation(s)");
}

/// Generator outputs, the minors used across the tests, and extension outputs
/// all satisfy F1/F2 and R1-R3.
inline Tally axiom_suite() {
  Tally t;
  std::vector<Named> subjects{{"pg3(2)", pg3(2)}, {"pg3(3)", pg3(3)}, {"vamos", vamos()},
                              {"ag(3,2)", fixtures::ag32()}, {"cone+fano", fixtures::cone_fano()},
                              {"point+line", fixtures::point_plus_line()},
                              {"two lines", fixtures::two_lines_through_point()},
                              {"parallel pairs", fixtures::two_parallel_pairs()}};
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) subjects.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", uniform(r, n)});

  const Matroid pg2 = pg3(2);
  const Matroid pg33 = pg3(3);
  subjects.push_back({"pg3(2)|plane", restriction(pg2, {0, 1, 2, 3, 4, 5, 6}).matroid});
  subjects.push_back({"pg3(2)/3", contraction(pg2, {3}).matroid});
  subjects.push_back({"pg3(2)/line", contraction(pg2, pg2.flats_of_rank(2)[7]).matroid});
  subjects.push_back({"pg3(3)/0", contraction(pg33, {0}).matroid});
  subjects.push_back({"vamos/01", contraction(vamos(), {0, 1}).matroid});
  subjects.push_back({"vamos\\7", deletion(vamos(), {7}).matroid});
  for (Element p : {0u, 6u, 14u}) subjects.push_back({"pg3(2)-" + std::to_string(p), deletion(pg2, {p}).matroid});
  subjects.push_back({"pg3(2)-0,1", deletion(pg2, {0, 1}).matroid});
  subjects.push_back({"pg3(3)-0,1", deletion(pg33, {0, 1}).matroid});
  subjects.push_back({"pg3(3)-5,30", deletion(pg33, {5, 30}).matroid});

  const Matroid d = deletion(pg2, {0}).matroid;
  for (const auto& [f, l] : disjoint_rank32_pairs(d)) {
    const auto r = extend_once(d, build_context(d, f, l));
    subjects.push_back({"pg3(2)-0 +" + flag_text(f, l), r.extended});
    subjects.push_back({"pg3(2)-0 +" + flag_text(f, l) + " / new", contraction(r.extended, {r.new_element}).matroid});
  }
  const Matroid d33 = deletion(pg33, {0, 1}).matroid;
  Matroid cur = d33;
  for (int step = 1; step <= 2; ++step) {
    const auto s = find_extendable_flag(cur);
    if (!s.context) break;
    cur = extend_once(cur, *s.context).extended;
    subjects.push_back({"pg3(3)-0,1 step " + std::to_string(step), cur});
  }

  for (const auto& [name, m] : subjects) check_axioms(t, name, m);
  return t;
}

/// Mutated lattices and fabricated rank functions must fail, with witnesses.
inline Tally negative_controls() {
  Tally t;
  const Matroid m = pg3(2);
  auto expect_fail = [&](const std::string& name, const AxiomReport& r, const std::string& axiom) {
    t.expect(!r.passed() && (axiom.empty() || r.has(axiom)), name + ": expected a " + (axiom.empty() ? "" : axiom + " ") + "violation");
    bool witnessed = !r.violations.empty();
    for (const auto& v : r.violations) witnessed = witnessed && !v.witnesses.empty();
    t.expect(witnessed, name + ": violations must carry witnesses");
  };

  auto grades = m.flats_by_rank();
  grades[2].erase(grades[2].begin() + 3);
  expect_fail("pg3(2) without a line", verify_flat_axioms(Matroid(15, grades)), "F2");

  grades = m.flats_by_rank();
  grades[1].erase(grades[1].begin() + 2);
  expect_fail("pg3(2) without a point", verify_flat_axioms(Matroid(15, grades)), "F1");

  grades = m.flats_by_rank();
  grades[3].push_back(grades[2].back());
  grades[2].pop_back();
  expect_fail("pg3(2) with a line among the planes", verify_flat_axioms(Matroid(15, grades)), "grade");

  grades = vamos().flats_by_rank();
  grades[3].push_back({4, 5, 6, 7});
  expect_fail("vamos with {4,5,6,7} as a plane", verify_flat_axioms(Matroid(8, grades)), "");

  expect_fail("rank over cardinality",
              verify_rank_function(3, [](const ElementSet& a) { return a == ElementSet{0, 1} ? 3 : static_cast<int>(std::min<std::size_t>(a.size(), 2)); },
                                   RankCheckMode::exhaustive()),
              "R1");
  expect_fail("decreasing rank",
              verify_rank_function(4, [](const ElementSet& a) { return a.size() == 4 ? 1 : static_cast<int>(std::min<std::size_t>(a.size(), 2)); },
                                   RankCheckMode::exhaustive()),
              "R2");
  expect_fail("non-submodular rank",
              verify_rank_function(3, [](const ElementSet& a) { return a.empty() ? 0 : (a.contains(0) && a.contains(2) ? 2 : 1); },
                                   RankCheckMode::exhaustive()),
              "R3");
  expect_fail("non-submodular rank, sampled",
              verify_rank_function(20, [](const ElementSet& a) { return a.empty() ? 0 : (a.contains(0) && a.contains(2) ? 2 : 1); },
                                   RankCheckMode::sampled(1, 10000)),
              "R3");
  return t;
}

// ---------------------------------------------------------------------------
// Lemma and proposition suites over loopless rank-4 hypermodular fixtures.

inline std::vector<ExtensionContext> all_contexts(const Matroid& m) {
  std::vector<ExtensionContext> out;
  for (const auto& [f, l] : disjoint_rank32_pairs(m)) out.push_back(build_context(m, f, l));
  return out;
}

/// Disjoint0 consequences, recomputed from the lattice for every flag.
inline void disjoint0(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  for (const auto& [f, l] : disjoint_rank32_pairs(m)) {
    const std::string at = fx.name + " flag " + flag_text(f, l) + ": ";
    std::vector<ElementSet> a;
    for (const auto& x : m.flats_of_rank(3))
      if (l.is_subset_of(x)) a.push_back(x);
    t.expect(a.size() >= 3, at + "n >= 3");
    ElementSet cover;
    for (std::size_t i = 0; i < a.size(); ++i) {
      cover |= a[i];
      t.expect(!(a[i] - (f | l)).empty(), at + "A_i - (F u L) nonempty");
      t.expect(component_count(restriction(m, a[i]).matroid) == 1, at + "A_i inseparable");
      for (std::size_t j = i + 1; j < a.size(); ++j) t.expect(!(a[i] - l).intersects(a[j] - l), at + "A_i - L disjoint");
    }
    t.expect(cover == m.ground(), at + "A_i cover E");
    t.expect(component_count(m) == 1, at + "M inseparable");
    t.expect(component_count(restriction(m, f).matroid) == 1, at + "F inseparable");
    const ExtensionContext ctx = build_context(m, f, l);
    t.expect(std::set<ElementSet>(a.begin(), a.end()) ==
                 std::set<ElementSet>(ctx.hyperplanes_through_line.begin(), ctx.hyperplanes_through_line.end()),
             at + "context hyperplanes");
    t.expect(verify_context_structure(m, ctx).passed(), at + "verify_context_structure");
  }
}

inline std::set<ElementSet> pair_joins(const Matroid& m, const std::vector<ElementSet>& lines) {
  std::set<ElementSet> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) out.insert(m.closure(lines[i] | lines[j]));
  return out;
}

/// Span-1: marked planes are joins of marked lines, for every context.
inline void span1(Tally& t, const Named& fx) {
  for (const auto& ctx : all_contexts(fx.matroid)) {
    const auto joins = pair_joins(fx.matroid, ctx.marked_lines);
    for (const auto& x : ctx.marked_planes)
      t.expect(joins.count(x) == 1, fx.name + " flag " + flag_text(ctx.rank3_flat, ctx.rank2_flat) + ": span1 " + x.to_string());
  }
}

/// Span-2 (1)-(5) for contexts satisfying the criterion, recomputed here and
/// compared with verify_span2_properties.
inline void span2(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  for (const auto& ctx : all_contexts(m)) {
    const std::string at = fx.name + " flag " + flag_text(ctx.rank3_flat, ctx.rank2_flat) + ": ";
    if (!criterion_holds(m, ctx).holds) continue;
    const auto& lines = ctx.marked_lines;
    const std::set<ElementSet> planes(ctx.marked_planes.begin(), ctx.marked_planes.end());
    t.expect(pair_joins(m, lines) == planes, at + "span2.1");
    ElementSet cover;
    std::size_t total = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      cover |= lines[i];
      total += lines[i].size();
      for (std::size_t j = i + 1; j < lines.size(); ++j) t.expect(!lines[i].intersects(lines[j]), at + "span2.2");
    }
    t.expect(cover == m.ground() && total == m.ground_size(), at + "span2.3");
    for (const auto& x : m.flats_of_rank(2)) {
      if (std::find(lines.begin(), lines.end(), x) != lines.end()) continue;
      std::set<ElementSet> spectrum;
      for (const auto& tr : ctx.traces)
        if (m.rank_of(x | tr) == 3) spectrum.insert(m.closure(x | tr));
      t.expect(spectrum.size() == 1, at + "span2.4 " + x.to_string());
    }
    for (const auto& x : planes)
      for (const auto& j : lines) t.expect(j.is_subset_of(x) || !j.intersects(x), at + "span2.5");
    t.expect(verify_span2_properties(m, ctx).passed(), at + "verify_span2_properties");
  }
}

/// rk3-mod on rank-3 contractions and inherit-HM on flats of corank >= 3.
inline void contractions(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  for (int k = 0; k <= m.rank() - 3; ++k) {
    for (const auto& a : m.flats_of_rank(k)) {
      const Matroid c = contraction(m, a).matroid;
      const bool hm = is_hypermodular(c);
      t.expect(hm, fx.name + " / " + a.to_string() + ": inherit-HM");
      if (c.rank() == 3 && hm) t.expect(is_modular(c), fx.name + " / " + a.to_string() + ": rk3-mod");
    }
  }
}

/// Insep-rk3: rank-3 flats of an inseparable fixture are inseparable.
inline void insep_rk3(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  if (component_count(m) != 1) return;
  for (const auto& f : m.flats_of_rank(3))
    t.expect(component_count(restriction(m, f).matroid) == 1, fx.name + ": Insep-rk3 " + f.to_string());
}

/// Lemma equiv (no disjoint flag <=> modular) and Prop equiv (a disjoint flag
/// exists <=> some rank-3 flat holds two disjoint rank-2 flats), each side
/// computed by its own loop.
inline void equivalences(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  bool flag = false;
  for (const auto& f : m.flats_of_rank(3))
    for (const auto& l : m.flats_of_rank(2)) flag = flag || !f.intersects(l);
  bool inner = false;
  for (const auto& f : m.flats_of_rank(3)) {
    std::vector<ElementSet> inside;
    for (const auto& l : m.flats_of_rank(2))
      if (l.is_subset_of(f)) inside.push_back(l);
    for (std::size_t i = 0; i < inside.size(); ++i)
      for (std::size_t j = i + 1; j < inside.size(); ++j) inner = inner || !inside[i].intersects(inside[j]);
  }
  t.expect(disjoint_rank32_pairs(m).empty() == is_modular(m), fx.name + ": Lemma equiv");
  t.expect(flag == !disjoint_rank32_pairs(m).empty(), fx.name + ": disjoint_rank32_pairs matches brute force");
  t.expect(flag == inner, fx.name + ": Prop equiv");
}

/// mod-rk1: rank-1 flats are modular with every flat.
inline void mod_rk1(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  for (const auto& p : m.flats_of_rank(1))
    for (const auto& x : m.all_flats())
      t.expect(modular_defect(m, p, x) == 0, fx.name + ": mod-rk1 " + p.to_string() + " " + x.to_string());
}

/// Properness-FUL for loopless hypermodular matroids of rank >= 3: if two
/// corank-1 flats cover E, one of them is the union of two corank-2 flats,
/// which meet when the rank is at least 4.
inline void properness_ful(Tally& t, const Named& fx) {
  const Matroid& m = fx.matroid;
  const int r = m.rank();
  const auto& hyper = m.flats_of_rank(r - 1);
  const auto& sub = m.flats_of_rank(r - 2);
  auto splits = [&](const ElementSet& x) {
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        if ((sub[i] | sub[j]) == x && (r < 4 || sub[i].intersects(sub[j]))) return true;
    return false;
  };
  for (std::size_t i = 0; i < hyper.size(); ++i)
    for (std::size_t j = i + 1; j < hyper.size(); ++j)
      if ((hyper[i] | hyper[j]) == m.ground())
        t.expect(splits(hyper[i]) || splits(hyper[j]), fx.name + ": Properness-FUL " + flag_text(hyper[i], hyper[j]));
}

/// Fixtures for the Properness-FUL check, which also covers rank 3.
inline std::vector<Named> loopless_hypermodular_rank3_up() {
  auto out = fixtures::rank4_hypermodular();
  out.push_back({"point+line", fixtures::point_plus_line()});
  out.push_back({"fano", restriction(pg3(2), {0, 1, 2, 3, 4, 5, 6}).matroid});
  out.push_back({"U(3,3)", uniform(3, 3)});
  out.push_back({"U(5,5)", uniform(5, 5)});
  return out;
}

inline Tally lemma_suite() {
  Tally t;
  const auto fx = fixtures::rank4_hypermodular();
  for (const auto& f : fx) {
    t.expect(f.matroid.rank() == 4 && f.matroid.is_loopless() && is_hypermodular(f.matroid), f.name + ": fixture shape");
    disjoint0(t, f);
    span1(t, f);
    span2(t, f);
    contractions(t, f);
    insep_rk3(t, f);
    equivalences(t, f);
    mod_rk1(t, f);
  }
  for (const auto& f : loopless_hypermodular_rank3_up()) properness_ful(t, f);
  return t;
}

}  // namespace suites
