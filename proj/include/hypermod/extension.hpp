#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypermod/matroid.hpp"
#include "hypermod/modularity.hpp"

namespace hypermod {

/// Raised when a structural consequence of hypermodularity fails on a built
/// context, or when an extension fails its own post-checks. Either means the
/// input was not what it claimed to be or there is a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Everything derived from one disjoint flag (F, L) of a loopless rank-4
/// hypermodular matroid: F has rank 3, L has rank 2, F n L is empty.
///
///   hyperplanes_through_line  A_1..A_n, every rank-3 flat containing L
///   traces                    T_0 = L, T_i = A_i n F
///   transversals              rank-2 flats J off F u L whose joins with the
///                             traces give at least two rank-3 flats
///   marked_lines              transversals plus traces
///   marked_planes             rank-3 flats containing some trace
///
/// The marked lines and planes are exactly the flats that receive the new
/// element in extend_once.
struct ExtensionContext {
  ElementSet rank3_flat;
  ElementSet rank2_flat;
  std::vector<ElementSet> hyperplanes_through_line;
  std::vector<ElementSet> traces;
  std::vector<ElementSet> transversals;
  std::vector<ElementSet> marked_lines;
  std::vector<ElementSet> marked_planes;

  [[nodiscard]] std::size_t n() const { return hyperplanes_through_line.size(); }
};

/// Builds and checks the context for the flag (rank3_flat, rank2_flat).
///
/// Throws std::invalid_argument when m is not a loopless rank-4 hypermodular
/// matroid or the pair is not a disjoint (rank-3, rank-2) flag, and
/// ConsistencyError when the covering structure of the hyperplanes through
/// the line, or the containment of the marked planes in the pairwise joins of
/// marked lines, fails.
ExtensionContext build_context(const Matroid& m, const ElementSet& rank3_flat,
                               const ElementSet& rank2_flat);

/// { cl(J u T) : T in family, r(J u T) = k }, sorted and deduplicated.
std::vector<ElementSet> join_spectrum(const Matroid& m, const ElementSet& flat,
                                      const std::vector<ElementSet>& family, int k);

/// Transversals for a context whose flag and traces are set.
std::vector<ElementSet> compute_transversals(const Matroid& m, const ExtensionContext& ctx);

/// Rank-3 flats containing some trace.
std::vector<ElementSet> compute_marked_planes(const Matroid& m, const ExtensionContext& ctx);

/// Closures of all pairs of distinct marked lines, sorted and deduplicated.
std::vector<ElementSet> pairwise_line_joins(const Matroid& m, const ExtensionContext& ctx);

struct CriterionResult {
  bool holds = false;
  /// On failure: the first pair of marked lines whose join is not marked.
  std::optional<FlatPair> witness;
  ElementSet witness_join;
};

/// Holds iff every join of two distinct marked lines is a marked plane.
CriterionResult criterion_holds(const Matroid& m, const ExtensionContext& ctx);

/// Checks, for a context satisfying the criterion:
///   (1) marked planes equal the pairwise joins of marked lines,
///   (2) marked lines are pairwise disjoint,
///   (3) marked lines partition the ground set,
///   (4) every other rank-2 flat joins the traces in exactly one rank-3 flat,
///   (5) each marked line lies inside or outside each marked plane.
/// Throws std::invalid_argument if the criterion fails.
AxiomReport verify_span2_properties(const Matroid& m, const ExtensionContext& ctx);

/// The structural facts a context relies on: n >= 3, the A_i - L pairwise
/// disjoint and covering E - L, every A_i - (F u L) nonempty, M, F and every
/// A_i inseparable, and the marked planes contained in the pairwise joins.
AxiomReport verify_context_structure(const Matroid& m, const ExtensionContext& ctx);

struct ExtensionResult {
  Matroid extended;
  Element new_element = 0;
  /// Flats X of the input with X + new_element a flat of the extension.
  std::vector<ElementSet> epsilon_moved;
  long long defect_before = 0;
  long long defect_after = 0;
};

/// Single-element extension adding a new element (index = ground size) to
/// every marked line and marked plane, plus the new rank-1 flat.
///
/// The result is re-verified: flat axioms, restriction back to m,
/// hypermodularity and a strict drop in total modular defect. A failure there
/// throws ConsistencyError. Throws std::invalid_argument when the criterion
/// does not hold.
ExtensionResult extend_once(const Matroid& m, const ExtensionContext& ctx);

struct FlagFailure {
  FlatPair flag;
  FlatPair lines;
  ElementSet join;
};

struct FlagSearch {
  std::optional<ExtensionContext> context;  // first flag passing the criterion
  std::size_t flags_tried = 0;
  std::vector<FlagFailure> failures;        // flags tried before it, or all
};

/// Walks disjoint_rank32_pairs in canonical order and stops at the first flag
/// whose context satisfies the criterion.
FlagSearch find_extendable_flag(const Matroid& m);

struct CompletionStep {
  FlatPair flag;
  Element new_element = 0;
  long long defect_before = 0;
  long long defect_after = 0;
  std::size_t flags_tried = 0;
};

struct CompletionResult {
  bool completed = false;
  Matroid matroid;
  std::vector<CompletionStep> steps;
  /// Populated when no flag of the current matroid passes the criterion.
  std::vector<FlagFailure> dead_end;
};

/// Repeats extend_once on the first extendable flag until the matroid is
/// modular. max_steps defaults to the initial total defect plus one; running
/// past it throws std::runtime_error. Throws std::invalid_argument unless m is
/// a loopless rank-4 hypermodular matroid.
CompletionResult complete_to_modular(const Matroid& m,
                                     std::optional<std::size_t> max_steps = std::nullopt);

}  // namespace hypermod
