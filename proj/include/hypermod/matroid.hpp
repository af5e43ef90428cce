#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypermod/element_set.hpp"

namespace hypermod {

/// One failed axiom instance. `axiom` is a short id such as "F1", "F2",
/// "grade", "R1", "R2", "R3".
struct AxiomViolation {
  std::string axiom;
  std::vector<ElementSet> witnesses;
  std::string explanation;
};

/// Outcome of a verification pass. Only the first kMaxRecorded violations are
/// kept; `total_violations` counts all of them.
struct AxiomReport {
  static constexpr std::size_t kMaxRecorded = 64;

  std::vector<AxiomViolation> violations;
  std::size_t total_violations = 0;

  [[nodiscard]] bool passed() const { return violations.empty(); }
  void add(std::string axiom, std::vector<ElementSet> witnesses, std::string explanation);
  void merge(const AxiomReport& other);
  /// True if some recorded violation carries this axiom id.
  [[nodiscard]] bool has(const std::string& axiom) const;
};

/// A finite matroid held as its lattice of flats, graded by rank.
///
/// Construction checks only the structure needed to answer queries: element
/// ranges, a single bottom flat, the full ground set as the only top flat and
/// no repeated flats. F1/F2 and the grading are left to verify_flat_axioms so
/// that corrupt input can be inspected rather than silently repaired.
/// Within each grade flats are kept in lexicographic order.
class Matroid {
 public:
  Matroid(std::size_t ground_size, std::vector<std::vector<ElementSet>> flats_by_rank);

  [[nodiscard]] std::size_t ground_size() const { return ground_size_; }
  [[nodiscard]] int rank() const { return static_cast<int>(flats_by_rank_.size()) - 1; }
  [[nodiscard]] ElementSet ground() const { return ElementSet::full(ground_size_); }

  /// Throws std::out_of_range for k outside [0, rank()].
  [[nodiscard]] const std::vector<ElementSet>& flats_of_rank(int k) const;
  [[nodiscard]] const std::vector<std::vector<ElementSet>>& flats_by_rank() const {
    return flats_by_rank_;
  }
  /// Every flat, grade by grade.
  [[nodiscard]] const std::vector<ElementSet>& all_flats() const { return all_flats_; }
  [[nodiscard]] std::size_t flat_count() const { return all_flats_.size(); }

  [[nodiscard]] bool is_flat(const ElementSet& s) const { return grade_.contains(s); }
  /// Declared grade of a flat, or nothing if `s` is not one.
  [[nodiscard]] std::optional<int> grade_of(const ElementSet& s) const;

  /// Intersection of every flat containing `a`.
  [[nodiscard]] ElementSet closure(const ElementSet& a) const;
  /// Declared grade of closure(a). Throws std::logic_error when the closure
  /// is not itself a member of the lattice, which only happens if F1 fails.
  [[nodiscard]] int rank_of(const ElementSet& a) const;

  [[nodiscard]] ElementSet loops() const { return flats_by_rank_.front().front(); }
  [[nodiscard]] bool is_loopless() const { return loops().empty(); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_size_ == b.ground_size_ && a.flats_by_rank_ == b.flats_by_rank_;
  }

 private:
  void check_in_range(const ElementSet& a) const;

  std::size_t ground_size_;
  std::vector<std::vector<ElementSet>> flats_by_rank_;
  std::vector<ElementSet> all_flats_;
  std::unordered_map<ElementSet, int, ElementSetHash> grade_;
};

// ---------------------------------------------------------------------------
// Axiom checks

/// F1 on all pairs of flats, F2 for every flat and element outside it, and
/// the declared grades against longest-chain lengths from the bottom flat.
AxiomReport verify_flat_axioms(const Matroid& m);

struct RankCheckMode {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kSampled;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;

  static RankCheckMode exhaustive() { return {Kind::kExhaustive, 0, 0}; }
  static RankCheckMode sampled(std::uint64_t seed, std::size_t trials) {
    return {Kind::kSampled, seed, trials};
  }
};

/// Largest ground set accepted by exhaustive rank checks.
inline constexpr std::size_t kExhaustiveRankLimit = 14;

using RankFunction = std::function<int(const ElementSet&)>;

/// R1-R3 for an arbitrary set function on {0..n-1}. Exhaustive mode walks all
/// subsets (R1, single-step R2) and all subset pairs (R3); sampled mode draws
/// seeded random subsets and pairs. Throws std::invalid_argument when
/// exhaustive mode is asked for on more than kExhaustiveRankLimit elements.
AxiomReport verify_rank_function(std::size_t ground_size, const RankFunction& rank,
                                 const RankCheckMode& mode);

/// verify_rank_function on rank_of, plus R3 over every pair of flats.
AxiomReport verify_rank_axioms(const Matroid& m, const RankCheckMode& mode);

// ---------------------------------------------------------------------------
// Minors

/// A minor with its elements renumbered densely. element_map[i] is the index
/// in the parent matroid of the minor's element i (ascending).
struct Minor {
  Matroid matroid;
  std::vector<Element> element_map;
};

/// M|A. Requires A nonempty.
Minor restriction(const Matroid& m, const ElementSet& a);
/// M \ X = M|(E - X). Requires X != E.
Minor deletion(const Matroid& m, const ElementSet& x);
/// M / F for a flat F.
Minor contraction(const Matroid& m, const ElementSet& flat);

// ---------------------------------------------------------------------------
// Connectivity

/// Minimal dependent sets of size at most max_size, ordered by size and then
/// lexicographically.
std::vector<ElementSet> circuits_up_to(const Matroid& m, std::size_t max_size);

struct ComponentPartition {
  std::vector<ElementSet> blocks;  // ordered by smallest member
  std::size_t kappa = 0;
};

/// Connected components: elements sharing a circuit are joined. Loops end up
/// as singleton blocks.
ComponentPartition components(const Matroid& m);

/// kappa(M), with the empty matroid counted as one component.
std::size_t component_count(const Matroid& m);

/// kappa(M|F) + kappa(M/cl(F)) == kappa(M) + 1.
///
/// The empty matroid counts as one component, so F = E (and F = cl(empty)
/// with M loopless) always comes out non-degenerate.
bool is_nondegenerate(const Matroid& m, const ElementSet& f);

// ---------------------------------------------------------------------------
// Fingerprints and isomorphism

struct Profile {
  std::vector<std::size_t> counts;             // flats per grade
  std::vector<std::vector<std::size_t>> sizes;  // sorted flat sizes per grade

  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const Matroid& m);

inline constexpr std::size_t kIsomorphismLimit = 20;

/// An element bijection phi (M1 element i -> phi[i] in M2) carrying flats to
/// flats of the same grade, or nothing. Throws std::length_error above
/// kIsomorphismLimit elements; compare profiles instead there.
std::optional<std::vector<Element>> is_isomorphic(const Matroid& m1, const Matroid& m2);

}  // namespace hypermod
