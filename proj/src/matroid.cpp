#include "hypermod/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hypermod {

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) os << ' ';
    os << e;
    first = false;
  });
  return os << '}';
}

void AxiomReport::add(std::string axiom, std::vector<ElementSet> witnesses,
                      std::string explanation) {
  ++total_violations;
  if (violations.size() < kMaxRecorded) {
    violations.push_back({std::move(axiom), std::move(witnesses), std::move(explanation)});
  }
}

void AxiomReport::merge(const AxiomReport& other) {
  total_violations += other.total_violations;
  for (const auto& v : other.violations) {
    if (violations.size() >= kMaxRecorded) break;
    violations.push_back(v);
  }
}

bool AxiomReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

// ---------------------------------------------------------------------------

Matroid::Matroid(std::size_t ground_size, std::vector<std::vector<ElementSet>> flats_by_rank)
    : ground_size_(ground_size), flats_by_rank_(std::move(flats_by_rank)) {
  if (ground_size_ > ElementSet::kCapacity) {
    throw std::invalid_argument("matroid ground size " + std::to_string(ground_size_) +
                                " exceeds capacity " + std::to_string(ElementSet::kCapacity));
  }
  if (flats_by_rank_.empty()) throw std::invalid_argument("matroid needs at least one grade");
  if (flats_by_rank_.front().size() != 1) {
    throw std::invalid_argument("grade 0 must hold exactly one flat");
  }
  const ElementSet full = ElementSet::full(ground_size_);
  const auto& top = flats_by_rank_.back();
  if (top.size() != 1 || top.front() != full) {
    throw std::invalid_argument("missing rank-" + std::to_string(rank()) +
                                " flat E: the top grade must be exactly the ground set");
  }
  for (std::size_t k = 0; k < flats_by_rank_.size(); ++k) {
    auto& grade = flats_by_rank_[k];
    std::sort(grade.begin(), grade.end());
    for (const auto& f : grade) {
      if (!f.all_below(ground_size_)) {
        throw std::out_of_range("flat " + f.to_string() + " leaves the ground set");
      }
      if (!grade_.emplace(f, static_cast<int>(k)).second) {
        throw std::invalid_argument("flat " + f.to_string() + " listed twice");
      }
      all_flats_.push_back(f);
    }
  }
}

const std::vector<ElementSet>& Matroid::flats_of_rank(int k) const {
  if (k < 0 || k > rank()) {
    throw std::out_of_range("grade " + std::to_string(k) + " outside 0.." +
                            std::to_string(rank()));
  }
  return flats_by_rank_[static_cast<std::size_t>(k)];
}

std::optional<int> Matroid::grade_of(const ElementSet& s) const {
  auto it = grade_.find(s);
  if (it == grade_.end()) return std::nullopt;
  return it->second;
}

void Matroid::check_in_range(const ElementSet& a) const {
  if (!a.all_below(ground_size_)) {
    throw std::out_of_range("subset " + a.to_string() + " leaves ground set of size " +
                            std::to_string(ground_size_));
  }
}

ElementSet Matroid::closure(const ElementSet& a) const {
  check_in_range(a);
  ElementSet result = ElementSet::full(ground_size_);
  for (const auto& f : all_flats_) {
    if (a.is_subset_of(f)) result &= f;
  }
  return result;
}

int Matroid::rank_of(const ElementSet& a) const {
  const ElementSet c = closure(a);
  auto g = grade_of(c);
  if (!g) {
    throw std::logic_error("closure " + c.to_string() +
                           " is not a flat; the lattice is not closed under intersection");
  }
  return *g;
}

// ---------------------------------------------------------------------------

namespace {

/// Longest chain length from the bottom for each member of `family`, which
/// must contain a unique minimal set below every other. Index-aligned.
std::vector<int> chain_lengths(const std::vector<ElementSet>& family) {
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].size() < family[b].size();
  });
  std::vector<int> length(family.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& g = family[order[i]];
    int best = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& h = family[order[j]];
      if (h.size() < g.size() && h.is_subset_of(g)) best = std::max(best, length[order[j]] + 1);
    }
    length[order[i]] = best;
  }
  return length;
}

std::vector<std::vector<ElementSet>> grade_by_chain_length(const std::vector<ElementSet>& family) {
  const auto length = chain_lengths(family);
  const int top = family.empty() ? 0 : *std::max_element(length.begin(), length.end());
  std::vector<std::vector<ElementSet>> graded(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    graded[static_cast<std::size_t>(length[i])].push_back(family[i]);
  }
  return graded;
}

/// Renumbers the members of `s` that lie in `kept` densely, preserving order.
ElementSet compress(const ElementSet& s, const std::vector<Element>& new_index) {
  ElementSet out;
  s.for_each([&](Element e) {
    if (new_index[e] != static_cast<Element>(-1)) out.insert(new_index[e]);
  });
  return out;
}

std::vector<Element> index_map_for(const ElementSet& kept, std::size_t ground_size) {
  std::vector<Element> new_index(ground_size, static_cast<Element>(-1));
  Element next = 0;
  kept.for_each([&](Element e) { new_index[e] = next++; });
  return new_index;
}

}  // namespace

AxiomReport verify_flat_axioms(const Matroid& m) {
  AxiomReport report;
  const auto& flats = m.all_flats();

  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const ElementSet meet = flats[i] & flats[j];
      if (!m.is_flat(meet)) {
        report.add("F1", {flats[i], flats[j], meet}, "intersection is not a flat");
      }
    }
  }

  const ElementSet ground = m.ground();
  for (const auto& f : flats) {
    (ground - f).for_each([&](Element s) {
      ElementSet with_s = f;
      with_s.insert(s);
      ElementSet smallest = ground;
      for (const auto& g : flats) {
        if (with_s.is_subset_of(g)) smallest &= g;
      }
      if (!m.is_flat(smallest)) {
        report.add("F2", {f, ElementSet::singleton(s)},
                   "no smallest flat contains the flat plus the element");
        return;
      }
      for (const auto& g : flats) {
        if (f.is_proper_subset_of(g) && g.is_proper_subset_of(smallest)) {
          report.add("F2", {f, g, smallest},
                     "a flat lies strictly between a flat and its extension by one element");
        }
      }
    });
  }

  const ElementSet bottom = m.loops();
  for (const auto& f : flats) {
    if (!bottom.is_subset_of(f)) {
      report.add("grade", {bottom, f}, "bottom flat is not contained in every flat");
    }
  }
  const auto length = chain_lengths(flats);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const int declared = *m.grade_of(flats[i]);
    if (declared != length[i]) {
      report.add("grade", {flats[i]},
                 "declared grade " + std::to_string(declared) + " but longest chain from bottom is " +
                     std::to_string(length[i]));
    }
  }
  return report;
}

namespace {

ElementSet from_mask(std::uint32_t mask) {
  ElementSet s;
  for (Element e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1U) s.insert(e);
  }
  return s;
}

void check_rank_exhaustive(std::size_t n, const RankFunction& rank, AxiomReport& report) {
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<int> table(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    const ElementSet s = from_mask(a);
    const int r = rank(s);
    table[a] = r;
    if (r < 0 || static_cast<std::size_t>(r) > s.size()) {
      report.add("R1", {s}, "rank " + std::to_string(r) + " outside [0, |A|]");
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::size_t e = 0; e < n; ++e) {
      const std::uint32_t b = a | (std::uint32_t{1} << e);
      if (b != a && table[a] > table[b]) {
        report.add("R2", {from_mask(a), from_mask(b)}, "rank decreases on a superset");
      }
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      if (table[a | b] + table[a & b] > table[a] + table[b]) {
        report.add("R3", {from_mask(a), from_mask(b)}, "submodularity fails");
      }
    }
  }
}

ElementSet random_subset(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(0, n);
  const std::size_t k = size_dist(rng);
  std::vector<Element> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  ElementSet s;
  for (std::size_t i = 0; i < k; ++i) s.insert(pool[i]);
  return s;
}

void check_rank_sampled(std::size_t n, const RankFunction& rank, std::uint64_t seed,
                        std::size_t trials, AxiomReport& report) {
  std::mt19937_64 rng(seed);
  auto check_r1 = [&](const ElementSet& s, int r) {
    if (r < 0 || static_cast<std::size_t>(r) > s.size()) {
      report.add("R1", {s}, "rank " + std::to_string(r) + " outside [0, |A|]");
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const ElementSet a = random_subset(n, rng);
    const ElementSet b = random_subset(n, rng);
    const int ra = rank(a);
    const int rb = rank(b);
    const int ru = rank(a | b);
    const int ri = rank(a & b);
    check_r1(a, ra);
    check_r1(b, rb);
    if (ra > ru) report.add("R2", {a, a | b}, "rank decreases on a superset");
    if (ri > ra) report.add("R2", {a & b, a}, "rank decreases on a superset");
    if (ru + ri > ra + rb) report.add("R3", {a, b}, "submodularity fails");
  }
}

}  // namespace

AxiomReport verify_rank_function(std::size_t ground_size, const RankFunction& rank,
                                 const RankCheckMode& mode) {
  AxiomReport report;
  if (mode.kind == RankCheckMode::Kind::kExhaustive) {
    if (ground_size > kExhaustiveRankLimit) {
      throw std::invalid_argument("exhaustive rank check limited to " +
                                  std::to_string(kExhaustiveRankLimit) + " elements, got " +
                                  std::to_string(ground_size));
    }
    check_rank_exhaustive(ground_size, rank, report);
  } else {
    check_rank_sampled(ground_size, rank, mode.seed, mode.trials, report);
  }
  return report;
}

AxiomReport verify_rank_axioms(const Matroid& m, const RankCheckMode& mode) {
  if (mode.kind == RankCheckMode::Kind::kExhaustive && m.ground_size() > kExhaustiveRankLimit) {
    throw std::invalid_argument("exhaustive rank check limited to " +
                                std::to_string(kExhaustiveRankLimit) + " elements, got " +
                                std::to_string(m.ground_size()));
  }
  AxiomReport report;
  try {
    const auto& flats = m.all_flats();
    for (std::size_t i = 0; i < flats.size(); ++i) {
      for (std::size_t j = i + 1; j < flats.size(); ++j) {
        const int lhs = m.rank_of(flats[i] | flats[j]) + m.rank_of(flats[i] & flats[j]);
        const int rhs = *m.grade_of(flats[i]) + *m.grade_of(flats[j]);
        if (lhs > rhs) report.add("R3", {flats[i], flats[j]}, "submodularity fails on flats");
      }
    }
    report.merge(verify_rank_function(
        m.ground_size(), [&](const ElementSet& s) { return m.rank_of(s); }, mode));
  } catch (const std::logic_error& e) {
    report.add("closure", {}, e.what());
  }
  return report;
}

// ---------------------------------------------------------------------------

Minor restriction(const Matroid& m, const ElementSet& a) {
  if (a.empty()) throw std::invalid_argument("restriction to the empty set");
  if (!a.all_below(m.ground_size())) throw std::out_of_range("restriction set leaves the ground set");

  const auto new_index = index_map_for(a, m.ground_size());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> family;
  for (const auto& f : m.all_flats()) {
    ElementSet image = compress(f & a, new_index);
    if (seen.insert(image).second) family.push_back(image);
  }
  return {Matroid(a.size(), grade_by_chain_length(family)), a.members()};
}

Minor deletion(const Matroid& m, const ElementSet& x) {
  if (!x.all_below(m.ground_size())) throw std::out_of_range("deleted set leaves the ground set");
  const ElementSet kept = m.ground() - x;
  if (kept.empty()) throw std::invalid_argument("cannot delete every element");
  return restriction(m, kept);
}

Minor contraction(const Matroid& m, const ElementSet& flat) {
  const auto base = m.grade_of(flat);
  if (!base) throw std::invalid_argument("contraction by " + flat.to_string() + ", which is not a flat");
  const ElementSet kept = m.ground() - flat;
  const auto new_index = index_map_for(kept, m.ground_size());
  std::vector<std::vector<ElementSet>> graded(static_cast<std::size_t>(m.rank() - *base) + 1);
  for (int k = *base; k <= m.rank(); ++k) {
    for (const auto& f : m.flats_of_rank(k)) {
      if (flat.is_subset_of(f)) {
        graded[static_cast<std::size_t>(k - *base)].push_back(compress(f - flat, new_index));
      }
    }
  }
  return {Matroid(kept.size(), std::move(graded)), kept.members()};
}

// ---------------------------------------------------------------------------

std::vector<ElementSet> circuits_up_to(const Matroid& m, std::size_t max_size) {
  std::vector<ElementSet> circuits;
  const std::size_t n = m.ground_size();

  // Every circuit C is found once, as (C - max C) extended by max C.
  auto visit = [&](auto& self, const ElementSet& independent, const ElementSet& span,
                   Element start) -> void {
    const std::size_t k = independent.size();
    for (Element e = start; e < n; ++e) {
      if (span.contains(e)) {
        if (k + 1 > max_size) continue;
        ElementSet candidate = independent;
        candidate.insert(e);
        bool minimal = true;
        independent.for_each([&](Element x) {
          if (!minimal) return;
          ElementSet smaller = candidate;
          smaller.erase(x);
          if (static_cast<std::size_t>(m.rank_of(smaller)) != k) minimal = false;
        });
        if (minimal) circuits.push_back(candidate);
      } else if (k + 2 <= max_size) {
        ElementSet bigger = independent;
        bigger.insert(e);
        self(self, bigger, m.closure(bigger), e + 1);
      }
    }
  };
  visit(visit, ElementSet{}, m.closure(ElementSet{}), 0);

  std::sort(circuits.begin(), circuits.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return circuits;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

ComponentPartition components(const Matroid& m) {
  // Components of the fundamental-circuit graph for a greedy basis coincide
  // with the components of the full circuit graph.
  const std::size_t n = m.ground_size();
  const int r = m.rank();
  ElementSet basis;
  ElementSet span = m.closure(ElementSet{});
  for (Element e = 0; e < n; ++e) {
    if (!span.contains(e)) {
      basis.insert(e);
      span = m.closure(basis);
    }
  }

  DisjointSets sets(n);
  (m.ground() - basis).for_each([&](Element x) {
    if (m.rank_of(ElementSet::singleton(x)) == 0) return;  // loop: its own block
    basis.for_each([&](Element b) {
      ElementSet swapped = basis;
      swapped.erase(b);
      swapped.insert(x);
      if (m.rank_of(swapped) == r) sets.unite(b, x);
    });
  });

  std::vector<ElementSet> blocks;
  std::vector<std::size_t> block_of(n, static_cast<std::size_t>(-1));
  for (Element e = 0; e < n; ++e) {
    const std::size_t root = sets.find(e);
    if (block_of[root] == static_cast<std::size_t>(-1)) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].insert(e);
  }
  ComponentPartition partition;
  partition.kappa = blocks.size();
  partition.blocks = std::move(blocks);
  return partition;
}

std::size_t component_count(const Matroid& m) {
  return m.ground_size() == 0 ? 1 : components(m).kappa;
}

bool is_nondegenerate(const Matroid& m, const ElementSet& f) {
  if (!f.all_below(m.ground_size())) throw std::out_of_range("subset leaves the ground set");
  const std::size_t restricted = f.empty() ? 1 : component_count(restriction(m, f).matroid);
  const std::size_t contracted = component_count(contraction(m, m.closure(f)).matroid);
  return restricted + contracted == component_count(m) + 1;
}

// ---------------------------------------------------------------------------

Profile profile(const Matroid& m) {
  Profile p;
  for (const auto& grade : m.flats_by_rank()) {
    p.counts.push_back(grade.size());
    std::vector<std::size_t> sizes;
    sizes.reserve(grade.size());
    for (const auto& f : grade) sizes.push_back(f.size());
    std::sort(sizes.begin(), sizes.end());
    p.sizes.push_back(std::move(sizes));
  }
  return p;
}

namespace {

using Signature = std::vector<std::pair<int, std::size_t>>;

std::vector<Signature> element_signatures(const Matroid& m) {
  std::vector<Signature> sig(m.ground_size());
  for (int k = 0; k <= m.rank(); ++k) {
    for (const auto& f : m.flats_of_rank(k)) {
      f.for_each([&](Element e) { sig[e].emplace_back(k, f.size()); });
    }
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& a, const Matroid& b)
      : a_(a), b_(b), n_(a.ground_size()), forward_(n_, kUnset), backward_(n_, kUnset) {
    const auto sig_a = element_signatures(a_);
    const auto sig_b = element_signatures(b_);
    candidates_.resize(n_);
    for (Element e = 0; e < n_; ++e) {
      for (Element f = 0; f < n_; ++f) {
        if (sig_a[e] == sig_b[f]) candidates_[e].push_back(f);
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Element x, Element y) {
      return candidates_[x].size() < candidates_[y].size();
    });
  }

  std::optional<std::vector<Element>> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    return forward_;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  ElementSet image(const ElementSet& s) const {
    ElementSet out;
    s.for_each([&](Element e) { out.insert(forward_[e]); });
    return out;
  }
  ElementSet preimage(const ElementSet& s) const {
    ElementSet out;
    s.for_each([&](Element e) { out.insert(backward_[e]); });
    return out;
  }

  bool consistent(Element e, Element f) const {
    for (const auto& flat : a_.all_flats()) {
      if (!flat.contains(e)) continue;
      const ElementSet part = flat & domain_;
      if (a_.rank_of(part) != b_.rank_of(image(part))) return false;
    }
    for (const auto& flat : b_.all_flats()) {
      if (!flat.contains(f)) continue;
      const ElementSet part = flat & range_;
      if (b_.rank_of(part) != a_.rank_of(preimage(part))) return false;
    }
    return true;
  }

  bool complete() const {
    for (int k = 0; k <= a_.rank(); ++k) {
      for (const auto& flat : a_.flats_of_rank(k)) {
        const auto g = b_.grade_of(image(flat));
        if (!g || *g != k) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == n_) return complete();
    const Element e = order_[depth];
    for (Element f : candidates_[e]) {
      if (backward_[f] != kUnset) continue;
      forward_[e] = f;
      backward_[f] = e;
      domain_.insert(e);
      range_.insert(f);
      if (consistent(e, f) && assign(depth + 1)) return true;
      domain_.erase(e);
      range_.erase(f);
      forward_[e] = kUnset;
      backward_[f] = kUnset;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  std::size_t n_;
  std::vector<Element> forward_;
  std::vector<Element> backward_;
  ElementSet domain_;
  ElementSet range_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> order_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() > kIsomorphismLimit || m2.ground_size() > kIsomorphismLimit) {
    throw std::length_error("isomorphism search limited to " + std::to_string(kIsomorphismLimit) +
                            " elements; compare profiles instead");
  }
  if (m1.ground_size() != m2.ground_size() || profile(m1) != profile(m2)) return std::nullopt;
  return IsomorphismSearch(m1, m2).run();
}

}  // namespace hypermod
