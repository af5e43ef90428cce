#include "hypermod/realize.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace hypermod {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  // a^(p-2) mod p
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

/// Row-echelon basis over GF(p) supporting span-membership queries.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::int64_t p) : p_(p) {}

  /// Adds v; returns false if it was already in the span.
  bool add(PointVector v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;
    const std::int64_t inv = inverse(v[pivot], p_);
    for (auto& c : v) c = c * inv % p_;
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  [[nodiscard]] bool spans(PointVector v) const {
    reduce(v);
    for (auto c : v)
      if (c != 0) return false;
    return true;
  }

  [[nodiscard]] std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(PointVector& v) const {
    for (const auto& [pivot, row] : rows_) {
      const std::int64_t factor = v[pivot];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i] - factor * row[i], p_);
    }
  }

  std::int64_t p_;
  std::vector<std::pair<std::size_t, PointVector>> rows_;
};

}  // namespace

PointConfig normalized(PointConfig cfg) {
  if (!is_prime(cfg.prime)) {
    throw std::invalid_argument("field order " + std::to_string(cfg.prime) + " is not prime");
  }
  if (cfg.dim == 0) throw std::invalid_argument("point dimension must be positive");
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    auto& v = cfg.points[i];
    if (v.size() != cfg.dim) {
      throw std::invalid_argument("point " + std::to_string(i) + " has " + std::to_string(v.size()) +
                                  " coordinates, expected " + std::to_string(cfg.dim));
    }
    for (auto& c : v) c = mod(c, cfg.prime);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) throw std::invalid_argument("point " + std::to_string(i) + " is the zero vector");
    const std::int64_t inv = inverse(v[lead], cfg.prime);
    for (auto& c : v) c = c * inv % cfg.prime;
  }
  return cfg;
}

std::vector<std::pair<std::size_t, std::size_t>> parallel_points(const PointConfig& cfg) {
  const PointConfig norm = normalized(cfg);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < norm.points.size(); ++i) {
    for (std::size_t j = i + 1; j < norm.points.size(); ++j) {
      if (norm.points[i] == norm.points[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

int matrix_rank(const std::vector<PointVector>& rows, std::int64_t p) {
  EchelonBasis basis(p);
  for (const auto& r : rows) {
    PointVector v = r;
    for (auto& c : v) c = mod(c, p);
    basis.add(std::move(v));
  }
  return static_cast<int>(basis.dimension());
}

Matroid matroid_from_points(const PointConfig& cfg) {
  const PointConfig norm = normalized(cfg);
  const std::size_t n = norm.points.size();
  if (n > ElementSet::kCapacity) {
    throw std::invalid_argument("too many points: " + std::to_string(n));
  }

  auto closure = [&](const ElementSet& a) {
    EchelonBasis basis(norm.prime);
    a.for_each([&](Element e) { basis.add(norm.points[e]); });
    ElementSet out;
    for (Element e = 0; e < n; ++e) {
      if (basis.spans(norm.points[e])) out.insert(e);
    }
    return out;
  };

  const ElementSet ground = ElementSet::full(n);
  std::vector<std::vector<ElementSet>> graded{{ElementSet{}}};
  while (!(graded.back().size() == 1 && graded.back().front() == ground)) {
    std::set<ElementSet> next;
    for (const auto& f : graded.back()) {
      ElementSet covered = f;
      for (Element e = 0; e < n; ++e) {
        if (covered.contains(e)) continue;
        ElementSet seed = f;
        seed.insert(e);
        ElementSet g = closure(seed);
        covered |= g;
        next.insert(g);
      }
    }
    graded.emplace_back(next.begin(), next.end());
  }
  return Matroid(n, std::move(graded));
}

std::vector<PointVector> projective_points(std::int64_t q, std::size_t dim) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
  std::vector<PointVector> out;
  PointVector v(dim, 0);
  // Odometer over GF(q)^dim in lexicographic order; keep vectors whose first
  // nonzero coordinate is 1.
  while (true) {
    std::size_t lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    if (lead < dim && v[lead] == 1) out.push_back(v);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (dim == 0) return out;
  }
}

PointConfig pg3_points(std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
  const std::int64_t count = (q * q * q * q - 1) / (q - 1);
  if (count > static_cast<std::int64_t>(ElementSet::kCapacity)) {
    throw std::invalid_argument("PG(3," + std::to_string(q) + ") has " + std::to_string(count) +
                                " points, above the element capacity");
  }
  return PointConfig{q, 4, projective_points(q, 4)};
}

Matroid pg3(std::int64_t q) { return matroid_from_points(pg3_points(q)); }

Matroid uniform(int r, std::size_t n) {
  if (r < 0 || static_cast<std::size_t>(r) > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                                " n=" + std::to_string(n));
  }
  std::vector<std::vector<ElementSet>> graded(static_cast<std::size_t>(r) + 1);
  auto grow = [&](auto& self, ElementSet current, Element start) -> void {
    const std::size_t k = current.size();
    if (k < static_cast<std::size_t>(r)) graded[k].push_back(current);
    if (k + 1 >= static_cast<std::size_t>(r)) return;
    for (Element e = start; e < n; ++e) {
      ElementSet bigger = current;
      bigger.insert(e);
      self(self, bigger, e + 1);
    }
  };
  if (r > 0) grow(grow, ElementSet{}, 0);
  graded[static_cast<std::size_t>(r)].push_back(ElementSet::full(n));
  return Matroid(n, std::move(graded));
}

Matroid vamos() {
  const std::vector<ElementSet> planes = {
      {0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}, {0, 1, 6, 7}, {2, 3, 6, 7}};
  std::vector<std::vector<ElementSet>> graded(5);
  graded[0].push_back(ElementSet{});
  for (Element a = 0; a < 8; ++a) {
    graded[1].push_back(ElementSet::singleton(a));
    for (Element b = a + 1; b < 8; ++b) {
      graded[2].push_back(ElementSet{a, b});
      for (Element c = b + 1; c < 8; ++c) {
        const ElementSet triple{a, b, c};
        bool inside = false;
        for (const auto& p : planes) inside = inside || triple.is_subset_of(p);
        if (!inside) graded[3].push_back(triple);
      }
    }
  }
  for (const auto& p : planes) graded[3].push_back(p);
  graded[4].push_back(ElementSet::full(8));
  return Matroid(8, std::move(graded));
}

}  // namespace hypermod
