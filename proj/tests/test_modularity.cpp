#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "hypermod/modularity.hpp"
#include "hypermod/realize.hpp"
#include "oracles.hpp"

using namespace hypermod;

using oracle::drop_zero;

namespace {

oracle::PointZeroIncidences incidences_at_zero() { return oracle::pg32_incidences_at_zero(); }

}  // namespace

TEST_CASE("modular_defect") {
  const Matroid u = uniform(3, 4);
  CHECK(modular_defect(u, {0}, {0, 1}) == 0);
  CHECK(modular_defect(u, {0, 1}, {2, 3}) == 1);
  CHECK_THROWS_AS(modular_defect(u, {0, 1, 2}, {0}), std::invalid_argument);

  const auto inc = incidences_at_zero();
  REQUIRE(inc.planes.size() == 7);
  REQUIRE(inc.lines.size() == 7);
  const Matroid d = fixtures::pg3_minus(2, {0});
  const oracle::Mask plane = inc.planes.front();
  const auto line = std::find_if(inc.lines.begin(), inc.lines.end(), [&](oracle::Mask l) { return (l & ~plane) != 0; });
  REQUIRE(line != inc.lines.end());
  CHECK(modular_defect(d, oracle::to_set(drop_zero(plane)), oracle::to_set(drop_zero(*line))) == 1);
}

TEST_CASE("is_modular_pair and is_modular_flat") {
  const Matroid m = pg3(2);
  const auto& planes = m.flats_of_rank(3);
  CHECK(is_modular_pair(m, planes[0], planes[1]));
  CHECK_FALSE(is_modular_pair(uniform(3, 4), {0, 1}, {2, 3}));
  CHECK(is_modular_flat(m, m.ground()));
  CHECK(is_modular_flat(vamos(), vamos().ground()));
  CHECK_FALSE(is_modular_flat(uniform(3, 4), {0, 1}));
  CHECK_THROWS_AS(is_modular_flat(uniform(3, 4), {0, 1, 2}), std::invalid_argument);
  for (const Matroid& x : {vamos(), uniform(3, 6), fixtures::pg3_minus(2, {0})})
    for (const auto& p : x.flats_of_rank(1)) CHECK(is_modular_flat(x, p));
}

TEST_CASE("is_modular") {
  CHECK(is_modular(pg3(2)));
  CHECK_FALSE(is_modular(fixtures::pg3_minus(2, {0})));
  CHECK(is_modular(uniform(3, 3)));
  CHECK_FALSE(is_modular(vamos()));
}

TEST_CASE("is_hypermodular") {
  CHECK(is_hypermodular(pg3(2)));
  CHECK_THROWS_AS(is_hypermodular(uniform(2, 3)), std::invalid_argument);

  const Matroid v = vamos();
  CHECK_FALSE(is_hypermodular(v));
  const auto w = hypermodularity_witness(v);
  REQUIRE(w);
  CHECK(v.grade_of(w->first) == 3);
  CHECK(v.grade_of(w->second) == 3);
  CHECK(modular_defect(v, w->first, w->second) > 0);
  // The disjoint pair of corank-1 flats named in the literature.
  CHECK(v.grade_of({0, 2, 4}) == 3);
  CHECK(v.grade_of({1, 3, 6}) == 3);
  CHECK(modular_defect(v, {0, 2, 4}, {1, 3, 6}) == 2);
  CHECK_FALSE(hypermodularity_witness(pg3(3)));
}

TEST_CASE("total_modular_defect") {
  CHECK(total_modular_defect(pg3(2)).total == 0);
  CHECK(total_modular_defect(uniform(3, 4)).total == 3);

  const Matroid d = fixtures::pg3_minus(2, {0});
  const DefectReport report = total_modular_defect(d);
  const auto space = oracle::without(oracle::pg3_space(2), oracle::bit(0));
  const oracle::RankFn rank = [&](oracle::Mask a) { return space.rank(a); };
  const auto flats = oracle::flats_by_rank(14, 4, rank, [&](oracle::Mask a) { return space.closure(a); });
  const long long expected = oracle::total_defect(flats, rank);
  CHECK(expected == 49);
  CHECK(report.total == expected);

  long long sum = 0;
  for (const auto& [pair, defect] : report.pair_defects) {
    CHECK(defect > 0);
    CHECK(pair.first < pair.second);
    sum += defect;
  }
  CHECK(sum == report.total);
  CHECK(report.disjoint_flags.size() == 28);

  // Independent total on the uniform oracle.
  const auto u_flats = oracle::flats_by_rank(6, 3, oracle::uniform_rank(3),
                                             oracle::closure_from_rank(6, oracle::uniform_rank(3)));
  CHECK(total_modular_defect(uniform(3, 6)).total == oracle::total_defect(u_flats, oracle::uniform_rank(3)));
}

TEST_CASE("disjoint_rank32_pairs") {
  CHECK(disjoint_rank32_pairs(pg3(2)).empty());
  CHECK_THROWS_AS(disjoint_rank32_pairs(uniform(3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_rank32_pairs(Matroid(4, {{{3}}, {{0, 3}, {1, 3}, {2, 3}}, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {{0, 1, 2, 3}}})), std::invalid_argument);

  const Matroid d = fixtures::pg3_minus(2, {0});
  const auto pairs = disjoint_rank32_pairs(d);
  CHECK(pairs.size() == 28);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));

  std::set<FlatPair> expected;
  const auto inc = incidences_at_zero();
  for (auto q : inc.planes)
    for (auto l : inc.lines)
      if ((l & ~q) != 0) expected.insert({oracle::to_set(drop_zero(q)), oracle::to_set(drop_zero(l))});
  CHECK(std::set<FlatPair>(pairs.begin(), pairs.end()) == expected);
}

TEST_CASE("defect is symmetric and nonnegative") {
  std::mt19937_64 rng(3);
  for (const Matroid& m : {vamos(), fixtures::pg3_minus(2, {0, 1}), uniform(3, 6), fixtures::ag32()}) {
    const auto& flats = m.all_flats();
    for (int t = 0; t < 500; ++t) {
      const auto& a = oracle::random_pick(rng, flats);
      const auto& b = oracle::random_pick(rng, flats);
      const int d = modular_defect(m, a, b);
      CHECK(d >= 0);
      CHECK(d == modular_defect(m, b, a));
    }
  }
}

TEST_CASE("modular implies hypermodular") {
  for (const Matroid& m : {pg3(2), pg3(3), uniform(3, 3), uniform(5, 5), fixtures::cone_fano(), vamos(),
                           uniform(3, 5), fixtures::pg3_minus(2, {0})}) {
    if (is_modular(m)) CHECK(is_hypermodular(m));
  }
}
