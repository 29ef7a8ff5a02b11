#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "steklov/errors.hpp"
#include "steklov/search.hpp"

using namespace steklov;
using th::pi;
using th::q;

namespace {

std::vector<std::vector<Scalar>> listed_multisets() {
  std::vector<std::vector<std::pair<long, long>>> raw = {
      {{1, 14}, {1, 14}, {1, 7}, {2, 7}, {3, 7}},      {{1, 12}, {1, 12}, {1, 6}, {1, 4}, {5, 12}},
      {{1, 12}, {1, 12}, {1, 6}, {1, 3}, {1, 3}},      {{1, 10}, {1, 10}, {1, 10}, {3, 10}, {2, 5}},
      {{1, 10}, {1, 10}, {1, 5}, {1, 5}, {2, 5}},      {{1, 10}, {1, 10}, {1, 5}, {3, 10}, {3, 10}},
      {{1, 8}, {1, 8}, {1, 8}, {1, 4}, {3, 8}},        {{1, 8}, {1, 8}, {1, 4}, {1, 4}, {1, 4}},
      {{1, 7}, {1, 7}, {3, 14}, {3, 14}, {2, 7}},      {{1, 6}, {1, 6}, {1, 6}, {1, 6}, {1, 3}},
      {{1, 6}, {1, 6}, {1, 6}, {1, 4}, {1, 4}}};
  std::vector<std::vector<Scalar>> out;
  for (auto& m : raw) {
    std::vector<Scalar> v;
    for (auto [a, b] : m) v.push_back(q(a, b));
    out.push_back(v);
  }
  return out;
}

bool same(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("triangle collisions up to denominator 15") {
  SearchReport r = find_charpoly_collisions_triangles(15);
  bool found = false;
  for (const CollisionGroup& g : r.groups) {
    for (std::size_t i = 1; i < g.members.size(); ++i) CHECK(g.members[i].odd_count() == g.odd_count);
    std::array<mpq_class, 3> a{mpq_class(1, 15), mpq_class(1, 3), mpq_class(3, 5)};
    std::array<mpq_class, 3> b{mpq_class(1, 5), mpq_class(1, 5), mpq_class(3, 5)};
    bool ha = std::find(g.angles.begin(), g.angles.end(), a) != g.angles.end();
    bool hb = std::find(g.angles.begin(), g.angles.end(), b) != g.angles.end();
    if (ha && hb) found = true;
  }
  CHECK(found);
  CHECK(find_charpoly_collisions_triangles(4).groups.empty());
}

TEST_CASE("collision groups are sound up to denominator 24") {
  SearchReport r = find_charpoly_collisions_triangles(24);
  for (const CollisionGroup& g : r.groups) {
    REQUIRE(g.members.size() >= 2);
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      CHECK(poly_equal(char_poly(g.members[i]), g.shared));
      CHECK(g.members[i].odd_count() == g.odd_count);
      for (std::size_t j = i + 1; j < g.members.size(); ++j) CHECK_FALSE(congruent(g.members[i], g.members[j]));
    }
  }
}

TEST_CASE("quadrilaterals against the equilateral triangle") {
  QuadVsEqReport r = quad_vs_equilateral(5, 2500);
  CHECK(r.entries.size() == 15);
  for (const QuadVsEqEntry& e : r.entries) {
    if (!e.parity_opposite) continue;
    CHECK(e.cos_difference_one);
    CHECK(e.c2c4_positive);
    CHECK(e.charpoly_matches);
    CHECK_FALSE(e.feasible);
    CHECK(e.exact_min_residual > 1e-6);
    CHECK(e.sweep_min_residual >= e.exact_min_residual - 1e-9);
  }
  // residual for (1, 2) from an independent least-squares solve
  const QuadVsEqEntry& e12 = r.entries[1];
  REQUIRE(e12.k == 1);
  REQUIRE(e12.j == 2);
  CHECK(e12.exact_min_residual == doctest::Approx(0.0954915).epsilon(1e-5));
}

TEST_CASE("no-odd pentagon multisets at denominator 14") {
  auto got = smooth_candidate_pentagons(14, false);
  auto want = listed_multisets();
  REQUIRE(got.size() == want.size());
  int one = 0, two = 0;
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const PentagonPattern& p) { return same(p.lengths, w); });
    REQUIRE(it != got.end());
    (it->lstar_size == 1 ? one : two)++;
  }
  CHECK(one == 9);
  CHECK(two == 2);
}

TEST_CASE("smaller bound gives the listed multisets with small denominators") {
  auto got = smooth_candidate_pentagons(6, false);
  std::size_t expected = 0;
  for (const auto& w : listed_multisets())
    if (std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.exact().get_den() <= 6; })) ++expected;
  CHECK(got.size() == expected);
}

TEST_CASE("pentagons with one odd angle") {
  auto got = smooth_candidate_pentagons(14, true);
  REQUIRE(got.size() == 3);
  auto has = [&](Scalar curved, std::vector<Scalar> l) {
    return std::any_of(got.begin(), got.end(),
                       [&](const PentagonPattern& p) { return *p.curved == curved && same(p.lengths, l); });
  };
  CHECK(has(q(1, 4), {q(1, 4), q(1, 4), q(1, 4)}));
  CHECK(has(q(1, 3), {q(1, 6), q(1, 3), q(1, 6)}));
  CHECK(has(q(1, 6), {q(1, 3), q(1, 6), q(1, 3)}));
}

TEST_CASE("length multiset conditions") {
  MultisetCheck m = check_length_multiset({q(1, 8), q(1, 8), q(1, 4), q(1, 4), q(1, 4)}, 5);
  CHECK(m.below_half);
  CHECK(m.lstar_size == 1);
  CHECK(m.lstar_multiplicity);
  CHECK(m.shortest_multiplicity);
  CHECK(m.splits_in_halves);
  MultisetCheck bad = check_length_multiset({q(1, 10), q(1, 5), q(1, 5), q(1, 5), q(3, 10)}, 5);
  CHECK_FALSE(bad.lstar_multiplicity);
}

TEST_CASE("smooth_check rejects triangles and quadrilaterals") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 200; ++it) {
    PolygonData p = th::to_polygon(oracle::random_convex(rng, 3 + it % 2));
    SmoothCheckResult r = smooth_check(p);
    CHECK_FALSE(r.passes);
    CHECK(r.conditions[0].status == CheckStatus::Fail);
    CHECK(r.conditions[1].status == CheckStatus::Fail);
  }
  CHECK_FALSE(smooth_check(make_regular(3)).passes);
}

TEST_CASE("equilateral pentagon fails the boundary split") {
  SmoothCheckResult r = smooth_check(make_regular(5));
  auto it = std::find_if(r.conditions.begin(), r.conditions.end(),
                         [](const Condition& c) { return c.name == "boundary_split"; });
  REQUIRE(it != r.conditions.end());
  CHECK(it->status == CheckStatus::Fail);
  CHECK_FALSE(r.passes);
}

TEST_CASE("hexagon lengths meet the l-star count bound") {
  // lengths (1/16, 1/8, 1/8, 3/16, 1/4, 1/4) on a hexagon; the angle data
  // does not matter for this condition
  std::vector<Scalar> L{q(1, 16), q(1, 8), q(3, 16), q(1, 4), q(1, 8), q(1, 4)};
  PolygonData h = PolygonData::from_lengths(L, std::vector<Angle>(6, pi(2, 3)));
  SmoothCheckResult r = smooth_check(h);
  auto it = std::find_if(r.conditions.begin(), r.conditions.end(),
                         [](const Condition& c) { return c.name == "lstar_count_bound"; });
  REQUIRE(it != r.conditions.end());
  CHECK(it->status == CheckStatus::Pass);
  CHECK(it->detail == "2 <= 2");
}
