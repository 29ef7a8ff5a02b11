#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "steklov/errors.hpp"
#include "steklov/polygon.hpp"

using namespace steklov;
using th::pi;
using th::q;

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(PolygonData::from_lengths({q(1, 2), q(1, 2)}, {pi(1, 2)}), GeometryError);
  CHECK_THROWS_AS(PolygonData::from_lengths({q(1, 2), Scalar(0), q(1, 2)}, {pi(1, 3), pi(1, 3), pi(1, 3)}),
                  GeometryError);
  CHECK_THROWS_AS(make_triangle(pi(1, 2), pi(1, 2), pi(1, 3)), GeometryError);
}

TEST_CASE("right isosceles triangle matches the law of sines") {
  PolygonData t = make_triangle(pi(1, 2), pi(1, 4), pi(1, 4));
  auto L = oracle::triangle_lengths(oracle::kPi / 2, oracle::kPi / 4, oracle::kPi / 4);
  for (int i = 0; i < 3; ++i) CHECK(t.length(i).to_double() == doctest::Approx(L[i]).epsilon(1e-14));
  CHECK(t.length(2).to_double() == doctest::Approx(0.41421356237309503).epsilon(1e-14));
  CHECK(t.length(0).to_double() == doctest::Approx(0.2928932188134524).epsilon(1e-14));
}

TEST_CASE("exact equilateral triangle and regular pentagon") {
  PolygonData t = make_triangle(pi(1, 3), pi(1, 3), pi(1, 3));
  for (int i = 0; i < 3; ++i) CHECK(t.length(i) == q(1, 3));
  PolygonData p = make_regular(5);
  CHECK(p.n() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(p.length(i) == q(1, 5));
    CHECK(p.angle(i).pi_mult() == mpq_class(3, 5));
  }
  CHECK(check_closure(p));
}

TEST_CASE("triangle constructors close up") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    PolygonData t = th::random_float_triangle(rng);
    CHECK(check_closure(t));
    CHECK(oracle::closure_gap(th::lengths(t), th::angles(t)) < 1e-10);
    PolygonData u = triangle_from_lengths(t.length(0), t.length(1), t.length(2));
    CHECK(congruent(t, u));
  }
  CHECK_THROWS_AS(triangle_from_lengths(q(1, 10), q(1, 10), q(4, 5)), GeometryError);
}

TEST_CASE("rectangle, parallelogram and kite constructors") {
  PolygonData r = make_rectangle(q(1, 6));
  CHECK(r.length(0) == q(1, 6));
  CHECK(r.length(1) == q(1, 3));
  CHECK(check_closure(r));
  PolygonData par = make_parallelogram(q(1, 8), pi(3, 4));
  CHECK(check_closure(par));
  CHECK(par.angle(1).pi_mult() == mpq_class(1, 4));
  PolygonData k = make_kite(Scalar(0.15), Angle::radians(1.3));
  CHECK(check_closure(k));
  CHECK(k.length(2).to_double() == doctest::Approx(0.35));
  PolygonData k2 = make_kite_from(q(1, 5), KiteVertex::GammaPrime, pi(1, 5));
  CHECK(check_closure(k2));
  CHECK(k2.angle(2).pi_mult() == mpq_class(1, 5));
  CHECK_THROWS_AS(make_rectangle(q(1, 2)), GeometryError);
}

TEST_CASE("reduce merges edges at odd vertices") {
  // pentagon lengths with the angle at vertex 0 (between edges 0 and 1)
  // replaced by pi/3; reduce only reads lengths and angle classes
  std::mt19937_64 rng(8);
  PolygonData p = make_regular(5);
  oracle::Shape s = oracle::random_convex(rng, 5);
  std::vector<Scalar> L(s.len.begin(), s.len.end());
  std::vector<Angle> A{pi(1, 3)};
  for (int i = 1; i < 5; ++i) A.push_back(Angle::radians(s.ang[i]));
  PolygonData odd = PolygonData::from_lengths(L, A);
  PolygonData red = reduce(odd);
  REQUIRE(red.n() == 4);
  int curved = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (red.edges()[i].kind == EdgeKind::Curved) {
      ++curved;
      CHECK(red.length(i).to_double() == doctest::Approx(s.len[0] + s.len[1]).epsilon(1e-15));
      // the curved edge runs between the neighbours of the removed vertex
      CHECK(red.angle((i + 3) % 4).rad() == doctest::Approx(s.ang[4]));
      CHECK(red.angle(i).rad() == doctest::Approx(s.ang[1]));
    }
  CHECK(curved == 1);
  CHECK(red.perimeter().to_double() == doctest::Approx(odd.perimeter().to_double()));

  PolygonData same = reduce(p);
  CHECK(same.n() == 5);
  PolygonData zero = reduce(make_regular(3));
  CHECK(zero.is_zero_gon());
  CHECK(zero.perimeter() == Scalar(1));
}

TEST_CASE("l_star examples") {
  auto ls = l_star({q(1, 16), q(1, 8), q(1, 8), q(3, 16), q(1, 4), q(1, 4)});
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == q(1, 16));
  CHECK(ls[1] == q(1, 8));
  ls = l_star({q(1, 6), q(1, 6), q(1, 6), q(1, 4), q(1, 4)});
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == q(1, 6));
  CHECK(ls[1] == q(1, 4));
}

TEST_CASE("l_star agrees with the bitmask oracle and keeps the minimum") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> N(3, 9), D(1, 12);
  for (int it = 0; it < 300; ++it) {
    int n = N(rng);
    std::vector<Scalar> L;
    std::vector<double> Ld;
    for (int i = 0; i < n; ++i) {
      int d = D(rng);
      L.push_back(q(d, 48));
      Ld.push_back(d / 48.0);
    }
    auto got = l_star(L);
    auto want = oracle::l_star(Ld);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_double() == doctest::Approx(want[i]));
    Scalar mn = *std::min_element(L.begin(), L.end());
    CHECK(got.front() == mn);
    for (const Scalar& v : got) CHECK(contains(L, v));
  }
}

TEST_CASE("canonical form is invariant under all relabelings") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 3 + it % 6;
    PolygonData p = th::to_polygon(oracle::random_convex(rng, n));
    CHECK(check_closure(p));
    PolygonData c = canonical_form(p);
    for (std::size_t s = 0; s < n; ++s)
      for (bool refl : {false, true}) {
        PolygonData r = relabel(p, s, refl);
        CHECK(check_closure(r));
        PolygonData cr = canonical_form(r);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(cr.length(i).to_double() == doctest::Approx(c.length(i).to_double()).epsilon(1e-12));
          CHECK(cr.angle(i).rad() == doctest::Approx(c.angle(i).rad()).epsilon(1e-12));
        }
        CHECK(congruent(p, r));
      }
  }
}

TEST_CASE("the two triangles sharing a polynomial are not congruent") {
  PolygonData a = make_triangle(pi(1, 3), pi(1, 15), pi(3, 5));
  PolygonData b = make_triangle(pi(1, 5), pi(1, 5), pi(3, 5));
  CHECK_FALSE(congruent(a, b));
}

TEST_CASE("subset sums") {
  auto s = subset_sums({q(1, 4), q(1, 4), q(1, 2)});
  CHECK(s.size() == 4);  // 1/4, 1/2, 3/4, 1
  CHECK(contains(s, q(3, 4)));
  CHECK(contains(s, q(1, 2)));
  CHECK_FALSE(contains(s, q(1, 8)));
}
