#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "steklov/errors.hpp"
#include "steklov/numerics.hpp"

using namespace steklov;
using th::pi;

TEST_CASE("scalar parsing and exactness") {
  Scalar a = Scalar::parse("3/6");
  CHECK(a.is_exact());
  CHECK(a.exact() == mpq_class(1, 2));
  CHECK(a.to_string() == "1/2");
  CHECK(Scalar::parse("-4").exact() == -4);
  Scalar f = Scalar::parse("0.25");
  CHECK_FALSE(f.is_exact());
  CHECK(f.to_double() == 0.25);
  CHECK_THROWS_AS(Scalar::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Scalar::parse("abc"), DomainError);
}

TEST_CASE("scalar arithmetic stays exact until a double enters") {
  Scalar x = th::q(1, 3) + th::q(1, 6);
  CHECK(x.is_exact());
  CHECK(x == th::q(1, 2));
  Scalar y = x * Scalar(0.5);
  CHECK_FALSE(y.is_exact());
  CHECK(y.to_double() == doctest::Approx(0.25));
  // an exact zero kills a double factor
  Scalar z = Scalar(0) * Scalar(0.3);
  CHECK(z.is_exact());
  CHECK(z.is_zero());
}

TEST_CASE("near is exact on exact inputs and relative otherwise") {
  CHECK_FALSE(near(th::q(1, 3), th::q(1, 3) + th::q(1, 1000000000000000), 1e-3));
  CHECK(near(Scalar(1e6), Scalar(1e6 + 1e-7), 1e-12));
  CHECK_FALSE(near(Scalar(1.0), Scalar(1.0 + 1e-9), 1e-12));
}

TEST_CASE("angle classification") {
  AngleClass c = pi(1, 3).classify();
  CHECK(c.kind == AngleKind::Odd);
  CHECK(c.index == 1);
  CHECK(c.parity == -1);
  c = pi(1, 2).classify();
  CHECK(c.kind == AngleKind::Even);
  CHECK(c.index == 1);
  CHECK(c.parity == -1);
  c = pi(1, 4).classify();
  CHECK(c.kind == AngleKind::Even);
  CHECK(c.parity == 1);
  CHECK(pi(1, 5).classify().parity == 1);
  CHECK(pi(3, 5).classify().kind == AngleKind::Generic);
  CHECK(Angle::radians(1.0).classify().kind == AngleKind::Generic);
  CHECK_THROWS_AS(pi(1, 1), DomainError);
  CHECK_THROWS_AS(Angle::radians(-0.1), DomainError);
}

TEST_CASE("c and s on special angles are exact") {
  Scalar c = c_of(pi(1, 2));
  REQUIRE(c.is_exact());
  CHECK(c == Scalar(-1));
  CHECK(s_of(pi(1, 2)).is_zero());
  Scalar s = s_of(pi(1, 5));
  REQUIRE(s.is_exact());
  CHECK(s == Scalar(1));
  CHECK(c_of(pi(1, 7)).is_zero());
  CHECK(s_of(pi(1, 7)) == Scalar(-1));
}

TEST_CASE("c and s agree with direct substitution") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.05, 3.1);
  for (int i = 0; i < 200; ++i) {
    double a = U(rng);
    double th = oracle::kPi * oracle::kPi / (2 * a);
    CHECK(c_of(Angle::radians(a)).to_double() == doctest::Approx(std::cos(th)).epsilon(1e-12));
    CHECK(s_of(Angle::radians(a)).to_double() == doctest::Approx(std::sin(th)).epsilon(1e-12));
  }
  // cos(5 pi / 6)
  CHECK(c_of(pi(3, 5)).to_double() == doctest::Approx(-0.8660254037844386).epsilon(1e-14));
}

TEST_CASE("abs_c_inverse recovers the angle in its band") {
  Angle a = abs_c_inverse(0.5, 1);
  CHECK(a.rad() == doctest::Approx(3 * oracle::kPi / 4).epsilon(1e-13));
  std::mt19937_64 rng(5);
  for (int m = 1; m <= 8; ++m) {
    double lo = oracle::kPi / (m + 1), hi = oracle::kPi / m;
    std::uniform_real_distribution<double> U(lo + 1e-6, hi - 1e-6);
    for (int i = 0; i < 50; ++i) {
      double alpha = U(rng);
      double th = oracle::kPi * oracle::kPi / (2 * alpha);
      Angle back = abs_c_inverse(std::fabs(std::cos(th)), std::fabs(std::sin(th)), m);
      CHECK(back.rad() == doctest::Approx(alpha).epsilon(1e-10));
    }
  }
}

TEST_CASE("snap_special and nearest_odd") {
  Angle a = snap_special(Angle::radians(oracle::kPi / 5 + 1e-12), 1e-10);
  REQUIRE(a.is_exact());
  CHECK(a.pi_mult() == mpq_class(1, 5));
  Angle b = snap_special(Angle::radians(oracle::kPi / 6 + 1e-12), 1e-10, true, false);
  CHECK_FALSE(b.is_exact());
  auto o = nearest_odd(oracle::kPi / 9 + 1e-8, 1e-6, 1000);
  REQUIRE(o);
  CHECK(o->pi_mult() == mpq_class(1, 9));
  CHECK_FALSE(nearest_odd(1.0, 1e-6, 1000));
}

TEST_CASE("cos_pi and sin_pi reduce exactly") {
  CHECK(cos_pi(mpq_class(1000001, 3)) == doctest::Approx(std::cos(oracle::kPi / 3)).epsilon(1e-14));
  CHECK(sin_pi(mpq_class(-7, 6)) == doctest::Approx(0.5).epsilon(1e-14));
}
