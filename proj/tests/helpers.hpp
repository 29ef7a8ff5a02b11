#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "steklov/charpoly.hpp"
#include "steklov/polygon.hpp"

namespace th {

inline steklov::PolygonData to_polygon(const oracle::Shape& s) {
  std::vector<steklov::Scalar> len(s.len.begin(), s.len.end());
  std::vector<steklov::Angle> ang;
  for (double a : s.ang) ang.push_back(steklov::Angle::radians(a));
  return steklov::PolygonData::from_lengths(len, ang);
}

// Random convex n-gon whose angles at the given positions are the exact odd
// angles pi/(2k+1).
inline steklov::PolygonData random_with_odd(std::mt19937_64& rng, std::size_t n,
                                            const std::vector<std::pair<std::size_t, long>>& odd) {
  std::vector<std::pair<std::size_t, double>> pin;
  for (auto [pos, k] : odd) pin.push_back({pos, oracle::kPi / (2 * k + 1)});
  oracle::Shape s = oracle::random_convex(rng, n, 0.1, pin);
  std::vector<steklov::Scalar> len(s.len.begin(), s.len.end());
  std::vector<steklov::Angle> ang;
  for (std::size_t j = 0; j < n; ++j) {
    ang.push_back(steklov::Angle::radians(s.ang[j]));
    for (auto [pos, k] : odd)
      if (pos == j) ang.back() = steklov::Angle::odd(k);
  }
  return steklov::PolygonData::from_lengths(len, ang);
}

inline std::vector<double> lengths(const steklov::PolygonData& p) {
  std::vector<double> out;
  for (const auto& e : p.edges()) out.push_back(e.length.to_double());
  return out;
}

inline std::vector<double> angles(const steklov::PolygonData& p) {
  std::vector<double> out;
  for (const auto& a : p.angles()) out.push_back(a.rad());
  return out;
}

inline steklov::Angle pi(long p, long q) { return steklov::Angle::pi_multiple(p, q); }
inline steklov::Scalar q(long p, long r) { return steklov::Scalar::rational(p, r); }

// Random triangle with one odd angle pi/(2k+1) at position 0, the other two
// random rational multiples of pi.
inline steklov::PolygonData random_one_odd(std::mt19937_64& rng, long den_cap = 60) {
  std::uniform_int_distribution<long> K(1, 6);
  for (;;) {
    long k = K(rng);
    mpq_class a1(1, 2 * k + 1);
    std::uniform_int_distribution<long> D(3, den_cap);
    long d = D(rng);
    std::uniform_int_distribution<long> N(1, d - 1);
    mpq_class a2(N(rng), d);
    a2.canonicalize();
    mpq_class a3 = 1 - a1 - a2;
    if (a3 <= 0 || a3.get_den() > den_cap) continue;
    auto A2 = steklov::Angle::pi_multiple(a2), A3 = steklov::Angle::pi_multiple(a3);
    if (A2.is_odd() || A3.is_odd()) continue;
    return steklov::make_triangle(steklov::Angle::pi_multiple(a1), A2, A3);
  }
}

// Random triangle with exactly two odd angles.
inline steklov::PolygonData random_two_odd(std::mt19937_64& rng, long kmax = 14) {
  std::uniform_int_distribution<long> K(1, kmax);
  for (;;) {
    mpq_class a1(1, 2 * K(rng) + 1), a2(1, 2 * K(rng) + 1);
    mpq_class a3 = 1 - a1 - a2;
    auto A3 = steklov::Angle::pi_multiple(a3);
    if (A3.is_odd()) continue;
    return steklov::make_triangle(steklov::Angle::pi_multiple(a1), steklov::Angle::pi_multiple(a2), A3);
  }
}

// Random triangle with generic float angles.
inline steklov::PolygonData random_float_triangle(std::mt19937_64& rng) {
  auto s = oracle::random_convex(rng, 3, 0.2);
  return steklov::make_triangle(steklov::Angle::radians(s.ang[0]), steklov::Angle::radians(s.ang[1]),
                                steklov::Angle::radians(oracle::kPi - s.ang[0] - s.ang[1]));
}

}  // namespace th
