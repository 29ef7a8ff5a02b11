#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/polygon.hpp"
#include "steklov/tolerances.hpp"

namespace steklov {

struct CollisionGroup {
  std::vector<std::array<mpq_class, 3>> angles;  // multiples of pi, sorted
  std::vector<PolygonData> members;
  TrigPoly shared;
  int odd_count = 0;
  std::string exact_key;  // set when the grouping was decided exactly
};

struct SearchReport {
  std::vector<CollisionGroup> groups;
  std::size_t examined = 0;
  std::vector<std::string> notes;
};

// Non-congruent triangles with rational angles (denominators <= q_max)
// sharing a characteristic polynomial.
SearchReport find_charpoly_collisions_triangles(int q_max, const Tolerances& tol = {});

struct QuadVsEqEntry {
  int k = 0, j = 0;  // alpha_1 = pi/(2k+1), alpha_3 = pi/(2j+1)
  bool parity_opposite = false;
  bool cos_difference_one = false;
  bool c2c4_positive = false;
  bool charpoly_matches = false;
  double sweep_min_residual = 0;
  double exact_min_residual = 0;
  bool feasible = false;
  std::string verdict;
};

struct QuadVsEqReport {
  std::vector<QuadVsEqEntry> entries;
  std::vector<std::string> notes;
};

// Quadrilaterals with two odd angles whose polynomial would equal that of
// the equilateral triangle, with a closure sweep over the free lengths.
QuadVsEqReport quad_vs_equilateral(int index_max, int samples = 10000, const Tolerances& tol = {});

enum class CheckStatus { Pass, Fail, NotApplicable };

struct Condition {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
};

struct SmoothCheckResult {
  std::vector<Condition> conditions;
  bool passes = false;  // no condition failed
};

// Necessary conditions for sharing the polynomial cos(t) - 1 of a smooth
// simply connected domain (or cos(t) + 1 of the equilateral triangle).
SmoothCheckResult smooth_check(const PolygonData& p, bool vs_equilateral = false,
                               const Tolerances& tol = {});

// Length-multiset conditions shared by smooth_check and the enumerator.
struct MultisetCheck {
  bool below_half = false;
  bool lstar_multiplicity = false;
  bool lstar_sum_relation = false;
  bool shortest_multiplicity = false;
  bool splits_in_halves = false;
  std::size_t lstar_size = 0;
};
MultisetCheck check_length_multiset(const std::vector<Scalar>& L, std::size_t n_eff,
                                    double tol = 1e-12);

struct PentagonPattern {
  // no odd angle: sorted multiset of the five lengths;
  // one odd angle: (l3, l4, l5) in cyclic order, with curved = l1 + l2
  std::vector<Scalar> lengths;
  std::optional<Scalar> curved;
  std::size_t lstar_size = 0;
};

std::vector<PentagonPattern> smooth_candidate_pentagons(int q_max, bool odd);

}  // namespace steklov
