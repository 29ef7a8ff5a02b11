#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/polygon.hpp"
#include "steklov/tolerances.hpp"

namespace steklov {

struct Candidate {
  PolygonData polygon;
  std::string branch;
  bool lengths_free = false;  // any admissible lengths give the same polynomial
};

// Every candidate has been checked: its polynomial equals the (perimeter
// normalized) input within Tolerances::self_check.
struct ReconstructionResult {
  std::vector<Candidate> candidates;
  std::string classification;
  std::vector<std::string> notes;
};

enum class Family { Triangle, Rectangle, Parallelogram, Kite, Regular };

// Frequencies rescaled so the leading cos term has frequency 1.
TrigPoly normalized(const TrigPoly& p);

int triangle_odd_count(const TrigPoly& p, const Tolerances& tol = {});
ReconstructionResult reconstruct_triangle(const TrigPoly& p,
                                          const std::optional<Angle>& known_angle = std::nullopt,
                                          const Tolerances& tol = {});
// (l1 + l2) / l3 for a triangle with exactly one odd angle (alpha_1).
Scalar sine_ratio(const TrigPoly& p, const Tolerances& tol = {});

// (l, l') with l <= l' when p is the polynomial of a rectangle.
std::optional<std::pair<Scalar, Scalar>> detect_rectangle(const TrigPoly& p,
                                                          const Tolerances& tol = {});
ReconstructionResult reconstruct_parallelogram(const TrigPoly& p, const Tolerances& tol = {});
ReconstructionResult reconstruct_kite(const TrigPoly& p, const Tolerances& tol = {});
std::optional<int> detect_regular(const TrigPoly& p, const Tolerances& tol = {}, int n_cap = 16);

ReconstructionResult reconstruct(const TrigPoly& p, Family family,
                                 const std::optional<Angle>& known_angle = std::nullopt,
                                 const Tolerances& tol = {});

}  // namespace steklov
