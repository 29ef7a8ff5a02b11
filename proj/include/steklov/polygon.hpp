#pragma once

#include <cstddef>
#include <vector>

#include "steklov/numerics.hpp"
#include "steklov/tolerances.hpp"

namespace steklov {

enum class EdgeKind { Straight, Curved };

struct Edge {
  Scalar length;
  EdgeKind kind = EdgeKind::Straight;
};

// Angle j sits between edge j and edge j+1 (cyclically). A polygon with no
// vertices (every vertex removed by reduction) keeps only its perimeter.
class PolygonData {
 public:
  PolygonData(std::vector<Edge> edges, std::vector<Angle> angles);
  static PolygonData from_lengths(const std::vector<Scalar>& lengths,
                                  std::vector<Angle> angles);
  static PolygonData zero_gon(const Scalar& perimeter);

  std::size_t n() const { return angles_.size(); }
  bool is_zero_gon() const { return angles_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Angle>& angles() const { return angles_; }
  const Scalar& length(std::size_t i) const { return edges_[i].length; }
  const Angle& angle(std::size_t i) const { return angles_[i]; }
  const Scalar& perimeter() const { return perimeter_; }
  bool all_straight() const;
  int odd_count() const;

 private:
  PolygonData() = default;
  std::vector<Edge> edges_;
  std::vector<Angle> angles_;
  Scalar perimeter_;
};

// Interior-angle sum equals (n-2) pi (exactly when every angle is exact).
bool angle_sum_ok(const PolygonData& p, double tol = 1e-10);
double closure_residual(const PolygonData& p);
// Straight polygon closes within tol and has the convex angle sum.
bool check_closure(const PolygonData& p, double tol = 1e-10);

// Edge lengths proportional to the sines of the opposite angles, perimeter 1.
PolygonData make_triangle(const Angle& a1, const Angle& a2, const Angle& a3);
// Angle opposite side a in a triangle with sides a, b, c.
double opposite_angle(double a, double b, double c);
PolygonData triangle_from_lengths(const Scalar& l1, const Scalar& l2, const Scalar& l3);
PolygonData make_rectangle(const Scalar& l);
PolygonData make_parallelogram(const Scalar& l, const Angle& a1);

// Kite with edges (l, l, l', l'), l <= l' = 1/2 - l, and angles
// (gamma, alpha, gamma', alpha): gamma between the two l edges, gamma'
// between the two l' edges, alpha the repeated angle.
enum class KiteVertex { Alpha, Gamma, GammaPrime };
PolygonData make_kite(const Scalar& l, const Angle& alpha);
PolygonData make_kite_from(const Scalar& l, KiteVertex which, const Angle& value);
PolygonData make_regular(int n);

PolygonData normalize_perimeter(const PolygonData& p);
// Relabel by rotation (shift) and optional reversal of orientation.
PolygonData relabel(const PolygonData& p, std::size_t shift, bool reflect);
PolygonData canonical_form(const PolygonData& p);
bool congruent(const PolygonData& p, const PolygonData& q, double tol = 1e-9);

// Drop every odd vertex, merging its two edges into one curved edge.
PolygonData reduce(const PolygonData& p);

std::vector<Scalar> edge_multiset(const PolygonData& p);
// Distinct values of L not expressible as a sum of two or more smaller
// entries of L (entries counted with multiplicity).
std::vector<Scalar> l_star(const std::vector<Scalar>& L, double tol = 1e-12);
// All sums of nonempty sub-multisets (deduplicated).
std::vector<Scalar> subset_sums(const std::vector<Scalar>& values, double tol = 1e-12);
bool contains(const std::vector<Scalar>& values, const Scalar& x, double tol = 1e-12);

}  // namespace steklov
