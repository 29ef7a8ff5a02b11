#include "steklov/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_exact(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_exact(); });
}

int cmp_scalar(const Scalar& a, const Scalar& b, double tol) {
  if (near(a, b, tol)) return 0;
  return a < b ? -1 : 1;
}

int cmp_double(double a, double b, double tol) {
  if (std::fabs(a - b) <= tol) return 0;
  return a < b ? -1 : 1;
}

int compare_labelled(const PolygonData& a, const PolygonData& b) {
  const double tol = 1e-12;
  for (std::size_t i = 0; i < a.n(); ++i)
    if (int c = cmp_scalar(a.length(i), b.length(i), tol)) return c;
  for (std::size_t i = 0; i < a.n(); ++i)
    if (a.edges()[i].kind != b.edges()[i].kind)
      return a.edges()[i].kind < b.edges()[i].kind ? -1 : 1;
  for (std::size_t i = 0; i < a.n(); ++i)
    if (int c = cmp_double(a.angle(i).rad(), b.angle(i).rad(), tol)) return c;
  return 0;
}

}  // namespace

PolygonData::PolygonData(std::vector<Edge> edges, std::vector<Angle> angles)
    : edges_(std::move(edges)), angles_(std::move(angles)) {
  if (angles_.empty()) throw GeometryError("polygon needs at least one vertex");
  if (edges_.size() != angles_.size())
    throw GeometryError("edge and angle counts differ");
  perimeter_ = Scalar(0);
  for (const Edge& e : edges_) {
    if (e.length.sign() <= 0) throw GeometryError("edge lengths must be positive");
    perimeter_ += e.length;
  }
}

PolygonData PolygonData::from_lengths(const std::vector<Scalar>& lengths,
                                      std::vector<Angle> angles) {
  std::vector<Edge> edges;
  for (const Scalar& l : lengths) edges.push_back({l, EdgeKind::Straight});
  return PolygonData(std::move(edges), std::move(angles));
}

PolygonData PolygonData::zero_gon(const Scalar& perimeter) {
  if (perimeter.sign() <= 0) throw GeometryError("perimeter must be positive");
  PolygonData p;
  p.perimeter_ = perimeter;
  return p;
}

bool PolygonData::all_straight() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Straight; });
}

int PolygonData::odd_count() const {
  return static_cast<int>(
      std::count_if(angles_.begin(), angles_.end(), [](const Angle& a) { return a.is_odd(); }));
}

bool angle_sum_ok(const PolygonData& p, double tol) {
  if (p.n() < 3) return false;
  bool exact = std::all_of(p.angles().begin(), p.angles().end(),
                           [](const Angle& a) { return a.is_exact(); });
  if (exact) {
    mpq_class sum = 0;
    for (const Angle& a : p.angles()) sum += a.pi_mult();
    return sum == static_cast<long>(p.n()) - 2;
  }
  double sum = 0;
  for (const Angle& a : p.angles()) sum += a.rad();
  return std::fabs(sum - (static_cast<double>(p.n()) - 2) * kPi) <= tol;
}

double closure_residual(const PolygonData& p) {
  double x = 0, y = 0, heading = 0;
  for (std::size_t j = 0; j < p.n(); ++j) {
    double l = p.length(j).to_double();
    x += l * std::cos(heading);
    y += l * std::sin(heading);
    heading += kPi - p.angle(j).rad();
  }
  return std::hypot(x, y);
}

bool check_closure(const PolygonData& p, double tol) {
  if (p.is_zero_gon() || !p.all_straight()) return false;
  return angle_sum_ok(p, tol) && closure_residual(p) <= tol;
}

PolygonData make_triangle(const Angle& a1, const Angle& a2, const Angle& a3) {
  PolygonData probe = PolygonData::from_lengths({1, 1, 1}, {a1, a2, a3});
  if (!angle_sum_ok(probe)) throw GeometryError("triangle angles must sum to pi");
  if (a1.is_exact() && a1 == a2 && a2 == a3)
    return PolygonData::from_lengths({Scalar::rational(1, 3), Scalar::rational(1, 3),
                                      Scalar::rational(1, 3)},
                                     {a1, a2, a3});
  auto sine = [](const Angle& a) {
    return a.is_exact() ? sin_pi(a.pi_mult()) : std::sin(a.rad());
  };
  double l3 = sine(a1), l1 = sine(a2), l2 = sine(a3);
  double total = l1 + l2 + l3;
  return PolygonData::from_lengths({l1 / total, l2 / total, l3 / total}, {a1, a2, a3});
}

double opposite_angle(double a, double b, double c) {
  double s[3] = {a, b, c};
  std::sort(s, s + 3, std::greater<double>());
  double x = s[0], y = s[1], z = s[2];
  // Kahan's Heron: the root is 4 * area = 2bc sin(A)
  double area4 = std::sqrt(std::max(0.0, (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))));
  return std::atan2(area4, b * b + c * c - a * a);
}

PolygonData triangle_from_lengths(const Scalar& l1, const Scalar& l2, const Scalar& l3) {
  double a = l1.to_double(), b = l2.to_double(), c = l3.to_double();
  if (!(a > 0 && b > 0 && c > 0) || a >= b + c || b >= a + c || c >= a + b)
    throw GeometryError("lengths violate the triangle inequality");
  if (l1.is_exact() && l1 == l2 && l2 == l3) {
    Angle third = Angle::pi_multiple(1, 3);
    return PolygonData::from_lengths({l1, l2, l3}, {third, third, third});
  }
  Angle a1 = Angle::radians(opposite_angle(c, a, b));
  Angle a2 = Angle::radians(opposite_angle(a, b, c));
  Angle a3 = Angle::radians(opposite_angle(b, c, a));
  return PolygonData::from_lengths({l1, l2, l3}, {a1, a2, a3});
}

PolygonData make_rectangle(const Scalar& l) {
  Scalar half = Scalar::rational(1, 2);
  if (l.sign() <= 0 || !(l < half)) throw GeometryError("rectangle side must lie in (0, 1/2)");
  Scalar lp = half - l;
  Angle right = Angle::pi_multiple(1, 2);
  return PolygonData::from_lengths({l, lp, l, lp}, {right, right, right, right});
}

PolygonData make_parallelogram(const Scalar& l, const Angle& a1) {
  Scalar half = Scalar::rational(1, 2);
  if (l.sign() <= 0 || !(l < half)) throw GeometryError("parallelogram side must lie in (0, 1/2)");
  Scalar lp = half - l;
  Angle a2 = a1.supplement();
  return PolygonData::from_lengths({l, lp, l, lp}, {a1, a2, a1, a2});
}

namespace {

Scalar kite_long_side(const Scalar& l) {
  Scalar half = Scalar::rational(1, 2);
  if (l.sign() <= 0 || l.to_double() > 0.25 + 1e-15)
    throw GeometryError("kite short side must lie in (0, 1/4]");
  return half - l;
}

bool is_rhombus_side(const Scalar& l) {
  return l.is_exact() ? l.exact() == mpq_class(1, 4) : l.to_double() == 0.25;
}

PolygonData kite_polygon(const Scalar& l, const Scalar& lp, const Angle& gamma,
                         const Angle& alpha, const Angle& gamma_p) {
  return PolygonData::from_lengths({l, l, lp, lp}, {gamma, alpha, gamma_p, alpha});
}

}  // namespace

PolygonData make_kite(const Scalar& l, const Angle& alpha) {
  Scalar lp = kite_long_side(l);
  if (is_rhombus_side(l)) {
    Angle g = alpha.supplement();
    return kite_polygon(l, lp, g, alpha, g);
  }
  double a = l.to_double(), b = lp.to_double(), al = alpha.rad();
  double dot = a - b * std::cos(al);
  if (dot <= 0) throw GeometryError("kite is not convex for this angle");
  double g2 = std::atan2(b * std::sin(al), dot);
  double gp2 = std::atan2(a * std::sin(al), b - a * std::cos(al));
  return kite_polygon(l, lp, Angle::radians(2 * g2), alpha, Angle::radians(2 * gp2));
}

PolygonData make_kite_from(const Scalar& l, KiteVertex which, const Angle& value) {
  if (which == KiteVertex::Alpha) return make_kite(l, value);
  Scalar lp = kite_long_side(l);
  if (is_rhombus_side(l)) {
    Angle alpha = value.supplement();
    return kite_polygon(l, lp, value, alpha, value);
  }
  double a = l.to_double(), b = lp.to_double();
  double half = value.rad() / 2;
  double g2, gp2;
  if (which == KiteVertex::Gamma) {
    g2 = half;
    gp2 = std::asin(a / b * std::sin(half));
  } else {
    gp2 = half;
    double s = b / a * std::sin(half);
    if (s >= 1) throw GeometryError("no convex kite with this angle between the long sides");
    g2 = std::asin(s);
  }
  Angle alpha = Angle::radians(kPi - g2 - gp2);
  Angle gamma = which == KiteVertex::Gamma ? value : Angle::radians(2 * g2);
  Angle gamma_p = which == KiteVertex::GammaPrime ? value : Angle::radians(2 * gp2);
  return kite_polygon(l, lp, gamma, alpha, gamma_p);
}

PolygonData make_regular(int n) {
  if (n < 3) throw DomainError("regular polygon needs n >= 3");
  std::vector<Scalar> lengths(n, Scalar::rational(1, n));
  std::vector<Angle> angles(n, Angle::pi_multiple(n - 2, n));
  return PolygonData::from_lengths(lengths, angles);
}

PolygonData normalize_perimeter(const PolygonData& p) {
  if (p.is_zero_gon()) return PolygonData::zero_gon(1);
  std::vector<Edge> edges = p.edges();
  for (Edge& e : edges) e.length = e.length / p.perimeter();
  return PolygonData(edges, p.angles());
}

PolygonData relabel(const PolygonData& p, std::size_t shift, bool reflect) {
  if (p.is_zero_gon()) return p;
  std::size_t n = p.n();
  std::vector<Edge> e = p.edges();
  std::vector<Angle> a = p.angles();
  if (reflect) {
    std::vector<Edge> re;
    std::vector<Angle> ra;
    for (std::size_t i = 0; i < n; ++i) {
      re.push_back(e[n - 1 - i]);
      ra.push_back(a[(2 * n - 2 - i) % n]);
    }
    e = std::move(re);
    a = std::move(ra);
  }
  std::rotate(e.begin(), e.begin() + shift % n, e.end());
  std::rotate(a.begin(), a.begin() + shift % n, a.end());
  return PolygonData(e, a);
}

PolygonData canonical_form(const PolygonData& p) {
  if (p.is_zero_gon()) return p;
  PolygonData best = p;
  for (int r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < p.n(); ++s) {
      PolygonData q = relabel(p, s, r == 1);
      if (compare_labelled(q, best) < 0) best = q;
    }
  return best;
}

bool congruent(const PolygonData& p, const PolygonData& q, double tol) {
  if (p.is_zero_gon() || q.is_zero_gon())
    return p.is_zero_gon() && q.is_zero_gon() &&
           std::fabs(p.perimeter().to_double() - q.perimeter().to_double()) <= tol;
  if (p.n() != q.n()) return false;
  for (int r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < q.n(); ++s) {
      PolygonData g = relabel(q, s, r == 1);
      bool same = true;
      for (std::size_t i = 0; i < p.n() && same; ++i) {
        same = p.edges()[i].kind == g.edges()[i].kind &&
               std::fabs(p.length(i).to_double() - g.length(i).to_double()) <= tol &&
               std::fabs(p.angle(i).rad() - g.angle(i).rad()) <= tol;
      }
      if (same) return true;
    }
  return false;
}

PolygonData reduce(const PolygonData& p) {
  if (p.is_zero_gon()) return p;
  std::size_t n = p.n();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!p.angle(i).is_odd()) {
      start = i;
      break;
    }
  if (start == n) return PolygonData::zero_gon(p.perimeter());
  std::vector<Edge> edges;
  std::vector<Angle> angles;
  Edge cur{Scalar(0), EdgeKind::Straight};
  int pieces = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    std::size_t i = (start + step) % n;
    cur.length += p.length(i);
    if (pieces++ == 0) cur.kind = p.edges()[i].kind;
    else cur.kind = EdgeKind::Curved;
    if (!p.angle(i).is_odd()) {
      edges.push_back(cur);
      angles.push_back(p.angle(i));
      cur = Edge{Scalar(0), EdgeKind::Straight};
      pieces = 0;
    }
  }
  return PolygonData(edges, angles);
}

std::vector<Scalar> edge_multiset(const PolygonData& p) {
  std::vector<Scalar> out;
  for (const Edge& e : p.edges()) out.push_back(e.length);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Scalar> subset_sums(const std::vector<Scalar>& values, double tol) {
  if (all_exact(values)) {
    std::set<mpq_class> sums;
    for (const Scalar& v : values) {
      std::vector<mpq_class> fresh{v.exact()};
      for (const mpq_class& s : sums) fresh.push_back(s + v.exact());
      sums.insert(fresh.begin(), fresh.end());
    }
    return std::vector<Scalar>(sums.begin(), sums.end());
  }
  std::vector<double> sums;
  for (const Scalar& v : values) {
    double x = v.to_double();
    std::vector<double> fresh{x};
    for (double s : sums) fresh.push_back(s + x);
    sums.insert(sums.end(), fresh.begin(), fresh.end());
    std::sort(sums.begin(), sums.end());
    std::vector<double> merged;
    for (double s : sums)
      if (merged.empty() || s - merged.back() > tol) merged.push_back(s);
    sums = std::move(merged);
  }
  return std::vector<Scalar>(sums.begin(), sums.end());
}

bool contains(const std::vector<Scalar>& values, const Scalar& x, double tol) {
  return std::any_of(values.begin(), values.end(),
                     [&](const Scalar& v) { return near(v, x, tol); });
}

std::vector<Scalar> l_star(const std::vector<Scalar>& L, double tol) {
  std::vector<Scalar> distinct;
  for (const Scalar& x : L)
    if (!contains(distinct, x, tol)) distinct.push_back(x);
  std::sort(distinct.begin(), distinct.end());
  std::vector<Scalar> out;
  for (const Scalar& x : distinct) {
    std::vector<Scalar> smaller;
    for (const Scalar& v : L)
      if (!near(v, x, tol) && v < x) smaller.push_back(v);
    if (!contains(subset_sums(smaller, tol), x, tol)) out.push_back(x);
  }
  return out;
}

}  // namespace steklov
