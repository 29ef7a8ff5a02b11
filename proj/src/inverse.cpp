#include "steklov/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// Terms other than the leading cos(t).
std::vector<Term> lower_terms(const TrigPoly& p) {
  return std::vector<Term>(p.terms.begin(), p.terms.end() - 1);
}

bool add_candidate(ReconstructionResult& r, const PolygonData& poly, const std::string& branch,
                   const TrigPoly& target, const Tolerances& tol, bool lengths_free = false) {
  if (!poly_equal(char_poly(poly, tol), target, tol.self_check)) return false;
  for (const Candidate& c : r.candidates)
    if (congruent(c.polygon, poly, tol.congruence)) return false;
  r.candidates.push_back({poly, branch, lengths_free});
  return true;
}

// Roots of z^2 - b z + c (both real, nonnegative), larger first.
std::pair<double, double> quadratic_roots(double b, double c) {
  double disc = std::max(0.0, b * b - 4 * c);
  double big = (b + std::sqrt(disc)) / 2;
  double small = big > 0 ? c / big : 0.0;
  return {big, small};
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

bool near_d(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool lengths_are(double l, double lp, long p1, long q1, long p2, long q2) {
  return near_d(l, double(p1) / q1, 1e-9) && near_d(lp, double(p2) / q2, 1e-9);
}

std::optional<Angle> try_abs_c_inverse(double ac, double as, int m) {
  try {
    return abs_c_inverse(clamp01(ac), clamp01(as), m);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

TrigPoly normalized(const TrigPoly& p) {
  if (p.terms.empty()) throw FamilyError("polynomial has no cosine term");
  const Term& top = p.terms.back();
  if (!near(top.coef, Scalar(1), 1e-9))
    throw FamilyError("leading cosine coefficient is " + top.coef.to_string() + ", expected 1");
  if (top.freq == Scalar(1)) return p;
  TrigPoly out = scale_frequencies(p, Scalar(1) / top.freq);
  out.terms.back().freq = Scalar(1);
  return out;
}

// ---- triangles ----

int triangle_odd_count(const TrigPoly& p, const Tolerances& tol) {
  TrigPoly n = normalized(p);
  std::size_t m = n.terms.size() - 1;
  if (m > 3) throw FamilyError("more than three lower cosine terms: not a triangle");
  if (m >= 2) return 0;
  if (m == 1) return 1;
  return near(n.constant.abs(), Scalar(1), tol.self_check) ? 3 : 2;
}

namespace {

// Triangle with base l3, l1 + l2 = S and the odd angle alpha1 between l1, l2.
std::vector<PolygonData> triangles_from_odd_apex(double l3, double S, const Angle& a1) {
  double half = a1.rad() / 2;
  double cosa = std::cos(a1.rad());
  double sh = std::sin(half);
  double disc = 2 * (l3 - S * sh) * (l3 + S * sh) / (1 + cosa);
  std::vector<PolygonData> out;
  auto build = [&](double d) {
    double l1 = (S + std::sqrt(d)) / 2, l2 = S - l1;
    if (!(l2 > 0)) return;
    if (d == 0 && a1.is_exact()) {
      Angle base = Angle::pi_multiple(mpq_class((1 - a1.pi_mult()) / 2));
      out.push_back(PolygonData::from_lengths({l1, l2, l3}, {a1, base, base}));
      return;
    }
    Angle a2 = Angle::radians(opposite_angle(l1, l2, l3));
    Angle a3 = Angle::radians(opposite_angle(l2, l3, l1));
    Angle s2 = snap_special(a2, 1e-10, false, true);
    Angle s3 = snap_special(a3, 1e-10, false, true);
    if (a1.is_exact() && s2.is_exact()) {
      mpq_class r3 = 1 - a1.pi_mult() - s2.pi_mult();
      if (r3 > 0) a3 = Angle::pi_multiple(r3), a2 = s2;
    } else if (a1.is_exact() && s3.is_exact()) {
      mpq_class r2 = 1 - a1.pi_mult() - s3.pi_mult();
      if (r2 > 0) a2 = Angle::pi_multiple(r2), a3 = s3;
    }
    out.push_back(PolygonData::from_lengths({l1, l2, l3}, {a1, a2, a3}));
  };
  if (disc < -1e-14) return out;
  // data noise of order 1e-16 in l3 becomes ~1e-8 in the legs near the
  // isosceles point; treat that band as isosceles first
  if (disc < 1e-14 * S * S) {
    build(0.0);
    if (disc > 0) build(disc);
  } else {
    build(disc);
  }
  return out;
}

}  // namespace

ReconstructionResult reconstruct_triangle(const TrigPoly& p, const std::optional<Angle>& known,
                                          const Tolerances& tol) {
  TrigPoly P = normalized(p);
  int odd = triangle_odd_count(P, tol);
  std::vector<Term> low = lower_terms(P);
  ReconstructionResult r;
  r.classification = "triangle_" + std::to_string(odd) + "_odd";
  const double bound = static_cast<double>(tol.odd_denominator_bound);

  if (odd == 0) {
    std::vector<double> f;
    for (const Term& t : low) f.push_back(t.freq.to_double());
    std::vector<std::vector<Scalar>> options;
    auto len = [&](const Term& t) { return (Scalar(1) - t.freq) / Scalar(2); };
    if (low.size() == 3) {
      options.push_back({len(low[0]), len(low[1]), len(low[2])});
    } else {
      Scalar x = len(low[0]), y = len(low[1]);
      options.push_back({x, x, y});
      options.push_back({x, y, y});
    }
    for (const auto& L : options) {
      if (!near(L[0] + L[1] + L[2], Scalar(1), 1e-9)) continue;
      try {
        PolygonData t = triangle_from_lengths(L[0], L[1], L[2]);
        std::vector<Angle> snapped;
        for (const Angle& a : t.angles()) snapped.push_back(snap_special(a, tol.snap, false, true));
        PolygonData s = PolygonData::from_lengths(L, snapped);
        if (!add_candidate(r, s, "triangle_no_odd", P, tol)) add_candidate(r, t, "triangle_no_odd", P, tol);
      } catch (const GeometryError&) {
      }
    }
  } else if (odd == 3) {
    Angle third = Angle::pi_multiple(1, 3);
    add_candidate(r, make_triangle(third, third, third), "equilateral", P, tol);
  } else if (odd == 2) {
    double C = std::fabs(P.constant.to_double());
    double cabs = std::sqrt(std::max(0.0, (1 - C) * (1 + C)));
    // the third angle exceeds pi/3, so it lies in one of the first two intervals
    for (int m = 1; m <= 2; ++m) {
      std::optional<Angle> a3 = try_abs_c_inverse(cabs, C, m);
      if (!a3) continue;
      double rest = 1 - a3->rad() / kPi;  // 1/a + 1/b
      for (long a = 3; a <= bound; a += 2) {
        double inv_b = rest - 1.0 / a;
        if (inv_b <= 0) continue;
        double b = 1 / inv_b;
        if (b < a - 1e-9 || b > bound + 0.5) continue;
        long bi = std::lround(b);
        if (bi % 2 == 0 || std::fabs(b - bi) > 1e-6) continue;
        mpq_class r3 = 1 - mpq_class(1, a) - mpq_class(1, bi);
        if (r3 <= 0 || std::fabs(r3.get_d() * kPi - a3->rad()) > 1e-8) continue;
        PolygonData t = make_triangle(Angle::pi_multiple(1, a), Angle::pi_multiple(1, bi),
                                      Angle::pi_multiple(r3));
        add_candidate(r, t, m == 1 ? "two_odd_obtuse" : "two_odd_acute_exception", P, tol);
      }
    }
  } else {
    const Term& t = low[0];
    double f = t.freq.to_double(), K = t.coef.to_double(), C = P.constant.to_double();
    double l3 = (1 - f) / 2, S = (1 + f) / 2;
    auto [c_big, c_small] = quadratic_roots(1 + K * K - C * C, K * K);
    auto [s_big, s_small] = quadratic_roots(1 - K * K + C * C, C * C);
    std::vector<std::pair<double, double>> cs = {{std::sqrt(c_small), std::sqrt(s_big)},
                                                 {std::sqrt(c_big), std::sqrt(s_small)}};
    std::set<mpq_class> apexes;
    auto apex_from_base_angle = [&](const Angle& a2) {
      double denom = 2 * (S - l3 * std::cos(a2.rad()));
      if (denom <= 0) return;
      double l2 = (S * S - l3 * l3) / denom, l1 = S - l2;
      if (!(l1 > 0 && l2 > 0) || l3 >= l1 + l2 || l1 >= l2 + l3 || l2 >= l1 + l3) return;
      if (auto odd_apex = nearest_odd(opposite_angle(l3, l1, l2), tol.odd_snap, tol.odd_denominator_bound))
        apexes.insert(odd_apex->pi_mult());
    };
    if (known) {
      if (known->is_odd()) apexes.insert(known->pi_mult());
      else apex_from_base_angle(*known);
    } else {
      for (const auto& [ac, as] : cs)
        for (int m = 1; m <= tol.m_cap; ++m)
          if (auto a = try_abs_c_inverse(ac, as, m)) apex_from_base_angle(*a);
    }
    for (const mpq_class& apex : apexes) {
      for (const PolygonData& tri : triangles_from_odd_apex(l3, S, Angle::pi_multiple(apex)))
        if (add_candidate(r, tri, "one_odd", P, tol)) break;
    }
  }

  if (known) {
    std::vector<Candidate> keep;
    for (const Candidate& c : r.candidates)
      for (const Angle& a : c.polygon.angles())
        if (std::fabs(a.rad() - known->rad()) <= tol.congruence) {
          keep.push_back(c);
          break;
        }
    r.candidates = std::move(keep);
    r.notes.push_back("filtered by known angle " + known->to_string());
  }
  if (r.candidates.empty()) throw NoSolutionError("no triangle has this characteristic polynomial");
  return r;
}

Scalar sine_ratio(const TrigPoly& p, const Tolerances& tol) {
  TrigPoly P = normalized(p);
  if (triangle_odd_count(P, tol) != 1)
    throw FamilyError("sine ratio needs a triangle with exactly one odd angle");
  const Scalar& f = P.terms.front().freq;
  return (Scalar(1) + f) / (Scalar(1) - f);
}

// ---- quadrilaterals ----

std::optional<std::pair<Scalar, Scalar>> detect_rectangle(const TrigPoly& p, const Tolerances& tol) {
  TrigPoly P = normalized(p);
  if (P.terms.size() < 2) return std::nullopt;
  Scalar lp = P.terms[P.terms.size() - 2].freq / Scalar(2);
  Scalar l = Scalar::rational(1, 2) - lp;
  if (l.sign() <= 0) return std::nullopt;
  if (lp < l) std::swap(l, lp);
  if (!poly_equal(char_poly(make_rectangle(l), tol), P, tol.self_check)) return std::nullopt;
  return std::make_pair(l, lp);
}

namespace {

// |c| values of the two angles from A = c1 c2 and B = c1^2 + c2^2.
std::vector<double> cosine_pair(double A, double B) {
  double p = std::sqrt(std::max(0.0, B + 2 * A)), q = std::sqrt(std::max(0.0, B - 2 * A));
  std::vector<double> out{clamp01(std::fabs(p + q) / 2)};
  double other = clamp01(std::fabs(p - q) / 2);
  if (std::fabs(other - out[0]) > 1e-15) out.push_back(other);
  return out;
}

PolygonData parallelogram_with_obtuse(const Scalar& l, const Angle& obtuse, double snap) {
  Angle acute = snap_special(obtuse.supplement(), snap);
  return make_parallelogram(l, acute.supplement());
}

}  // namespace

ReconstructionResult reconstruct_parallelogram(const TrigPoly& p, const Tolerances& tol) {
  TrigPoly P = normalized(p);
  ReconstructionResult r;
  if (auto rect = detect_rectangle(P, tol)) {
    r.classification = "rectangle";
    add_candidate(r, make_rectangle(rect->first), "rectangle", P, tol);
    return r;
  }
  std::vector<Term> low = lower_terms(P);
  if (low.empty()) {
    r.classification = "parallelogram_odd_pair";
    double C = std::clamp(P.constant.to_double(), -1.0, 1.0);
    double theta = std::acos(C);
    if (theta <= 0 || theta >= kPi) throw NoSolutionError("constant term fits no parallelogram");
    double a1 = kPi * kPi / (2 * kPi - theta);
    std::optional<Angle> odd = nearest_odd(kPi - a1, tol.odd_snap, tol.odd_denominator_bound);
    if (!odd) throw NoSolutionError("acute angle is not odd");
    PolygonData poly = make_parallelogram(Scalar::rational(1, 8), odd->supplement());
    add_candidate(r, poly, "odd_pair", P, tol, true);
    r.notes.push_back("lengths_free: any side ratio gives the same polynomial; shown with l = 1/8");
  } else {
    Scalar lp = low.back().freq / Scalar(2);
    Scalar l = Scalar::rational(1, 2) - lp;
    if (l.sign() <= 0) throw FamilyError("lower frequency too large for a parallelogram");
    if (lp < l) std::swap(l, lp);
    double C = P.constant.to_double();
    double A, B;
    if (near(lp, Scalar::rational(1, 4), 1e-12)) {
      r.classification = "rhombus";
      A = low.back().coef.to_double() / 4;
      B = (C + 1) / 2;
    } else {
      r.classification = "parallelogram_no_odd";
      A = low.back().coef.to_double() / 2;
      B = (C + A * A + 1) / 2;
    }
    for (double v : cosine_pair(A, B)) {
      std::optional<Angle> obtuse = try_abs_c_inverse(v, std::sqrt(std::max(0.0, (1 - v) * (1 + v))), 1);
      if (!obtuse) continue;
      try {
        add_candidate(r, parallelogram_with_obtuse(l, *obtuse, tol.snap), r.classification, P, tol);
      } catch (const Error&) {
      }
    }
  }
  if (r.candidates.empty()) throw NoSolutionError("no parallelogram has this characteristic polynomial");
  return r;
}

// ---- kites ----

namespace {

struct KiteWork {
  const TrigPoly& P;
  const Tolerances& tol;
  ReconstructionResult r;
  std::vector<std::pair<std::string, bool>> flags;  // case, produced a candidate
  std::set<std::string> fired;

  double coef_at(double freq) const {
    const Term* t = P.find(Scalar(freq), 1e-9);
    return t ? t->coef.to_double() : 0.0;
  }

  bool add(const PolygonData& poly, const std::string& branch) {
    if (!add_candidate(r, poly, branch, P, tol)) return false;
    fired.insert(branch);
    return true;
  }

  // Build from alpha, snap the named vertex to its odd value, rebuild from it.
  bool one_odd(double l, const Angle& alpha, KiteVertex odd_vertex, const std::string& branch) {
    try {
      PolygonData rough = make_kite(Scalar(l), alpha);
      std::size_t idx = odd_vertex == KiteVertex::Gamma ? 0 : 2;
      auto odd = nearest_odd(rough.angle(idx).rad(), tol.odd_snap, tol.odd_denominator_bound);
      if (!odd) return false;
      return add(make_kite_from(Scalar(l), odd_vertex, *odd), branch);
    } catch (const Error&) {
      return false;
    }
  }

  bool two_odd(double l, const Angle& alpha) {
    try {
      PolygonData rough = make_kite(Scalar(l), alpha);
      auto g = nearest_odd(rough.angle(0).rad(), tol.odd_snap, tol.odd_denominator_bound);
      auto gp = nearest_odd(rough.angle(2).rad(), tol.odd_snap, tol.odd_denominator_bound);
      if (!g || !gp) return false;
      Angle a = Angle::pi_multiple(mpq_class(1 - (g->pi_mult() + gp->pi_mult()) / 2));
      double lp = 0.5 - l;
      PolygonData poly = PolygonData::from_lengths({l, l, lp, lp}, {*g, a, *gp, a});
      if (closure_residual(poly) > 1e-9) return false;
      return add(poly, "kite_two_unequal_odd");
    } catch (const Error&) {
      return false;
    }
  }

  void flag(const std::string& code, bool produced) {
    for (auto& f : flags)
      if (f.first == code) {
        f.second = f.second || produced;
        return;
      }
    flags.emplace_back(code, produced);
  }
};

}  // namespace

ReconstructionResult reconstruct_kite(const TrigPoly& p, const Tolerances& tol) {
  TrigPoly P = normalized(p);
  std::vector<Term> low = lower_terms(P);
  if (low.empty())
    throw FamilyError("only cos(t) survives: the repeated kite angle is odd and the polynomial "
                      "carries too little information");
  KiteWork w{P, tol, {}, {}, {}};
  const double C = P.constant.to_double();
  std::vector<double> f;
  for (const Term& t : low) f.push_back(t.freq.to_double());
  auto has_freqs = [&](std::vector<double> expect) {
    std::vector<double> e;
    for (double x : expect)
      if (x > 1e-12 && std::none_of(e.begin(), e.end(), [&](double y) { return near_d(x, y, 1e-9); }))
        e.push_back(x);
    return std::all_of(f.begin(), f.end(), [&](double x) {
      return std::any_of(e.begin(), e.end(), [&](double y) { return near_d(x, y, 1e-9); });
    });
  };

  // no odd angle: the top lower frequency is 2 l'
  {
    double lp = f.back() / 2, l = 0.5 - lp;
    if (l > 0 && lp >= 0.25 - 1e-12 && has_freqs({2 * l, 2 * lp, 2 * (lp - l)})) {
      if (lengths_are(l, lp, 1, 6, 1, 3)) {
        w.flag("lengths_1/6_1/3", false);
      } else if (near_d(lp, 0.25, 1e-12)) {
        double A = w.coef_at(0.5) / 4, B = (C + 1) / 2;
        for (double v : cosine_pair(A, B))
          if (auto a = try_abs_c_inverse(v, std::sqrt(std::max(0.0, (1 - v) * (1 + v))), 1)) {
            try {
              w.add(make_kite(Scalar::rational(1, 4), *a), "rhombus");
            } catch (const Error&) {
            }
          }
      } else if (double ca2 = w.coef_at(2 * (lp - l)); ca2 > 0) {
        double ca = std::sqrt(ca2);
        double cg = std::fabs(w.coef_at(2 * lp)) / (2 * ca);
        if (auto a = try_abs_c_inverse(ca, std::sqrt(std::max(0.0, 1 - ca2)), 1)) {
          try {
            w.add(make_kite(Scalar(l), *a), "kite_no_odd");
          } catch (const Error&) {
          }
        }
        if (cg <= 1 + 1e-12)
          if (auto g = try_abs_c_inverse(cg, std::sqrt(std::max(0.0, 1 - cg * cg)), 1)) {
            try {
              w.add(make_kite_from(Scalar(l), KiteVertex::Gamma, *g), "kite_no_odd");
            } catch (const Error&) {
            }
          }
      }
    }
  }

  // one odd angle
  if (f.size() == 2) {
    double sum = f[0] + f[1];
    // gamma odd: frequencies 2l and 2(l' - l) add up to 2 l'
    {
      double lp = sum / 2, l = 0.5 - lp;
      if (l > 0 && l < lp && has_freqs({2 * l, 4 * lp - 1})) {
        double ca2 = w.coef_at(4 * lp - 1);
        bool produced = false;
        if (ca2 > 0)
          if (auto a = try_abs_c_inverse(std::sqrt(ca2), std::sqrt(std::max(0.0, 1 - ca2)), 1))
            produced = w.one_odd(l, *a, KiteVertex::Gamma, "kite_one_odd_gamma");
        if (lengths_are(l, lp, 1, 10, 2, 5)) w.flag("one_odd_a", produced);
        if (lengths_are(l, lp, 1, 6, 1, 3)) w.flag("lengths_1/6_1/3", produced);
      }
    }
    // gamma' odd: frequencies 2 l' and 2(l' - l) add up to 4 l' - 2 l
    {
      double lp = (1 + sum) / 6, l = 0.5 - lp;
      bool shape = l > 0 && l < lp && near_d(std::max(f[0], f[1]), 2 * lp, 1e-9) &&
                   near_d(std::min(f[0], f[1]), 4 * lp - 1, 1e-9);
      if (shape) {
        double ca2 = w.coef_at(4 * lp - 1);
        bool produced = false;
        for (int m = 1; m <= 2 && ca2 > 0; ++m)
          if (auto a = try_abs_c_inverse(std::sqrt(ca2), std::sqrt(std::max(0.0, 1 - ca2)), m))
            produced = w.one_odd(l, *a, KiteVertex::GammaPrime, "kite_one_odd_gamma_prime") || produced;
        if (lengths_are(l, lp, 1, 5, 3, 10)) w.flag("one_odd_b", produced);
        if (lengths_are(l, lp, 1, 6, 1, 3)) w.flag("lengths_1/6_1/3", produced);
      }
    }
  }
  if (f.size() == 1) {
    // gamma odd with l = 1/6: 2l and 2(l' - l) coincide at 1/3
    if (near_d(f[0], 1.0 / 3, 1e-9)) w.flag("lengths_1/6_1/3", false);
    // two unequal odd angles: only c(alpha)^2 cos(2(l' - l) t) survives
    double lp = (1 + f[0]) / 4, l = 0.5 - lp;
    double ca2 = low[0].coef.to_double();
    bool produced = false;
    if (l > 0 && ca2 > 0)
      if (auto a = try_abs_c_inverse(std::sqrt(ca2), std::sqrt(std::max(0.0, 1 - ca2)), 1))
        produced = w.two_odd(l, *a);
    if (lengths_are(l, lp, 1, 6, 1, 3)) w.flag("two_odd_a", produced);
    if (lengths_are(l, lp, 1, 12, 5, 12)) w.flag("two_odd_b", produced);
    if (lengths_are(l, lp, 1, 8, 3, 8))
      w.r.notes.push_back("lengths (1/8, 3/8) share the rhombus frequency; both families searched");
  }

  if (!w.flags.empty()) {
    std::stable_sort(w.flags.begin(), w.flags.end(),
                     [](const auto& a, const auto& b) { return a.second && !b.second; });
    std::vector<std::string> cases;
    std::string msg = "kite lengths hit an excluded coincidence:";
    for (const auto& fl : w.flags) {
      cases.push_back(fl.first);
      msg += " " + fl.first;
    }
    throw AmbiguousError(cases, msg);
  }
  if (w.r.candidates.empty()) throw NoSolutionError("no kite has this characteristic polynomial");
  for (const std::string& b : w.fired) {
    if (!w.r.classification.empty()) w.r.classification += "+";
    w.r.classification += b;
  }
  return w.r;
}

std::optional<int> detect_regular(const TrigPoly& p, const Tolerances& tol, int n_cap) {
  TrigPoly P = normalized(p);
  std::vector<int> tries;
  if (P.terms.size() == 1) {
    tries.push_back(3);
  } else {
    double f = P.terms[P.terms.size() - 2].freq.to_double();
    int est = static_cast<int>(std::lround(2 / (1 - f)));
    for (int n = est - 1; n <= est + 1; ++n)
      if (n >= 3 && n <= n_cap) tries.push_back(n);
  }
  for (int n : tries)
    if (poly_equal(char_poly(make_regular(n), tol), P, tol.self_check)) return n;
  return std::nullopt;
}

ReconstructionResult reconstruct(const TrigPoly& p, Family family,
                                 const std::optional<Angle>& known, const Tolerances& tol) {
  switch (family) {
    case Family::Triangle:
      return reconstruct_triangle(p, known, tol);
    case Family::Rectangle: {
      auto rect = detect_rectangle(p, tol);
      if (!rect) throw NoSolutionError("not the polynomial of a rectangle");
      ReconstructionResult r;
      r.classification = "rectangle";
      r.candidates.push_back({make_rectangle(rect->first), "rectangle", false});
      return r;
    }
    case Family::Parallelogram:
      return reconstruct_parallelogram(p, tol);
    case Family::Kite:
      return reconstruct_kite(p, tol);
    case Family::Regular: {
      auto n = detect_regular(p, tol);
      if (!n) throw NoSolutionError("not the polynomial of a regular polygon");
      ReconstructionResult r;
      r.classification = "regular_" + std::to_string(*n);
      r.candidates.push_back({make_regular(*n), "regular", false});
      return r;
    }
  }
  throw DomainError("unknown family");
}

}  // namespace steklov
