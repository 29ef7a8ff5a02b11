#include "steklov/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<mpq_class> rationals_below(const mpq_class& upper, int q_max) {
  std::set<mpq_class> s;
  for (int q = 2; q <= q_max; ++q)
    for (int p = 1; p < q; ++p) {
      mpq_class r(p, q);
      r.canonicalize();
      if (r < upper) s.insert(r);
    }
  return std::vector<mpq_class>(s.begin(), s.end());
}

// -eps * sin(pi y) reduced to sign * sin(pi y') with y' in [0, 1/2].
std::string sine_key(int sign, mpq_class y) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  y -= mpq_class(fl - (fl % 2 + 2) % 2);
  if (y >= 1) {
    y -= 1;
    sign = -sign;
  }
  if (y > mpq_class(1, 2)) y = 1 - y;
  if (y == 0) return "0";
  return std::string(sign > 0 ? "+" : "-") + "sin(" + y.get_str() + " pi)";
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SearchReport find_charpoly_collisions_triangles(int q_max, const Tolerances& tol) {
  if (q_max < 3) throw DomainError("q_max must be at least 3");
  SearchReport report;
  std::vector<mpq_class> R = rationals_below(1, q_max);
  std::set<mpq_class> Rset(R.begin(), R.end());

  struct Item {
    std::array<mpq_class, 3> a;
    PolygonData poly;
    TrigPoly P;
    int odd;
    std::string key;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = i; j < R.size(); ++j) {
      mpq_class a3 = 1 - R[i] - R[j];
      if (a3 < R[j] || !Rset.count(a3)) continue;
      std::array<mpq_class, 3> a{R[i], R[j], a3};
      std::array<Angle, 3> ang{Angle::pi_multiple(a[0]), Angle::pi_multiple(a[1]),
                               Angle::pi_multiple(a[2])};
      PolygonData t = make_triangle(ang[0], ang[1], ang[2]);
      Item it{a, t, char_poly(t, tol), t.odd_count(), ""};
      if (it.odd == 2) {
        int eps = 1;
        mpq_class rest;
        for (const Angle& g : ang)
          if (g.is_odd()) eps *= g.classify().parity;
          else rest = g.pi_mult();
        it.key = "cos(t) " + sine_key(-eps, mpq_class(1 / (2 * rest)));
      }
      items.push_back(std::move(it));
    }
  report.examined = items.size();

  UnionFind uf(items.size());
  std::map<std::string, std::size_t> exact_first;
  std::vector<std::size_t> approx;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].key.empty()) {
      auto [it, fresh] = exact_first.emplace(items[i].key, i);
      if (!fresh) uf.join(i, it->second);
    } else {
      approx.push_back(i);
    }
  }
  // remaining polynomials: sweep by constant term, confirm with poly_equal
  std::sort(approx.begin(), approx.end(), [&](std::size_t x, std::size_t y) {
    return items[x].P.constant.to_double() < items[y].P.constant.to_double();
  });
  for (std::size_t u = 0; u < approx.size(); ++u)
    for (std::size_t v = u + 1; v < approx.size(); ++v) {
      const Item& A = items[approx[u]];
      const Item& B = items[approx[v]];
      if (B.P.constant.to_double() - A.P.constant.to_double() > 1e-9) break;
      if (A.P.terms.size() == B.P.terms.size() && poly_equal(A.P, B.P, tol.poly))
        uf.join(approx[u], approx[v]);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) groups[uf.find(i)].push_back(i);
  for (auto& [root, idx] : groups) {
    if (idx.size() < 2) continue;
    CollisionGroup g;
    g.shared = items[idx[0]].P;
    g.odd_count = items[idx[0]].odd;
    g.exact_key = items[idx[0]].key;
    for (std::size_t i : idx) {
      if (!poly_equal(items[i].P, g.shared, tol.poly))
        throw Error("collision group failed re-verification");
      g.angles.push_back(items[i].a);
      g.members.push_back(items[i].poly);
    }
    report.groups.push_back(std::move(g));
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const CollisionGroup& x, const CollisionGroup& y) { return x.angles[0] < y.angles[0]; });
  return report;
}

QuadVsEqReport quad_vs_equilateral(int index_max, int samples, const Tolerances& tol) {
  if (index_max < 1) throw DomainError("index_max must be at least 1");
  QuadVsEqReport report;
  TrigPoly target;
  target.terms.push_back({Scalar(1), Scalar(1)});
  target.constant = Scalar(1);
  int side = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(samples)))));

  for (int k = 1; k <= index_max; ++k)
    for (int j = k; j <= index_max; ++j) {
      QuadVsEqEntry e;
      e.k = k;
      e.j = j;
      e.parity_opposite = (k + j) % 2 == 1;
      mpq_class r1(1, 2 * k + 1), r3(1, 2 * j + 1);
      mpq_class r2 = (2 - r1 - r3) / 2;
      Angle a1 = Angle::pi_multiple(r1), a2 = Angle::pi_multiple(r2), a3 = Angle::pi_multiple(r3);
      mpq_class r4 = 2 - r1 - r2 - r3;
      double th2 = kPi / (2 * r2.get_d()), th4 = kPi / (2 * r4.get_d());
      e.cos_difference_one = std::fabs(std::cos(th2 - th4) - 1) < 1e-12;
      e.c2c4_positive = (c_of(a2) * c_of(a2)).to_double() > 0;
      // any split l1 + l2 = l3 + l4 = 1/2 gives the same polynomial
      PolygonData probe = PolygonData::from_lengths(
          {Scalar::rational(1, 5), Scalar::rational(3, 10), Scalar::rational(1, 7),
           Scalar::rational(5, 14)},
          {a1, a2, a3, a2});
      e.charpoly_matches = poly_equal(char_poly(probe, tol), target, tol.poly);

      // closure: l1 u1 + (1/2 - l1) u2 + l3 u3 + (1/2 - l3) u4 = 0
      double heading = 0;
      double ux[4], uy[4];
      double alpha[4] = {a1.rad(), a2.rad(), a3.rad(), a2.rad()};
      for (int i = 0; i < 4; ++i) {
        ux[i] = std::cos(heading);
        uy[i] = std::sin(heading);
        heading += kPi - alpha[i];
      }
      double bx = 0.5 * (ux[1] + ux[3]), by = 0.5 * (uy[1] + uy[3]);
      double m1x = ux[0] - ux[1], m1y = uy[0] - uy[1];
      double m3x = ux[2] - ux[3], m3y = uy[2] - uy[3];
      auto residual = [&](double x, double y) {
        return std::hypot(bx + x * m1x + y * m3x, by + x * m1y + y * m3y);
      };
      const double lo = 1e-9, hi = 0.5 - 1e-9;
      // sweep: projected gradient descent from every grid sample
      double best = INFINITY;
      for (int s = 0; s < side; ++s)
        for (int t = 0; t < side; ++t) {
          double x = (s + 0.5) / side * 0.5, y = (t + 0.5) / side * 0.5;
          for (int it = 0; it < 60; ++it) {
            double rx = bx + x * m1x + y * m3x, ry = by + x * m1y + y * m3y;
            double gx = rx * m1x + ry * m1y, gy = rx * m3x + ry * m3y;
            double mgx = gx * m1x + gy * m3x, mgy = gx * m1y + gy * m3y;
            double denom = mgx * mgx + mgy * mgy;
            if (denom < 1e-300) break;
            double stepl = (gx * gx + gy * gy) / denom;
            double nx = std::clamp(x - stepl * gx, lo, hi), ny = std::clamp(y - stepl * gy, lo, hi);
            if (std::fabs(nx - x) + std::fabs(ny - y) < 1e-15) break;
            x = nx;
            y = ny;
          }
          best = std::min(best, residual(x, y));
        }
      e.sweep_min_residual = best;

      // exact minimum of the convex quadratic over the box
      double exact = INFINITY;
      double g11 = m1x * m1x + m1y * m1y, g12 = m1x * m3x + m1y * m3y, g22 = m3x * m3x + m3y * m3y;
      double h1 = -(bx * m1x + by * m1y), h2 = -(bx * m3x + by * m3y);
      double det = g11 * g22 - g12 * g12;
      if (std::fabs(det) > 1e-14) {
        double x = (h1 * g22 - h2 * g12) / det, y = (g11 * h2 - g12 * h1) / det;
        if (x >= lo && x <= hi && y >= lo && y <= hi) exact = residual(x, y);
      }
      for (double fixed : {lo, hi}) {
        double y = g22 > 0 ? std::clamp((h2 - g12 * fixed) / g22, lo, hi) : lo;
        exact = std::min(exact, residual(fixed, y));
        double x = g11 > 0 ? std::clamp((h1 - g12 * fixed) / g11, lo, hi) : lo;
        exact = std::min(exact, residual(x, fixed));
      }
      // singular case: the minimum sits on a line; sample it through the box
      if (std::fabs(det) <= 1e-14 && g11 > 0)
        for (int s = 0; s <= 2000; ++s) {
          double y = lo + (hi - lo) * s / 2000.0;
          double x = std::clamp((h1 - g12 * y) / g11, lo, hi);
          exact = std::min(exact, residual(x, y));
        }
      e.exact_min_residual = exact;
      e.feasible = e.sweep_min_residual <= 1e-6;

      if (!e.parity_opposite) e.verdict = "rejected: odd angles of the same parity";
      else if (!e.charpoly_matches) e.verdict = "rejected: polynomial differs";
      else if (e.feasible) e.verdict = "feasible quadrilateral";
      else e.verdict = "polynomial matches, but no convex quadrilateral closes";
      report.entries.push_back(e);
    }
  report.notes.push_back(
      "the polynomial conditions admit these angle data; whether a quadrilateral realises them is "
      "decided only by the closure sweep");
  return report;
}

MultisetCheck check_length_multiset(const std::vector<Scalar>& L_in, std::size_t n_eff, double tol) {
  MultisetCheck out;
  std::vector<Scalar> L = L_in;
  std::sort(L.begin(), L.end());
  Scalar half = Scalar::rational(1, 2);
  out.below_half = std::all_of(L.begin(), L.end(),
                               [&](const Scalar& v) { return v < half && !near(v, half, tol); });
  auto mult = [&](const Scalar& x) {
    return static_cast<std::size_t>(
        std::count_if(L.begin(), L.end(), [&](const Scalar& v) { return near(v, x, tol); }));
  };
  std::vector<Scalar> ls = l_star(L, tol);
  out.lstar_size = ls.size();
  out.lstar_multiplicity = std::all_of(ls.begin(), ls.end(), [&](const Scalar& x) { return mult(x) >= 2; });
  out.lstar_sum_relation = std::all_of(ls.begin(), ls.end(), [&](const Scalar& x) {
    std::size_t m = mult(x);
    if (m == n_eff) return true;
    std::vector<Scalar> others;
    for (const Scalar& v : L)
      if (!near(v, x, tol)) others.push_back(v);
    std::vector<Scalar> sums = subset_sums(others, tol);
    for (std::size_t k = 2; k <= m; ++k)
      if (contains(sums, Scalar(static_cast<long>(k)) * x, tol)) return true;
    return false;
  });
  const Scalar& l0 = L.front();
  out.shortest_multiplicity = mult(l0) >= 3 || contains(L, Scalar(2) * l0, tol);
  out.splits_in_halves = contains(subset_sums(L, tol), half, tol);
  return out;
}

namespace {

std::size_t lstar_bound(std::size_t n, int odd) {
  if (odd == 0) {
    if (n == 5 || n == 6) return 2;
    if (n == 7 || n == 8) return 3;
    return 4;
  }
  return n == 5 ? 3 : 4;
}

Condition cond(const std::string& name, bool ok, const std::string& detail = "") {
  return {name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail};
}

Condition not_applicable(const std::string& name, const std::string& detail) {
  return {name, CheckStatus::NotApplicable, detail};
}

}  // namespace

SmoothCheckResult smooth_check(const PolygonData& input, bool vs_equilateral, const Tolerances& tol) {
  if (input.is_zero_gon()) throw GeometryError("smooth_check needs a polygon");
  PolygonData p = normalize_perimeter(input);
  SmoothCheckResult out;
  auto& cs = out.conditions;
  const std::size_t n = p.n();
  const int odd = p.odd_count();
  const double ltol = 1e-12;

  TrigPoly target;
  target.terms.push_back({Scalar(1), Scalar(1)});
  target.constant = Scalar(vs_equilateral ? 1 : -1);

  cs.push_back(cond("n_at_least_5", n >= 5, "n = " + std::to_string(n)));
  cs.push_back(cond("charpoly_matches_target", poly_equal(char_poly(p, tol), target, tol.poly)));
  cs.push_back(cond("at_most_one_odd_angle", odd <= 1, std::to_string(odd) + " odd"));
  auto in_a_plus = [&](const Angle& a) { return c_of(a).to_double() > 0; };
  cs.push_back(cond("angle_in_a_plus", std::any_of(p.angles().begin(), p.angles().end(), in_a_plus)));

  const std::string why = "needs at most one odd angle";
  if (odd <= 1) {
    PolygonData base = odd == 0 ? p : reduce(p);
    std::vector<Scalar> L = edge_multiset(base);
    MultisetCheck mc = check_length_multiset(L, base.n(), ltol);
    std::vector<Scalar> ls = l_star(L, ltol);
    cs.push_back(cond("lstar_multiplicity", mc.lstar_multiplicity));
    // an edge with exactly one endpoint in A+, and one with both or neither
    bool edges_ok = std::all_of(ls.begin(), ls.end(), [&](const Scalar& x) {
      bool one = false, both_or_none = false;
      for (std::size_t j = 0; j < base.n(); ++j) {
        if (!near(base.length(j), x, ltol)) continue;
        int cnt = in_a_plus(base.angle((j + base.n() - 1) % base.n())) + in_a_plus(base.angle(j));
        if (cnt == 1) one = true;
        else both_or_none = true;
      }
      return one && both_or_none;
    });
    cs.push_back(cond("lstar_a_plus_edges", edges_ok));
    cs.push_back(cond("lstar_sum_relation", mc.lstar_sum_relation));
    cs.push_back(cond("shortest_edge_multiplicity", mc.shortest_multiplicity));
    std::size_t count = l_star(edge_multiset(p), ltol).size();
    std::size_t bound = lstar_bound(n, odd);
    cs.push_back(cond("lstar_count_bound", count <= bound,
                      std::to_string(count) + " <= " + std::to_string(bound)));
  } else {
    for (const char* name : {"lstar_multiplicity", "lstar_a_plus_edges", "lstar_sum_relation",
                             "shortest_edge_multiplicity", "lstar_count_bound"})
      cs.push_back(not_applicable(name, why));
  }

  // (i) two even angles splitting the boundary into halves, opposite parity
  // (same parity against the equilateral triangle); (ii) two sign classes
  // with vanishing length sum and negative (positive) coefficient
  bool split_i = false;
  Scalar half = Scalar::rational(1, 2);
  for (std::size_t i = 0; i < n && !split_i; ++i)
    for (std::size_t j = i + 1; j < n && !split_i; ++j) {
      AngleClass ci = p.angle(i).classify(), cj = p.angle(j).classify();
      if (ci.kind != AngleKind::Even || cj.kind != AngleKind::Even) continue;
      bool parity_ok = vs_equilateral ? ci.parity == cj.parity : ci.parity != cj.parity;
      Scalar arc(0);
      for (std::size_t e = i + 1; e <= j; ++e) arc += p.length(e);
      if (parity_ok && near(arc, half, ltol)) split_i = true;
    }
  int split_ii = 0;
  for (const SignVector& xi : enumerate_sign_classes(n)) {
    if (!near(dot_lengths(p, xi), Scalar(0), ltol)) continue;
    double a = a_coefficient(p, xi).to_double();
    if (vs_equilateral ? a > ltol : a < -ltol) ++split_ii;
  }
  cs.push_back(cond("boundary_split", split_i || split_ii >= 2,
                    std::string(split_i ? "even-angle split; " : "") + std::to_string(split_ii) +
                        " balanced sign classes of the required sign"));

  if (odd == 1) {
    std::size_t j = 0;
    while (!p.angle(j).is_odd()) ++j;
    Scalar s = p.length(j) + p.length((j + 1) % n);
    cs.push_back(cond("odd_adjacent_edges_short", s < half && !near(s, half, ltol), s.to_string()));
  } else {
    cs.push_back(not_applicable("odd_adjacent_edges_short", "needs exactly one odd angle"));
  }

  out.passes = std::none_of(cs.begin(), cs.end(),
                            [](const Condition& c) { return c.status == CheckStatus::Fail; });
  return out;
}

std::vector<PentagonPattern> smooth_candidate_pentagons(int q_max, bool odd) {
  if (q_max < 2) throw DomainError("q_max must be at least 2");
  std::vector<mpq_class> R = rationals_below(mpq_class(1, 2), q_max);
  std::set<mpq_class> Rset(R.begin(), R.end());
  const std::size_t n_eff = odd ? 4 : 5;
  const std::size_t bound = odd ? 1 : 2;
  std::vector<PentagonPattern> out;
  std::vector<std::size_t> idx(n_eff - 1, 0);

  // nondecreasing index tuples; the last entry closes the sum to 1
  auto visit = [&](const std::vector<mpq_class>& chosen) {
    std::vector<Scalar> L(chosen.begin(), chosen.end());
    MultisetCheck mc = check_length_multiset(L, n_eff, 0);
    if (!mc.below_half || mc.lstar_size > bound || !mc.lstar_multiplicity ||
        !mc.lstar_sum_relation || !mc.shortest_multiplicity || !mc.splits_in_halves)
      return;
    if (!odd) {
      out.push_back({L, std::nullopt, mc.lstar_size});
      return;
    }
    std::map<mpq_class, int> counts;
    for (const mpq_class& v : chosen) ++counts[v];
    bool two_pairs = counts.size() == 2 && counts.begin()->second == 2;
    std::set<std::vector<mpq_class>> seen;
    for (const auto& [curved, cnt] : counts) {
      std::vector<mpq_class> rest;
      bool removed = false;
      for (const mpq_class& v : chosen) {
        if (!removed && v == curved) {
          removed = true;
          continue;
        }
        rest.push_back(v);
      }
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<mpq_class> cyc{curved, rest[0], rest[1], rest[2]};
        if (two_pairs) {
          bool adjacent = false;
          for (int i = 0; i < 4; ++i) adjacent = adjacent || cyc[i] == cyc[(i + 1) % 4];
          if (adjacent) continue;
        }
        std::vector<mpq_class> rev{curved, rest[2], rest[1], rest[0]};
        std::vector<mpq_class> key = std::min(cyc, rev);
        if (!seen.insert(key).second) continue;
        out.push_back({{Scalar(key[1]), Scalar(key[2]), Scalar(key[3])}, Scalar(curved), mc.lstar_size});
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };

  std::vector<mpq_class> chosen(n_eff);
  std::function<void(std::size_t, std::size_t, mpq_class)> rec = [&](std::size_t pos, std::size_t from,
                                                                     mpq_class sum) {
    if (pos == n_eff - 1) {
      mpq_class last = 1 - sum;
      if (last < chosen[pos - 1] || !Rset.count(last)) return;
      chosen[pos] = last;
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < R.size(); ++i) {
      mpq_class s = sum + R[i] * static_cast<long>(n_eff - pos);
      if (s > 1) break;
      chosen[pos] = R[i];
      rec(pos + 1, i, sum + R[i]);
    }
  };
  rec(0, 0, mpq_class(0));
  return out;
}

}  // namespace steklov
