#include "steklov/quasieig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefine = 1e-12;
constexpr double kTangent = 1e-8;

double bisect(const std::function<double(double)>& g, double a, double b) {
  double ga = g(a);
  for (int it = 0; it < 200 && b - a > kRefine; ++it) {
    double mid = 0.5 * (a + b);
    double gm = g(mid);
    if (gm == 0) return mid;
    if ((gm < 0) == (ga < 0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Order of the root near t0: first derivative that is not small relative to
// its natural scale.
int multiplicity(const TrigPoly& p, double t0) {
  for (int k = 1; k <= 12; ++k) {
    double scale = p.derivative_scale(k);
    if (scale == 0) return k;
    if (std::fabs(p.eval(t0, k)) > 1e-3 * scale) return k;
  }
  return 12;
}

// Relocate a multiple root on the derivative of order m-1, which has a
// simple root there.
double polish(const TrigPoly& p, double t0, int m, double h, double horizon) {
  if (m <= 1) return t0;
  auto g = [&](double t) { return p.eval(t, m - 1); };
  double a = std::max(0.0, t0 - h), b = std::min(horizon, t0 + h);
  double ga = g(a), gb = g(b);
  if (ga == 0) return a;
  if (gb == 0) return b;
  if ((ga < 0) == (gb < 0)) return t0;
  double r = bisect(g, a, b);
  return std::fabs(p.eval(r)) <= std::fabs(p.eval(t0)) + 1e-14 ? r : t0;
}

}  // namespace

RootList roots(const TrigPoly& p, double horizon, std::optional<double> step_opt) {
  if (!(horizon > 0)) throw DomainError("horizon must be positive");
  double fmax = p.max_freq().to_double();
  if (fmax <= 0) throw DomainError("constant polynomial has no isolated roots");
  double step = step_opt ? *step_opt : kPi / (8 * fmax);
  if (!(step > 0)) throw DomainError("step must be positive");
  if (step > kPi / (2 * fmax))
    throw ResolutionError("step exceeds pi / (2 f_max) = " + std::to_string(kPi / (2 * fmax)));

  RootList out;
  out.horizon = horizon;
  out.step = step;
  std::size_t cells = static_cast<std::size_t>(std::ceil(horizon / step));
  std::vector<double> t(cells + 1), v(cells + 1), d(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    t[i] = std::min(horizon, static_cast<double>(i) * step);
    v[i] = p.eval(t[i]);
    d[i] = p.eval(t[i], 1);
  }
  auto P = [&](double x) { return p.eval(x); };
  auto dP = [&](double x) { return p.eval(x, 1); };
  std::vector<Root> found;
  auto add = [&](double r, bool tangential_hint) {
    int m = multiplicity(p, r);
    if (m >= 2) {
      r = polish(p, r, m, step / 2, horizon);
      tangential_hint = true;
    }
    found.push_back({r, tangential_hint});
  };

  for (std::size_t i = 0; i <= cells; ++i) {
    if (v[i] == 0) add(t[i], false);
    if (i == cells) break;
    if (v[i] != 0 && v[i + 1] != 0 && (v[i] < 0) != (v[i + 1] < 0)) add(bisect(P, t[i], t[i + 1]), false);
    // critical points inside the cell
    bool crit = d[i] == 0 || (d[i] != 0 && d[i + 1] != 0 && (d[i] < 0) != (d[i + 1] < 0));
    if (!crit) continue;
    double c = d[i] == 0 ? t[i] : bisect(dP, t[i], t[i + 1]);
    double pc = P(c);
    if (std::fabs(pc) < kTangent) {
      add(c, true);
    } else if (v[i] != 0 && v[i + 1] != 0 && (v[i] < 0) == (v[i + 1] < 0) && (pc < 0) != (v[i] < 0)) {
      // two crossings hidden inside one cell
      add(bisect(P, t[i], c), false);
      add(bisect(P, c, t[i + 1]), false);
    }
  }

  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) { return a.t < b.t; });
  for (const Root& r : found) {
    if (r.t < 0 || r.t > horizon) continue;
    if (!out.roots.empty() && r.t - out.roots.back().t < 1e-6) {
      out.roots.back().tangential = out.roots.back().tangential || r.tangential;
      continue;
    }
    out.roots.push_back(r);
  }
  return out;
}

SpectrumComparison compare_spectra(const RootList& a, const RootList& b) {
  if (std::fabs(a.horizon - b.horizon) > 1e-12) throw HorizonMismatch("root lists use different horizons");
  SpectrumComparison out;
  out.compared = std::min(a.roots.size(), b.roots.size());
  for (std::size_t i = 0; i < out.compared; ++i)
    out.max_gap = std::max(out.max_gap, std::fabs(a.roots[i].t - b.roots[i].t));
  out.count_mismatch = a.roots.size() > b.roots.size() ? a.roots.size() - b.roots.size()
                                                       : b.roots.size() - a.roots.size();
  return out;
}

}  // namespace steklov
