#include "steklov/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "steklov/errors.hpp"

namespace steklov {

bool TrigPoly::is_exact() const {
  if (!constant.is_exact()) return false;
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) {
    return t.freq.is_exact() && t.coef.is_exact();
  });
}

Scalar TrigPoly::max_freq() const { return terms.empty() ? Scalar(0) : terms.back().freq; }

double TrigPoly::eval(double t, int derivative) const {
  double sum = derivative == 0 ? constant.to_double() : 0.0;
  for (const Term& term : terms) {
    double f = term.freq.to_double();
    double x = f * t;
    double v = 0;
    switch (derivative % 4) {
      case 0: v = std::cos(x); break;
      case 1: v = -std::sin(x); break;
      case 2: v = -std::cos(x); break;
      default: v = std::sin(x); break;
    }
    sum += term.coef.to_double() * std::pow(f, derivative) * v;
  }
  return sum;
}

double TrigPoly::derivative_scale(int k) const {
  double s = k == 0 ? std::fabs(constant.to_double()) : 0.0;
  for (const Term& term : terms)
    s += std::fabs(term.coef.to_double()) * std::pow(term.freq.to_double(), k);
  return s;
}

const Term* TrigPoly::find(const Scalar& freq, double tol) const {
  for (const Term& t : terms)
    if (near(t.freq, freq, tol)) return &t;
  return nullptr;
}

TrigPoly canonicalize(std::vector<Term> raw, Scalar constant, const Tolerances& tol) {
  for (Term& t : raw) t.freq = t.freq.abs();
  bool exact_freqs = std::all_of(raw.begin(), raw.end(),
                                 [](const Term& t) { return t.freq.is_exact(); });
  std::vector<Term> merged;
  if (exact_freqs) {
    std::map<mpq_class, Scalar> acc;
    for (const Term& t : raw) {
      if (t.freq.is_zero()) {
        constant += t.coef;
        continue;
      }
      auto it = acc.find(t.freq.exact());
      if (it == acc.end()) acc.emplace(t.freq.exact(), t.coef);
      else it->second += t.coef;
    }
    for (auto& [f, c] : acc) merged.push_back({Scalar(f), c});
  } else {
    std::stable_sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
      return a.freq.to_double() < b.freq.to_double();
    });
    for (const Term& t : raw) {
      double f = t.freq.to_double();
      if (f <= tol.merge) {
        constant += t.coef;
        continue;
      }
      if (!merged.empty()) {
        double g = merged.back().freq.to_double();
        if (f - g <= tol.merge * std::max(1.0, g)) {
          merged.back().coef += t.coef;
          if (!merged.back().freq.is_exact() && t.freq.is_exact()) merged.back().freq = t.freq;
          continue;
        }
      }
      merged.push_back(t);
    }
  }
  TrigPoly out;
  for (const Term& t : merged) {
    if (t.coef.is_zero()) continue;
    if (!t.coef.is_exact() && std::fabs(t.coef.to_double()) < tol.drop) continue;
    out.terms.push_back(t);
  }
  if (!constant.is_exact() && std::fabs(constant.to_double()) < tol.drop) constant = Scalar(0.0);
  out.constant = constant;
  return out;
}

std::vector<SignVector> enumerate_sign_classes(std::size_t n) {
  if (n == 0) throw DomainError("sign classes need n >= 1");
  if (n > 30) throw DomainError("too many vertices for sign-class enumeration");
  std::vector<SignVector> out;
  std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    SignVector xi(n, 1);
    for (std::size_t j = 1; j < n; ++j)
      if ((c >> (n - 1 - j)) & 1) xi[j] = -1;
    out.push_back(std::move(xi));
  }
  return out;
}

Scalar a_coefficient(const PolygonData& p, const SignVector& xi) {
  std::size_t n = p.n();
  if (xi.size() != n) throw DomainError("sign vector length mismatch");
  Scalar a(1);
  for (std::size_t j = 0; j < n; ++j)
    if (xi[j] != xi[(j + 1) % n]) a *= c_of(p.angle(j));
  return a;
}

Scalar dot_lengths(const PolygonData& p, const SignVector& xi) {
  Scalar s(0);
  for (std::size_t j = 0; j < p.n(); ++j) s += xi[j] > 0 ? p.length(j) : -p.length(j);
  return s.abs();
}

TrigPoly char_poly(const PolygonData& p, const Tolerances& tol) {
  if (p.is_zero_gon()) {
    TrigPoly out;
    out.terms.push_back({p.perimeter(), Scalar(1)});
    out.constant = Scalar(-1);
    return out;
  }
  std::size_t n = p.n();
  std::vector<Scalar> c(n), lengths(n);
  Scalar s_prod(1);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = c_of(p.angle(j));
    lengths[j] = p.length(j);
    s_prod *= s_of(p.angle(j));
  }
  std::vector<Term> raw;
  for (const SignVector& xi : enumerate_sign_classes(n)) {
    Scalar a(1), dot(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (xi[j] != xi[(j + 1) % n]) a *= c[j];
      dot += xi[j] > 0 ? lengths[j] : -lengths[j];
    }
    if (a.is_zero()) continue;
    raw.push_back({dot.abs(), a});
  }
  return canonicalize(std::move(raw), -s_prod, tol);
}

PolyComparison compare_polys(const TrigPoly& a, const TrigPoly& b, double tol) {
  PolyComparison out;
  if (a.is_exact() && b.is_exact()) {
    out.exact = true;
    if (a.terms.size() != b.terms.size() || a.constant != b.constant) return out;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].freq != b.terms[i].freq || a.terms[i].coef != b.terms[i].coef) return out;
    out.equal = true;
    return out;
  }
  // Walk both sorted term lists; an unmatched term must be negligible.
  std::size_t i = 0, j = 0;
  auto negligible = [&](const Term& t) { return std::fabs(t.coef.to_double()) <= tol; };
  while (i < a.terms.size() || j < b.terms.size()) {
    if (i < a.terms.size() && j < b.terms.size() &&
        near(a.terms[i].freq, b.terms[j].freq, tol)) {
      if (!near(a.terms[i].coef, b.terms[j].coef, tol)) return out;
      ++i;
      ++j;
    } else if (j == b.terms.size() ||
               (i < a.terms.size() && a.terms[i].freq < b.terms[j].freq)) {
      if (!negligible(a.terms[i])) return out;
      ++i;
    } else {
      if (!negligible(b.terms[j])) return out;
      ++j;
    }
  }
  out.equal = near(a.constant, b.constant, tol);
  return out;
}

bool poly_equal(const TrigPoly& a, const TrigPoly& b, double tol) {
  return compare_polys(a, b, tol).equal;
}

std::size_t term_count(const TrigPoly& p) { return p.terms.size(); }

bool admissible_signature(const TrigPoly& p, std::size_t n) {
  if (n == 0 || n > 62) return false;
  return term_count(p) == (std::size_t{1} << (n - 1));
}

bool admissible_direct(const PolygonData& p, double tol) {
  if (p.is_zero_gon()) return false;
  if (p.odd_count() > 0) return false;
  std::size_t n = p.n();
  if (n > 20) throw DomainError("too many vertices for the direct admissibility test");
  std::vector<double> l(n);
  for (std::size_t j = 0; j < n; ++j) l[j] = p.length(j).to_double();
  bool exact = std::all_of(p.edges().begin(), p.edges().end(),
                           [](const Edge& e) { return e.length.is_exact(); });
  // coefficient vectors in {-1,0,1}^n with first nonzero entry +1
  std::vector<int> v(n, 0);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= 3;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    int first = 0;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = static_cast<int>(c % 3) - 1;
      c /= 3;
      if (first == 0) first = v[j];
    }
    if (first != 1) continue;
    if (exact) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j]) s += v[j] > 0 ? p.length(j).exact() : mpq_class(-p.length(j).exact());
      if (s == 0) return false;
    } else {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += v[j] * l[j];
      if (std::fabs(s) <= tol) return false;
    }
  }
  return true;
}

TrigPoly scale_frequencies(const TrigPoly& p, const Scalar& factor) {
  TrigPoly out = p;
  for (Term& t : out.terms) t.freq = t.freq * factor;
  return out;
}

}  // namespace steklov
