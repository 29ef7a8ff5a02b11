#pragma once

#include <cstdint>
#include <vector>

#include "steklov/numerics.hpp"
#include "steklov/polygon.hpp"
#include "steklov/tolerances.hpp"

namespace steklov {

struct Term {
  Scalar freq;
  Scalar coef;
};

// sum coef_i cos(freq_i t) + constant, frequencies strictly increasing and
// positive, no zero coefficients.
struct TrigPoly {
  std::vector<Term> terms;
  Scalar constant;

  bool is_exact() const;
  Scalar max_freq() const;  // 0 when there are no terms
  // k-th derivative in t, evaluated in double precision.
  double eval(double t, int derivative = 0) const;
  // sum |coef| freq^k, a scale for the k-th derivative
  double derivative_scale(int k) const;
  const Term* find(const Scalar& freq, double tol) const;
};

// Merge equal frequencies, fold zero frequencies into the constant and drop
// vanishing coefficients. Exact frequencies merge exactly.
TrigPoly canonicalize(std::vector<Term> raw, Scalar constant, const Tolerances& tol = {});

// Sign vector with xi_1 = +1; entries are +1 / -1.
using SignVector = std::vector<int>;
// 2^(n-1) representatives in binary-counting order on xi_2..xi_n (xi_n fastest).
std::vector<SignVector> enumerate_sign_classes(std::size_t n);
// Product of c(alpha_j) over cyclic positions j with xi_j != xi_{j+1}.
Scalar a_coefficient(const PolygonData& p, const SignVector& xi);
Scalar dot_lengths(const PolygonData& p, const SignVector& xi);

TrigPoly char_poly(const PolygonData& p, const Tolerances& tol = {});

struct PolyComparison {
  bool equal = false;
  bool exact = false;  // decided by exact arithmetic rather than tolerance
};
PolyComparison compare_polys(const TrigPoly& a, const TrigPoly& b, double tol = 1e-12);
bool poly_equal(const TrigPoly& a, const TrigPoly& b, double tol = 1e-12);

std::size_t term_count(const TrigPoly& p);
// term_count == 2^(n-1)
bool admissible_signature(const TrigPoly& p, std::size_t n);
// No odd angle and the lengths satisfy no nontrivial relation with
// coefficients in {-1, 0, 1}.
bool admissible_direct(const PolygonData& p, double tol = 1e-12);

TrigPoly scale_frequencies(const TrigPoly& p, const Scalar& factor);

}  // namespace steklov
