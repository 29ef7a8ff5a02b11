#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

namespace steklov {

// Exact rational or double. Arithmetic stays exact while both sides are
// exact; anything touching a double becomes a double.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int v) : v_(mpq_class(v)) {}
  Scalar(long v) : v_(mpq_class(v)) {}
  Scalar(const mpq_class& q) : v_(canon(q)) {}
  Scalar(double d) : v_(d) {}

  static Scalar rational(long p, long q);
  // "p/q", "p" or a decimal/float literal (the latter parses as Approx).
  static Scalar parse(const std::string& text);

  bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& exact() const;  // throws DomainError when Approx
  double to_double() const;
  std::string to_string() const;   // "p/q" or 17 significant digits

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact comparison when both are exact, double comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  static mpq_class canon(mpq_class q) {
    q.canonicalize();
    return q;
  }
  std::variant<mpq_class, double> v_;
};

// Exact when both are exact, otherwise |a-b| <= tol * max(1, |a|, |b|).
bool near(const Scalar& a, const Scalar& b, double tol);

std::string format_double(double d);

// cos(pi*x) and sin(pi*x) with the argument reduced exactly first.
double cos_pi(const mpq_class& x);
double sin_pi(const mpq_class& x);

enum class AngleKind { Odd, Even, Generic };

struct AngleClass {
  AngleKind kind = AngleKind::Generic;
  long index = 0;   // k for pi/(2k+1), m for pi/(2m)
  int parity = 0;   // (-1)^k or (-1)^m; 0 for Generic
};

// Interior angle in (0, pi): exact rational multiple of pi, or radians.
class Angle {
 public:
  static Angle pi_multiple(const mpq_class& r);
  static Angle pi_multiple(long p, long q) { return pi_multiple(mpq_class(p, q)); }
  static Angle radians(double rad);
  // pi/(2k+1) and pi/(2m)
  static Angle odd(long k) { return pi_multiple(1, 2 * k + 1); }
  static Angle even(long m) { return pi_multiple(1, 2 * m); }

  bool is_exact() const { return exact_; }
  const mpq_class& pi_mult() const;  // throws DomainError when Approx
  double rad() const;
  AngleClass classify() const;
  bool is_odd() const { return classify().kind == AngleKind::Odd; }
  bool is_even() const { return classify().kind == AngleKind::Even; }
  std::string to_string() const;

  // pi - this, exact when this is exact.
  Angle supplement() const;

  friend bool operator==(const Angle& a, const Angle& b);

 private:
  Angle() = default;
  bool exact_ = false;
  mpq_class mult_;
  double rad_ = 0;
};

// c(a) = cos(pi^2/(2a)), s(a) = sin(pi^2/(2a)).
Scalar c_of(const Angle& a);
Scalar s_of(const Angle& a);

// The angle in [pi/(m+1), pi/m] with |c| = s. Endpoint hits come back exact.
Angle abs_c_inverse(double s, int m);
// Same, given |c| and |s| separately (better conditioned near |c| = 1).
Angle abs_c_inverse(double abs_c, double abs_s, int m);

// pi/k for the nearest k when within tol; otherwise the input unchanged.
Angle snap_special(const Angle& a, double tol, bool allow_odd = true,
                   bool allow_even = true);
// Nearest odd angle within tol, if any.
std::optional<Angle> nearest_odd(double rad, double tol, long max_k);

}  // namespace steklov
