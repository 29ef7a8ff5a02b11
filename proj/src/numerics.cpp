#include "steklov/numerics.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

double mpq_to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(p, q));
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw DomainError("empty number");
  bool rational_syntax = true;
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' ||
          ch == '+')) {
      rational_syntax = false;
      break;
    }
  }
  if (rational_syntax) {
    std::string t = text[0] == '+' ? text.substr(1) : text;
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw DomainError("malformed rational: " + text);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
    return Scalar(q);
  }
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number: " + text);
  }
  if (used != text.size() || !std::isfinite(d)) throw DomainError("malformed number: " + text);
  return Scalar(d);
}

const mpq_class& Scalar::exact() const {
  if (!is_exact()) throw DomainError("scalar is not exact");
  return std::get<mpq_class>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return mpq_to_double(std::get<mpq_class>(v_));
  return std::get<double>(v_);
}

std::string format_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(v_).get_str();
  return format_double(std::get<double>(v_));
}

bool Scalar::is_zero() const {
  if (is_exact()) return std::get<mpq_class>(v_) == 0;
  return std::get<double>(v_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(v_));
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  else
    v_ = to_double() + o.to_double();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  else
    v_ = to_double() - o.to_double();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // exact zero annihilates, so odd-angle coefficients stay exactly zero
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  else if ((is_exact() && is_zero()) || (o.is_exact() && o.is_zero()))
    v_ = mpq_class(0);
  else
    v_ = to_double() * o.to_double();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
  else
    v_ = to_double() / o.to_double();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

bool near(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  double x = a.to_double(), y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol * scale;
}

double cos_pi(const mpq_class& x_in) {
  // reduce into [0, 1/2] keeping track of sign
  mpq_class x = x_in;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpz_class two_periods = fl - (fl % 2 + 2) % 2;  // largest even <= x
  x -= mpq_class(two_periods);
  if (x > 1) x = 2 - x;
  double sign = 1;
  if (x > mpq_class(1, 2)) {
    x = 1 - x;
    sign = -1;
  }
  if (x == 0) return sign;
  if (x == mpq_class(1, 2)) return 0.0;
  if (x > mpq_class(1, 4)) return sign * std::sin(kPi * mpq_to_double(mpq_class(mpq_class(1, 2) - x)));
  return sign * std::cos(kPi * mpq_to_double(x));
}

double sin_pi(const mpq_class& x) { return cos_pi(mpq_class(mpq_class(1, 2) - x)); }

Angle Angle::pi_multiple(const mpq_class& r_in) {
  mpq_class r = r_in;
  r.canonicalize();
  if (r <= 0 || r >= 1) throw DomainError("angle must lie in (0, pi): " + r.get_str() + " pi");
  Angle a;
  a.exact_ = true;
  a.mult_ = r;
  a.rad_ = kPi * mpq_to_double(r);
  return a;
}

Angle Angle::radians(double rad) {
  if (!(rad > 0 && rad < kPi)) throw DomainError("angle must lie in (0, pi): " + format_double(rad));
  Angle a;
  a.rad_ = rad;
  return a;
}

const mpq_class& Angle::pi_mult() const {
  if (!exact_) throw DomainError("angle is not an exact multiple of pi");
  return mult_;
}

double Angle::rad() const { return rad_; }

AngleClass Angle::classify() const {
  AngleClass out;
  if (!exact_ || mult_.get_num() != 1) return out;
  const mpz_class& q = mult_.get_den();
  if (!q.fits_slong_p()) return out;
  long d = q.get_si();
  if (d % 2 == 1) {
    out.kind = AngleKind::Odd;
    out.index = (d - 1) / 2;
  } else {
    out.kind = AngleKind::Even;
    out.index = d / 2;
  }
  out.parity = out.index % 2 == 0 ? 1 : -1;
  return out;
}

std::string Angle::to_string() const {
  if (exact_) return mult_.get_str() + " pi";
  return format_double(rad_) + " rad";
}

Angle Angle::supplement() const {
  if (exact_) return pi_multiple(mpq_class(1 - mult_));
  return radians(kPi - rad_);
}

bool operator==(const Angle& a, const Angle& b) {
  if (a.exact_ && b.exact_) return a.mult_ == b.mult_;
  return a.rad_ == b.rad_;
}

Scalar c_of(const Angle& a) {
  AngleClass k = a.classify();
  if (k.kind == AngleKind::Odd) return Scalar(0);
  if (k.kind == AngleKind::Even) return Scalar(k.parity);
  if (a.is_exact()) return Scalar(cos_pi(mpq_class(1 / (2 * a.pi_mult()))));
  return Scalar(std::cos(kPi * kPi / (2 * a.rad())));
}

Scalar s_of(const Angle& a) {
  AngleClass k = a.classify();
  if (k.kind == AngleKind::Odd) return Scalar(k.parity);
  if (k.kind == AngleKind::Even) return Scalar(0);
  if (a.is_exact()) return Scalar(sin_pi(mpq_class(1 / (2 * a.pi_mult()))));
  return Scalar(std::sin(kPi * kPi / (2 * a.rad())));
}

Angle abs_c_inverse(double s, int m) {
  if (!(s >= 0 && s <= 1)) throw DomainError("|c| value outside [0, 1]: " + format_double(s));
  return abs_c_inverse(s, std::sqrt((1 - s) * (1 + s)), m);
}

Angle abs_c_inverse(double abs_c, double abs_s, int m) {
  if (m < 1) throw DomainError("interval index must be >= 1");
  if (abs_c < 0 || abs_s < 0) throw DomainError("negative magnitude");
  // theta in [m pi/2, (m+1) pi/2]; alpha = pi^2 / (2 theta)
  // m even: |cos theta| = cos(phi); m odd: |cos theta| = sin(phi)
  double phi = (m % 2 == 0) ? std::atan2(abs_s, abs_c) : std::atan2(abs_c, abs_s);
  if (phi <= 0) {
    // theta = m pi/2
    if (m == 1) throw DomainError("|c| inverse lands on pi, not an interior angle");
    return Angle::pi_multiple(1, m);
  }
  if (phi >= kPi / 2) return Angle::pi_multiple(1, m + 1);
  double theta = m * kPi / 2 + phi;
  return Angle::radians(kPi * kPi / (2 * theta));
}

std::optional<Angle> nearest_odd(double rad, double tol, long max_k) {
  double k = std::round((kPi / rad - 1) / 2);
  if (k < 1 || k > max_k) return std::nullopt;
  long kk = static_cast<long>(k);
  if (std::fabs(kPi / (2 * kk + 1) - rad) > tol) return std::nullopt;
  return Angle::odd(kk);
}

Angle snap_special(const Angle& a, double tol, bool allow_odd, bool allow_even) {
  if (a.is_exact()) return a;
  double q = std::round(kPi / a.rad());
  if (q < 2 || q > 1e6) return a;
  long d = static_cast<long>(q);
  bool odd = d % 2 == 1;
  if ((odd && !allow_odd) || (!odd && !allow_even)) return a;
  if (std::fabs(kPi / d - a.rad()) <= tol) return Angle::pi_multiple(1, d);
  return a;
}

}  // namespace steklov
