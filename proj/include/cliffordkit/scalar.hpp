#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

namespace cliffordkit {

/// Exact field element: a reduced rational, a Gaussian rational (rational
/// real and imaginary parts), or a binary64 float. Floats exist only for the
/// exponential path; arithmetic between two exact values never decays to
/// Float64. A Gaussian value whose imaginary part is zero is demoted to
/// Rational, so every value has a single canonical representation.
class Scalar {
 public:
  enum class Kind { rational, gaussian, float64 };

  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar f64(double x) { return Scalar(x); }
  static Scalar imaginary_unit() { return gaussian(0, 1); }

  /// Parses "p", "p/q", or a decimal integer string. Throws on garbage.
  static Scalar parse_rational(const std::string& s);

  Kind kind() const;
  bool is_exact() const { return kind() != Kind::float64; }
  bool is_zero() const;
  bool is_one() const;

  /// Real and imaginary parts of an exact value. Throws on Float64.
  const mpq_class& real_part() const;
  mpq_class imag_part() const;

  double to_double() const;  // throws if the imaginary part is nonzero
  std::complex<double> to_complex() const;

  Scalar conj() const;
  Scalar negated() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on /0
  Scalar operator-() const { return negated(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "3/2", "1/2+3i", "-1.25" — human-readable, exact for exact kinds.
  std::string str() const;

 private:
  struct Gauss {
    mpq_class re, im;  // invariant: im != 0
  };
  using Rep = std::variant<mpq_class, Gauss, double>;

  explicit Scalar(Rep v) : v_(std::move(v)) {}
  explicit Scalar(double x) : v_(x) {}

  static Scalar normalized(mpq_class re, mpq_class im);

  Rep v_;
};

inline Scalar operator*(long k, const Scalar& s) {
  return Scalar::rational(k) * s;
}

}  // namespace cliffordkit
