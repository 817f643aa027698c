#include "cliffordkit/scalar.hpp"

#include <cstdio>
#include <stdexcept>

namespace cliffordkit {

namespace {

mpq_class reduced(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const mpq_class& q) {
  return q.get_str();  // "p" or "p/q", lowest terms, sign on the numerator
}

std::string float_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  return Scalar(Rep(reduced(num, den)));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(Rep(std::move(c)));
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  mpq_class r = re, i = im;
  r.canonicalize();
  i.canonicalize();
  return normalized(std::move(r), std::move(i));
}

Scalar Scalar::normalized(mpq_class re, mpq_class im) {
  if (im == 0) return Scalar(Rep(std::move(re)));
  return Scalar(Rep(Gauss{std::move(re), std::move(im)}));
}

Scalar Scalar::parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::domain_error("rational with zero denominator: " + s);
  q.canonicalize();
  return Scalar(Rep(std::move(q)));
}

Scalar::Kind Scalar::kind() const {
  if (std::holds_alternative<mpq_class>(v_)) return Kind::rational;
  if (std::holds_alternative<Gauss>(v_)) return Kind::gaussian;
  return Kind::float64;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::rational:
      return std::get<mpq_class>(v_) == 0;
    case Kind::gaussian:
      return false;  // im != 0 by invariant
    default:
      return std::get<double>(v_) == 0.0;
  }
}

bool Scalar::is_one() const {
  switch (kind()) {
    case Kind::rational:
      return std::get<mpq_class>(v_) == 1;
    case Kind::gaussian:
      return false;
    default:
      return std::get<double>(v_) == 1.0;
  }
}

const mpq_class& Scalar::real_part() const {
  if (kind() == Kind::rational) return std::get<mpq_class>(v_);
  if (kind() == Kind::gaussian) return std::get<Gauss>(v_).re;
  throw std::domain_error("real_part of a Float64 scalar");
}

mpq_class Scalar::imag_part() const {
  if (kind() == Kind::gaussian) return std::get<Gauss>(v_).im;
  if (kind() == Kind::rational) return mpq_class(0);
  throw std::domain_error("imag_part of a Float64 scalar");
}

double Scalar::to_double() const {
  switch (kind()) {
    case Kind::rational:
      return std::get<mpq_class>(v_).get_d();
    case Kind::gaussian:
      throw std::domain_error("to_double of a scalar with nonzero imaginary part");
    default:
      return std::get<double>(v_);
  }
}

std::complex<double> Scalar::to_complex() const {
  switch (kind()) {
    case Kind::rational:
      return {std::get<mpq_class>(v_).get_d(), 0.0};
    case Kind::gaussian: {
      const Gauss& g = std::get<Gauss>(v_);
      return {g.re.get_d(), g.im.get_d()};
    }
    default:
      return {std::get<double>(v_), 0.0};
  }
}

Scalar Scalar::conj() const {
  if (kind() == Kind::gaussian) {
    const Gauss& g = std::get<Gauss>(v_);
    return normalized(g.re, -g.im);
  }
  return *this;
}

Scalar Scalar::negated() const {
  switch (kind()) {
    case Kind::rational:
      return Scalar(Rep(mpq_class(-std::get<mpq_class>(v_))));
    case Kind::gaussian: {
      const Gauss& g = std::get<Gauss>(v_);
      return normalized(-g.re, -g.im);
    }
    default:
      return Scalar(-std::get<double>(v_));
  }
}

namespace {

// Arithmetic dispatch. Exact kinds close under +,-,*,/; any Float64 operand
// makes the result Float64, which requires both imaginary parts to vanish.
struct Parts {
  bool exact;
  mpq_class re, im;  // valid when exact
  double d;          // valid when !exact
};

Parts parts_of(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::rational:
      return {true, s.real_part(), mpq_class(0), 0.0};
    case Scalar::Kind::gaussian:
      return {true, s.real_part(), s.imag_part(), 0.0};
    default:
      return {false, mpq_class(0), mpq_class(0), s.to_double()};
  }
}

double force_double(const Parts& p) {
  if (!p.exact) return p.d;
  if (p.im != 0)
    throw std::domain_error(
        "cannot mix a Float64 with a scalar whose imaginary part is nonzero");
  return p.re.get_d();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  Parts a = parts_of(*this), b = parts_of(o);
  if (a.exact && b.exact) return normalized(a.re + b.re, a.im + b.im);
  return Scalar(force_double(a) + force_double(b));
}

Scalar Scalar::operator-(const Scalar& o) const {
  Parts a = parts_of(*this), b = parts_of(o);
  if (a.exact && b.exact) return normalized(a.re - b.re, a.im - b.im);
  return Scalar(force_double(a) - force_double(b));
}

Scalar Scalar::operator*(const Scalar& o) const {
  Parts a = parts_of(*this), b = parts_of(o);
  if (a.exact && b.exact)
    return normalized(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  return Scalar(force_double(a) * force_double(b));
}

Scalar Scalar::operator/(const Scalar& o) const {
  Parts a = parts_of(*this), b = parts_of(o);
  if (a.exact && b.exact) {
    mpq_class norm = b.re * b.re + b.im * b.im;
    if (norm == 0) throw std::domain_error("scalar division by zero");
    return normalized((a.re * b.re + a.im * b.im) / norm,
                      (a.im * b.re - a.re * b.im) / norm);
  }
  double den = force_double(b);
  if (den == 0.0) throw std::domain_error("scalar division by zero");
  return Scalar(force_double(a) / den);
}

bool Scalar::operator==(const Scalar& o) const {
  Parts a = parts_of(*this), b = parts_of(o);
  if (a.exact && b.exact) return a.re == b.re && a.im == b.im;
  // Comparisons against floats are numeric.
  return force_double(a) == force_double(b);
}

std::string Scalar::str() const {
  switch (kind()) {
    case Kind::rational:
      return rat_str(std::get<mpq_class>(v_));
    case Kind::gaussian: {
      const Gauss& g = std::get<Gauss>(v_);
      std::string im = rat_str(g.im);
      std::string im_part;
      if (im == "1")
        im_part = "i";
      else if (im == "-1")
        im_part = "-i";
      else
        im_part = im + "i";
      if (g.re == 0) return im_part;
      std::string sep = (g.im > 0) ? "+" : "";
      return rat_str(g.re) + sep + im_part;
    }
    default:
      return float_str(std::get<double>(v_));
  }
}

}  // namespace cliffordkit
