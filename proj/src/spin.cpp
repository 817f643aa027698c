#include "cliffordkit/spin.hpp"

#include <cmath>

#include "cliffordkit/errors.hpp"
#include "cliffordkit/exterior.hpp"

namespace cliffordkit {

Multivector supercommutator(const Multivector& a, const Multivector& b) {
  if (a.space() != b.space())
    throw MismatchedSpace("supercommutator over different spaces");
  auto [ae, ao] = parity_split(a);
  auto [be, bo] = parity_split(b);
  // Both odd: anticommutator. Any other homogeneous pair: commutator.
  Multivector out = ao * bo + bo * ao;
  out = out + (ae * be - be * ae);
  out = out + (ae * bo - bo * ae);
  out = out + (ao * be - be * ao);
  return out;
}

bool contraction_identity_check(const Multivector& v, const Multivector& a) {
  Multivector lhs = supercommutator(v, a).scaled(Scalar::rational(-1, 2));
  Multivector rhs = quantize(iota(v, symbol(a)));
  return lhs == rhs;
}

OperatorMatrix ad_matrix(const Multivector& a) {
  const QuadraticSpace& space = a.space();
  if (!space.nondegenerate())
    throw DegenerateForm("ad requires a nondegenerate form");
  if (!a.is_zero() && !pure_z_grade(a, 2))
    throw NotABivector("ad requires a pure grade-2 element: " + a.str());
  int n = space.dim();
  OperatorMatrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    Multivector col = supercommutator(a, Multivector::basis_vector(space, j));
    std::vector<Scalar> coords = col.vector_coords();
    for (int i = 0; i < n; ++i) m.at(i, j - 1) = coords[static_cast<size_t>(i)];
  }
  return m;
}

namespace {

// Scalar multiple of the unit, if the element is one.
bool scalar_square(const Multivector& sq, Scalar* mu) {
  for (const auto& [I, c] : sq.terms())
    if (I != 0) return false;
  *mu = sq.coeff(0);
  return true;
}

Multivector to_float_coeffs(const Multivector& a) {
  Multivector out(a.space(), a.algebra());
  for (const auto& [I, c] : a.terms())
    out.add_term(I, Scalar::f64(c.to_double()));
  return out;
}

double coeff_l1_norm(const Multivector& a) {
  double s = 0.0;
  for (const auto& [I, c] : a.terms()) s += std::abs(c.to_complex());
  return s;
}

// Submultiplicative growth factor of the blade product: |e_I e_J| is at most
// the product of |q_i| over generators with |q_i| > 1.
double norm_growth_factor(const QuadraticSpace& space) {
  double m = 1.0;
  for (const Scalar& qi : space.q) {
    double v = std::abs(qi.to_double());
    if (v > 1.0) m *= v;
  }
  return m;
}

GroupElement exp_series(const Multivector& a, int max_degree, double tolerance) {
  for (const auto& [I, c] : a.terms())
    if (c.is_exact() && c.imag_part() != 0)
      throw Error("series exponential requires real coefficients");
  double growth = norm_growth_factor(a.space());
  double x = growth * coeff_l1_norm(a);
  // Tail of the exponential series after degree m, using
  // sum_{k>m} x^k/k! <= x^(m+1)/(m+1)! * 1/(1 - x/(m+2)).
  int degree = -1;
  double term = 1.0;
  for (int m = 0; m <= max_degree; ++m) {
    term *= x / (m + 1);
    if (m + 2 > x) {
      double bound = term / (1.0 - x / (m + 2)) / growth;
      if (bound < tolerance) {
        degree = m;
        break;
      }
    }
  }
  if (degree < 0)
    throw SeriesDiverged("remainder bound not met at max_degree=" +
                         std::to_string(max_degree));
  Multivector af = to_float_coeffs(a);
  Multivector acc = Multivector::scalar(a.space(), Scalar::f64(1.0));
  Multivector pow = acc;
  for (int k = 1; k <= degree; ++k) {
    pow = mv_multiply(pow, af).scaled(Scalar::f64(1.0 / k));
    acc = acc + pow;
  }
  GroupElement g{acc, false, pure_z_grade(a, 2)};
  return g;
}

}  // namespace

GroupElement clifford_exp(const Multivector& a, int max_degree, double tolerance) {
  auto [even, odd] = parity_split(a);
  if (!odd.is_zero()) throw NotEven("exponential argument must be even: " + a.str());
  Scalar mu;
  if (!scalar_square(a * a, &mu)) return exp_series(a, max_degree, tolerance);

  Multivector one = Multivector::unit(a.space());
  GroupElement g{one, true, a.is_zero() || pure_z_grade(a, 2)};
  if (mu.is_zero()) {
    g.element = one + a;  // nilpotent: exact
    return g;
  }
  for (const auto& [I, c] : a.terms())
    if (c.is_exact() && c.imag_part() != 0)
      throw Error(
          "complexified exponentials are supported on the exact "
          "rational-multiple-of-pi path (clifford_exp_pi) only");
  // exp(a) = cos(l) + sin(l)/l a for a^2 = -l^2, cosh/sinh for a^2 = +l^2.
  std::complex<double> muc = mu.to_complex();
  if (muc.imag() == 0.0 && muc.real() < 0.0) {
    double lam = std::sqrt(-muc.real());
    g.element = Multivector::scalar(a.space(), Scalar::f64(std::cos(lam))) +
                to_float_coeffs(a).scaled(Scalar::f64(std::sin(lam) / lam));
    return g;
  }
  if (muc.imag() == 0.0 && muc.real() > 0.0) {
    double lam = std::sqrt(muc.real());
    g.element = Multivector::scalar(a.space(), Scalar::f64(std::cosh(lam))) +
                to_float_coeffs(a).scaled(Scalar::f64(std::sinh(lam) / lam));
    return g;
  }
  // Complex scalar square: no real closed form in the scalar model.
  return exp_series(a, max_degree, tolerance);
}

GroupElement clifford_exp_pi(const Multivector& a, const Scalar& turns) {
  auto [even, odd] = parity_split(a);
  if (!odd.is_zero()) throw NotEven("exponential argument must be even: " + a.str());
  if (!turns.is_exact() || turns.imag_part() != 0)
    throw Error("angle must be an exact rational multiple of pi");
  Scalar mu;
  Multivector sq = a * a;
  if (!scalar_square(sq, &mu) || !(mu == Scalar::rational(-1)))
    throw Error("closed-form pi-angle exponential requires a*a = -1");

  mpq_class t = turns.real_part();
  mpq_class twice = t * 2;
  Multivector one = Multivector::unit(a.space());
  if (twice.get_den() == 1) {
    // Quarter-turn lattice: cos and sin are exactly 0 or +-1.
    long r = mpz_class(twice.get_num() % 4).get_si();
    if (r < 0) r += 4;  // 2t mod 4 selects the quadrant multiple of pi/2
    Scalar c, s;
    switch (r) {
      case 0: c = Scalar::rational(1); s = Scalar::rational(0); break;
      case 1: c = Scalar::rational(0); s = Scalar::rational(1); break;
      case 2: c = Scalar::rational(-1); s = Scalar::rational(0); break;
      default: c = Scalar::rational(0); s = Scalar::rational(-1); break;
    }
    return GroupElement{one.scaled(c) + a.scaled(s), true, pure_z_grade(a, 2)};
  }
  for (const auto& [I, c] : a.terms())
    if (c.is_exact() && c.imag_part() != 0)
      throw Error("non-quarter angles need real coefficients (no complex Float64)");
  double angle = t.get_d() * M_PI;
  Multivector g = Multivector::scalar(a.space(), Scalar::f64(std::cos(angle))) +
                  to_float_coeffs(a).scaled(Scalar::f64(std::sin(angle)));
  return GroupElement{g, true, pure_z_grade(a, 2)};
}

Multivector adjoint_action(const GroupElement& g, const Multivector& v) {
  if (!v.is_vector()) throw NotAVector("adjoint action expects a 1-vector");
  const Multivector& e = g.element;
  Multivector ginv = star(e);
  Multivector check = e * ginv;
  Multivector one = Multivector::unit(e.space());
  bool exact = true;
  for (const auto& [I, c] : e.terms()) exact = exact && c.is_exact();
  if (exact) {
    if (check != one) throw NonInvertible("g star(g) != 1");
  } else {
    Multivector resid = check - Multivector::scalar(e.space(), Scalar::f64(1.0));
    for (const auto& [I, c] : resid.terms())
      if (std::abs(c.to_complex()) > 1e-9)
        throw NonInvertible("g star(g) deviates from 1 beyond 1e-9");
  }
  Multivector out = e * v * ginv;
  Multivector vec(out.space(), out.algebra());
  for (const auto& [I, c] : out.terms()) {
    if (blades::grade(I) == 1) {
      vec.add_term(I, c);
    } else if (c.is_exact()) {
      throw Error("adjoint action left an exact residual outside degree 1");
    } else if (std::abs(c.to_complex()) > 1e-9) {
      throw Error("adjoint action residual outside degree 1 exceeds 1e-9");
    }
  }
  return vec;
}

std::vector<std::vector<std::vector<Scalar>>> structure_constants(
    const std::vector<Multivector>& basis) {
  if (basis.empty()) throw NotABivector("empty basis");
  const QuadraticSpace& space = basis[0].space();
  int n = space.dim();
  std::vector<BladeBits> grade2;
  for (BladeBits I = 0; I < (BladeBits{1} << n); ++I)
    if (blades::grade(I) == 2) grade2.push_back(I);
  int rows = static_cast<int>(grade2.size());
  int cols = static_cast<int>(basis.size());

  OperatorMatrix b(rows, cols);
  for (int j = 0; j < cols; ++j) {
    const Multivector& bj = basis[static_cast<size_t>(j)];
    if (bj.space() != space) throw MismatchedSpace("basis over different spaces");
    if (bj.is_zero() || !pure_z_grade(bj, 2))
      throw NotABivector("basis element is not pure grade-2: " + bj.str());
    for (int i = 0; i < rows; ++i) b.at(i, j) = bj.coeff(grade2[static_cast<size_t>(i)]);
  }
  if (exact_rank(b) != cols)
    throw NotClosed("basis elements are linearly dependent");

  std::vector<std::vector<std::vector<Scalar>>> c(
      static_cast<size_t>(cols),
      std::vector<std::vector<Scalar>>(static_cast<size_t>(cols),
                                       std::vector<Scalar>(static_cast<size_t>(cols))));
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < cols; ++j) {
      Multivector comm = supercommutator(basis[static_cast<size_t>(i)],
                                         basis[static_cast<size_t>(j)]);
      std::vector<Scalar> rhs(static_cast<size_t>(rows));
      for (int r = 0; r < rows; ++r) rhs[static_cast<size_t>(r)] = comm.coeff(grade2[static_cast<size_t>(r)]);
      // Anything outside the grade-2 blade span means the bracket escaped.
      Multivector recon(space, Algebra::clifford);
      for (int r = 0; r < rows; ++r) recon.add_term(grade2[static_cast<size_t>(r)], rhs[static_cast<size_t>(r)]);
      if (recon != comm)
        throw NotClosed("commutator has components outside grade 2");
      auto x = solve_exact(b, rhs);
      if (!x) throw NotClosed("commutator leaves the span of the basis");
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] = *x;
    }
  }
  return c;
}

}  // namespace cliffordkit
