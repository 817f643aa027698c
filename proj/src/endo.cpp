#include "cliffordkit/endo.hpp"

#include "cliffordkit/errors.hpp"
#include "cliffordkit/spin.hpp"

namespace cliffordkit {

namespace {

void require_orthonormal(const QuadraticSpace& space) {
  for (const Scalar& v : space.q)
    if (!v.is_one())
      throw WrongSignature("projection recursion needs all form values 1");
}

void require_index_set(int k, BladeBits I) {
  if (k < 0) throw BadIndexSet("negative recursion level");
  if ((I >> k) != 0)
    throw BadIndexSet("index set " + blades::str(I) + " not inside {1.." +
                      std::to_string(k) + "}");
}

const Scalar kMinusHalf = Scalar::rational(-1, 2);

}  // namespace

Multivector p_algebra(const QuadraticSpace& space, int k, BladeBits I,
                      const Multivector& a) {
  require_orthonormal(space);
  require_index_set(k, I);
  if (k > space.dim()) throw BadIndexSet("recursion level above dimension");
  if (k == 0) return a;
  Multivector ek = Multivector::basis_vector(space, k);
  BladeBits bit = BladeBits{1} << (k - 1);
  if ((I & bit) == 0) {
    Multivector prev = p_algebra(space, k - 1, I, a);
    return supercommutator(ek, ek * prev).scaled(kMinusHalf);
  }
  Multivector prev = p_algebra(space, k - 1, I & ~bit, a);
  return (ek * supercommutator(ek, prev)).scaled(kMinusHalf);
}

QCalibration calibrate_q(const QuadraticSpace& space) {
  require_orthonormal(space);
  int n = space.dim();
  QCalibration cal;
  cal.n = n;
  cal.sign.assign(size_t{1} << n, 1);
  for (BladeBits I = 0; I < (BladeBits{1} << n); ++I) {
    Multivector probe = q_algebra(space, I, Multivector::blade(space, I, Scalar::rational(1)),
                                  QCalibration{n, std::vector<int>(size_t{1} << n, 1)});
    Multivector one = Multivector::unit(space);
    if (probe == one)
      cal.sign[I] = 1;
    else if (probe == -one)
      cal.sign[I] = -1;
    else
      throw NotCalibrated("uncalibrated Q_I e_I is not +-1: " + probe.str());
  }
  return cal;
}

Multivector q_algebra(const QuadraticSpace& space, BladeBits I, const Multivector& a,
                      const QCalibration& cal) {
  require_orthonormal(space);
  int n = space.dim();
  if (cal.n != n || cal.sign.size() != (size_t{1} << n))
    throw NotCalibrated("calibration table does not match the space");
  if ((I >> n) != 0) throw BadIndexSet("index set outside {1..n}");
  BladeBits comp = static_cast<BladeBits>((BladeBits{1} << n) - 1) & ~I;
  Multivector acc = Multivector::blade(space, comp, Scalar::rational(1)) * a;
  Scalar factor = Scalar::rational(1);
  for (int k = 1; k <= n; ++k) {
    acc = supercommutator(Multivector::basis_vector(space, k), acc);
    factor = factor * kMinusHalf;
  }
  factor = factor * Scalar::rational(cal.sign[I]);
  return acc.scaled(factor);
}

OperatorMatrix p_hat(const TwistedModule& mod, int k, BladeBits I,
                     const OperatorMatrix& b) {
  require_index_set(k, I);
  if (k > mod.ctx.n) throw BadIndexSet("recursion level above dimension");
  if (k == 0) return b;
  const OperatorMatrix& ck = mod.c_f[static_cast<size_t>(k - 1)];
  BladeBits bit = BladeBits{1} << (k - 1);
  if ((I & bit) == 0) {
    OperatorMatrix prev = p_hat(mod, k - 1, I, b);
    return matrix_supercommutator(ck, ck * prev, mod.parity).scaled(kMinusHalf);
  }
  OperatorMatrix prev = p_hat(mod, k - 1, I & ~bit, b);
  return (ck * matrix_supercommutator(ck, prev, mod.parity)).scaled(kMinusHalf);
}

OperatorMatrix q_hat(const TwistedModule& mod, BladeBits I, const OperatorMatrix& b,
                     const QCalibration& cal) {
  int n = mod.ctx.n;
  if (cal.n != n || cal.sign.size() != (size_t{1} << n))
    throw NotCalibrated("calibration table does not match the module");
  if ((I >> n) != 0) throw BadIndexSet("index set outside {1..n}");
  BladeBits comp = static_cast<BladeBits>((BladeBits{1} << n) - 1) & ~I;
  QuadraticSpace ortho = mod.ctx.orthonormal_space();
  OperatorMatrix acc = act(mod, Multivector::blade(ortho, comp, Scalar::rational(1))) * b;
  Scalar factor = Scalar::rational(1);
  for (int k = 1; k <= n; ++k) {
    acc = matrix_supercommutator(mod.c_f[static_cast<size_t>(k - 1)], acc, mod.parity);
    factor = factor * kMinusHalf;
  }
  factor = factor * Scalar::rational(cal.sign[I]);
  return acc.scaled(factor);
}

DecompositionResult decompose_endo(const TwistedModule& mod, const OperatorMatrix& b) {
  if (b.rows() != mod.dim || b.cols() != mod.dim)
    throw DimensionMismatch("endomorphism dimension != module dimension");
  QuadraticSpace ortho = mod.ctx.orthonormal_space();
  QCalibration cal = calibrate_q(ortho);
  DecompositionResult out;
  OperatorMatrix recon(mod.dim, mod.dim);
  for (BladeBits I : blades::all_graded_lex(mod.ctx.n)) {
    OperatorMatrix comp = q_hat(mod, I, b, cal);
    recon = recon + act(mod, Multivector::blade(ortho, I, Scalar::rational(1))) * comp;
    out.terms.emplace_back(I, std::move(comp));
  }
  out.residual_zero = (recon - b).is_zero();
  return out;
}

bool components_supercommute(const TwistedModule& mod, const DecompositionResult& dec) {
  for (const auto& [I, comp] : dec.terms)
    for (const OperatorMatrix& cj : mod.c_f)
      if (!matrix_supercommutator(cj, comp, mod.parity).is_zero()) return false;
  return true;
}

bool skew_product_check(const TwistedModule& mod, const Multivector& a,
                        const Multivector& a_prime, const OperatorMatrix& beta,
                        const OperatorMatrix& beta_prime) {
  int pa = a.parity(), pap = a_prime.parity();
  if (pa < 0 || pap < 0)
    throw Error("skew product check needs parity-homogeneous algebra elements");
  Parity pb = matrix_parity(beta, mod.parity);
  Parity pbp = matrix_parity(beta_prime, mod.parity);
  if (pb == Parity::mixed || pbp == Parity::mixed)
    throw Error("skew product check needs parity-homogeneous commutant elements");
  for (const OperatorMatrix& cj : mod.c_f) {
    if (!matrix_supercommutator(cj, beta, mod.parity).is_zero() ||
        !matrix_supercommutator(cj, beta_prime, mod.parity).is_zero())
      throw Error("beta arguments must supercommute with the Clifford action");
  }
  OperatorMatrix lhs = (act(mod, a) * beta) * (act(mod, a_prime) * beta_prime);
  OperatorMatrix rhs = act(mod, a * a_prime) * (beta * beta_prime);
  bool minus = (pb == Parity::odd) && (pap == 1);
  if (minus) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace cliffordkit
