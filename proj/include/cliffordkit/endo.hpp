#pragma once

#include <utility>
#include <vector>

#include "cliffordkit/multivector.hpp"
#include "cliffordkit/spinor.hpp"

namespace cliffordkit {

/// Projection operator P_I^(k) on the algebra, defined recursively:
/// P_empty^(0) = id and, for k >= 1,
///   P_I^(k) a = -1/2 [[e_k, e_k P_I^(k-1) a]]          if k not in I,
///   P_I^(k) a = -1/2 e_k [[e_k, P_{I\{k}}^(k-1) a]]     if k in I.
/// Requires all form values 1 (complexified orthonormal algebra) and
/// I inside {1..k}. On blades: P_I^(k) e_J = e_J iff {1..k} is contained in
/// (I & J) | (~I & ~J), else 0.
Multivector p_algebra(const QuadraticSpace& space, int k, BladeBits I,
                      const Multivector& a);

/// Signs sigma_I making Q_I e_I = 1, chosen by evaluation: one pass over the
/// 2^n blades at construction, immutable afterwards.
struct QCalibration {
  int n = 0;
  std::vector<int> sign;  // indexed by blade bits, each +-1
};

QCalibration calibrate_q(const QuadraticSpace& space);

/// Left inverse of blade multiplication:
///   Q_I a = (-1/2)^n sigma_I [[e_n, ... [[e_2, [[e_1, e_{I^c} a]] ]] ...]]
/// with Q_I e_J = delta_IJ after calibration. Throws NotCalibrated when the
/// calibration does not match the space.
Multivector q_algebra(const QuadraticSpace& space, BladeBits I, const Multivector& a,
                      const QCalibration& cal);

/// Hatted projections on End E: same recursion with c_k = c(e_k) and matrix
/// supercommutators. Satisfies sum_I P-hat_I b = b.
OperatorMatrix p_hat(const TwistedModule& mod, int k, BladeBits I,
                     const OperatorMatrix& b);

/// Hatted left inverses: Q-hat_I b supercommutes with the whole Clifford
/// action and P-hat_I = c_I Q-hat_I.
OperatorMatrix q_hat(const TwistedModule& mod, BladeBits I, const OperatorMatrix& b,
                     const QCalibration& cal);

/// Full decomposition b = sum_I c(e_I) (Q-hat_I b). The residual of the
/// reconstruction is checked exactly.
struct DecompositionResult {
  std::vector<std::pair<BladeBits, OperatorMatrix>> terms;  // graded-lex order
  bool residual_zero = false;
};

DecompositionResult decompose_endo(const TwistedModule& mod, const OperatorMatrix& b);

/// True when every component of the decomposition supercommutes with every
/// generator action (the skew-tensor membership condition).
bool components_supercommute(const TwistedModule& mod, const DecompositionResult& dec);

/// Verifies the skew-product sign rule at matrix level:
/// (c(a) beta)(c(a') beta') = sign c(a a') (beta beta') with sign = -1 exactly
/// when beta and a' are both odd. a, a' are parity-homogeneous algebra
/// elements over the orthonormal space; beta, beta' must supercommute with
/// the action.
bool skew_product_check(const TwistedModule& mod, const Multivector& a,
                        const Multivector& a_prime, const OperatorMatrix& beta,
                        const OperatorMatrix& beta_prime);

}  // namespace cliffordkit
