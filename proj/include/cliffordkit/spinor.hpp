#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cliffordkit/matrix.hpp"
#include "cliffordkit/multivector.hpp"

namespace cliffordkit {

enum class Parity { even, odd, mixed };

/// Polarized complexification of an even-dimensional space with q_i in
/// {+1, -1}. Generators with q_i = -1 are rescaled by i, producing a complex
/// orthonormal basis f_1..f_n; the polarized pairs f_k^(+-) =
/// (f_{2k-1} +- i f_{2k})/sqrt(2) act on the spinor basis of blade subsets
/// of {1..m}, m = n/2, ordered graded-lexicographically. All action matrices
/// have Gaussian-rational entries (the sqrt(2) factors cancel) and are cached
/// eagerly; the context is immutable after construction.
struct SpinorContext {
  QuadraticSpace base;
  int n = 0;                      // base dimension, even
  int m = 0;                      // n / 2
  int dim = 0;                    // 2^m spinor dimension
  std::vector<bool> rescaled;     // f_j = i e_j when q_j = -1
  std::vector<BladeBits> basis;   // spinor blades, subsets of {1..m}
  std::vector<int> basis_index;   // blade bits -> basis position
  std::vector<int> spinor_parity; // |P| mod 2 per basis position
  std::vector<OperatorMatrix> c_f;  // action of orthonormal generators f_j
  std::vector<OperatorMatrix> c_e;  // action of original generators e_j
  std::vector<int> chirality_perm;  // positions sorted: S^+ block then S^-

  QuadraticSpace orthonormal_space() const;
};

/// Builds the polarized context. Throws OddDimension or DegenerateForm, and
/// rejects |q_i| != 1 (the i-rescale only normalizes unit form values).
SpinorContext complexify(const QuadraticSpace& space);

/// Cached action matrix of the complex orthonormal generator f_j (1-based).
const OperatorMatrix& clifford_action_matrix(const SpinorContext& ctx, int j);

/// Pairing matrix (f_k^-, f_l^+); the polarization makes it the identity.
OperatorMatrix polarize_pairing(const SpinorContext& ctx);

/// Both sides of the polarization identity (w_-, w_+) = q(w)/2 for the
/// vector with the given complex coordinates in the f basis.
std::pair<Scalar, Scalar> polarization_identity(const SpinorContext& ctx,
                                                const std::vector<Scalar>& coords);

/// Chirality operator: the element i^(n/2) f_1 f_2 ... f_n over the
/// orthonormal space and its diagonal action c(Gamma) e_P = (-1)^|P| e_P.
std::pair<Multivector, OperatorMatrix> chirality(const SpinorContext& ctx);

/// The same element assembled as the product a_1 ... a_m, a_k = i f_{2k-1} f_{2k}.
Multivector chirality_product_form(const SpinorContext& ctx);

/// The element a_k = i f_{2k-1} f_{2k} over the orthonormal space.
Multivector polarization_number_element(const SpinorContext& ctx, int k);

/// Chirality element rebuilt with the orthonormal generators taken in the
/// given order (a permutation of 1..n); flips sign with the permutation sign.
Multivector chirality_with_order(const SpinorContext& ctx, const std::vector<int>& order);

/// Hermitian scalar product; the spinor blade basis is orthonormal and the
/// form is conjugate-linear in the first slot.
Scalar hermitian_form(const SpinorContext& ctx, const std::vector<Scalar>& x,
                      const std::vector<Scalar>& y);

/// Adjoint with respect to the Hermitian form: the conjugate transpose.
OperatorMatrix op_adjoint(const SpinorContext& ctx, const OperatorMatrix& a);

/// Complex conjugation of an algebra element, defined coordinate-wise in the
/// rescaled orthonormal basis: blades pick up (-1)^(number of rescaled
/// generators) and coefficients are conjugated.
Multivector conjugate_element(const SpinorContext& ctx, const Multivector& a);

/// The antilinear star on the complexified algebra: w* = -conj(w) on
/// vectors, extended as an antihomomorphism.
Multivector star_element(const SpinorContext& ctx, const Multivector& a);

/// Action matrix c(a) on the spinor module. Accepts elements over the base
/// space (original generators) or over the orthonormal space (all form
/// values 1); complex coefficients are welcome either way.
OperatorMatrix act(const SpinorContext& ctx, const Multivector& a);

/// Parity of a matrix relative to per-basis-vector parity labels.
Parity matrix_parity(const OperatorMatrix& m, const std::vector<int>& basis_parity);

/// Even/odd parts of a matrix under the grading involution G: even part
/// (M + GMG)/2, odd part (M - GMG)/2 computed entrywise from the labels.
std::pair<OperatorMatrix, OperatorMatrix> matrix_parity_split(
    const OperatorMatrix& m, const std::vector<int>& basis_parity);

/// Matrix supercommutator with respect to the grading labels: anticommutator
/// on odd x odd homogeneous parts, commutator otherwise, extended bilinearly.
OperatorMatrix matrix_supercommutator(const OperatorMatrix& a, const OperatorMatrix& b,
                                      const std::vector<int>& basis_parity);

/// Dirac bundle for the signature (+,-,-,-): gamma^mu = i c(e^mu) plus
/// gamma5 = c(Gamma), the chirality permutation, and the recorded basis
/// change that brings the matrices to the standard Pauli block form.
struct GammaBundle {
  std::array<OperatorMatrix, 4> gamma;
  OperatorMatrix gamma5;
  std::vector<int> chirality_perm;
  OperatorMatrix block_change;      // applied as B M B^(-1), chirality-sorted basis
  OperatorMatrix block_change_inv;
};

GammaBundle gamma_matrices(const SpinorContext& ctx);

/// sigma operator c(quantize(e_{j1} ^ ... ^ e_{jk})) for distinct original
/// generator indices (1-based, in the given order). Throws RepeatedIndex.
OperatorMatrix sigma_tensor(const SpinorContext& ctx, const std::vector<int>& indices);

/// Twisted module W (x) S with the Clifford action 1_W (x) c_S. An optional
/// grading split d_W = d+ + d- makes W graded; E then inherits the parity
/// rule E^(+-) = (W^+ (x) S^(+-)) (+) (W^- (x) S^(-+)).
struct TwistedModule {
  SpinorContext ctx;
  int d_w = 1;
  std::optional<std::pair<int, int>> w_grading;
  int dim = 0;
  std::vector<int> parity;          // per E basis vector
  std::vector<OperatorMatrix> c_f;  // lifted orthonormal generator actions
  std::vector<OperatorMatrix> c_e;
};

TwistedModule build_twisted(const SpinorContext& ctx, int d_w,
                            std::optional<std::pair<int, int>> grading = std::nullopt);

/// Action matrix on the twisted module (same dispatch as the untwisted act).
OperatorMatrix act(const TwistedModule& mod, const Multivector& a);

/// Verifies that the 2^n matrices c(e_I) are linearly independent, hence
/// span End S: the matrix-level simplicity statement.
bool end_s_dimension_check(const SpinorContext& ctx);

}  // namespace cliffordkit
