#pragma once

#include <vector>

#include "cliffordkit/multivector.hpp"

namespace cliffordkit {

/// Wedge multiplication operator: epsilon(v) a = v ^ a. v must be a pure
/// 1-vector over the same space; a carries the exterior tag.
Multivector epsilon(const Multivector& v, const Multivector& a);

/// Contraction operator iota(v): the degree-lowering antiderivation with
/// iota(v) 1 = 0 and iota(v)(w ^ a) = (v, w) a - w ^ iota(v) a, where (,)
/// is the (possibly degenerate) form of the space. iota(v)^2 = 0 and
/// {iota(v), epsilon(w)} = (v, w) id.
Multivector iota(const Multivector& v, const Multivector& a);

/// Bilinear form on the exterior algebra extending (,): distinct degrees
/// pair to zero and (v_1^...^v_k, w_1^...^w_k) = det (v_i, w_j).
Scalar gram_form(const Multivector& a, const Multivector& b);

/// The Clifford action c(v) = epsilon(v) - iota(v) on the exterior algebra;
/// c(v)^2 = -q(v) id.
Multivector clifford_act_exterior(const Multivector& v, const Multivector& a);

/// Symbol map sigma(a) = c(a) 1: evaluates the operator chain of a on the
/// unit of the exterior algebra. Linear superspace isomorphism C(V) -> /\V.
Multivector symbol(const Multivector& a);

/// Quantization map, the exact inverse of symbol. On blades over the
/// orthogonal basis it is the identity relabeling, which is how it is
/// evaluated; contraction cross-terms reappear through mv_multiply when the
/// result is multiplied out.
Multivector quantize(const Multivector& x);

/// Z-grading carried over from the exterior algebra: component k is
/// quantize of the degree-k part of symbol(a). Components sum to a.
struct GradedDecomposition {
  std::vector<Multivector> component;  // indexed 0..n, clifford tag
  Multivector sum() const;
};

GradedDecomposition grade_decompose(const Multivector& a);

/// Degree-k piece of the decomposition.
Multivector grade_component(const Multivector& a, int k);

/// True when grade_decompose(a) is concentrated in degree k.
bool pure_z_grade(const Multivector& a, int k);

}  // namespace cliffordkit
