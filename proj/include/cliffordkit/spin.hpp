#pragma once

#include <vector>

#include "cliffordkit/matrix.hpp"
#include "cliffordkit/multivector.hpp"

namespace cliffordkit {

/// Supercommutator [[a, b]] = ab + ba when both arguments are odd, ab - ba
/// otherwise, extended bilinearly over the parity splits of mixed arguments.
Multivector supercommutator(const Multivector& a, const Multivector& b);

/// Checks -1/2 [[v, a]] == quantize(iota(v, symbol(a))) exactly, the
/// contraction form of the Clifford relation. v must be a 1-vector.
bool contraction_identity_check(const Multivector& v, const Multivector& a);

/// Matrix of ad(a) = [a, .] restricted to V in the generator basis: column j
/// holds the coordinates of [[a, e_j]]. Requires a pure grade-2 element over
/// a nondegenerate form. The result A satisfies (Av, w) + (v, Aw) = 0.
OperatorMatrix ad_matrix(const Multivector& a);

/// Even group-like element of the algebra with its construction provenance.
struct GroupElement {
  Multivector element;
  bool closed_form = true;   // false when built by the float Taylor series
  bool pure_bivector = true; // grade_decompose(a) concentrated in degree 2
};

/// exp(a). When a*a is a scalar multiple of the unit, a closed cos/sin (or
/// cosh/sinh) form is used; the coefficients are exact only when the scalar
/// square is zero, and Float64 otherwise. A non-scalar square falls back to
/// the Float64 Taylor series with a remainder bound checked against
/// `tolerance`; SeriesDiverged is thrown when the bound is not met by
/// `max_degree`. Throws NotEven on odd input.
GroupElement clifford_exp(const Multivector& a, int max_degree = 40,
                          double tolerance = 1e-12);

/// exp(turns * pi * a) for exact a with a*a = -1. Coefficients are exact
/// whenever 2*turns is an integer (cos/sin land in {0, +-1}); other angles
/// produce Float64 coefficients. This is the path on which identities like
/// exp(pi e1 e2) = -1 hold with zero tolerance.
GroupElement clifford_exp_pi(const Multivector& a, const Scalar& turns);

/// Adjoint action Ad(g) v = g v g^(-1) with g^(-1) = star(g); the result is
/// reduced to its 1-vector part after checking that the residual vanishes
/// (exactly for exact coefficients, below 1e-9 for Float64). Throws
/// NonInvertible when g star(g) != 1 and NotAVector on non-vector v.
Multivector adjoint_action(const GroupElement& g, const Multivector& v);

/// Structure constants c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k for
/// a linearly independent family of pure grade-2 elements. Throws NotClosed
/// when a commutator leaves the span and NotABivector on bad input.
std::vector<std::vector<std::vector<Scalar>>> structure_constants(
    const std::vector<Multivector>& basis);

}  // namespace cliffordkit
