#pragma once

// Test-only oracles, kept independent of the library kernels they check.
//
// The word oracle multiplies elements by rewriting generator words in the
// tensor algebra with the two rules e_i e_j = -e_j e_i (i != j) and
// e_i e_i = -q_i, never calling blade_product or mv_multiply.

#include <utility>
#include <vector>

#include "cliffordkit/multivector.hpp"

namespace cliffordkit::oracle {

/// A formal sum of generator words with scalar coefficients.
struct WordSum {
  QuadraticSpace space;
  std::vector<std::pair<Scalar, std::vector<int>>> words;
};

WordSum word_from_multivector(const Multivector& a);

/// Product by word concatenation.
WordSum word_concat(const WordSum& a, const WordSum& b);

/// Rewrites every word to the strictly increasing normal form and collects
/// equal words; the result maps directly onto the blade basis.
Multivector word_normalize(const WordSum& a);

/// e_I * e_J via the rewriting rules.
std::pair<Scalar, BladeBits> blade_product_oracle(const QuadraticSpace& space,
                                                  BladeBits I, BladeBits J);

/// a * b via the rewriting rules.
Multivector multiply_oracle(const Multivector& a, const Multivector& b);

/// sigma^(-1)(v_1 ^ ... ^ v_k) = (1/k!) sum_pi sign(pi) v_pi(1) ... v_pi(k),
/// the permutation-sum form of the quantization map, for k <= 4 factors.
/// Products are evaluated with the word oracle.
Multivector quantize_permutation_oracle(const std::vector<Multivector>& vectors);

/// Laplace-expansion determinant of a k x k scalar matrix (row-major),
/// independent of the elimination kernels.
Scalar laplace_determinant(const std::vector<std::vector<Scalar>>& m);

}  // namespace cliffordkit::oracle
