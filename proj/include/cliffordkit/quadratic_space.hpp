#pragma once

#include <string>
#include <vector>

#include "cliffordkit/scalar.hpp"

namespace cliffordkit {

/// An n-dimensional quadratic space with a diagonal bilinear form:
/// (e_i, e_j) = q_i delta_ij and q(v) = sum_i q_i (v^i)^2. Only diagonal
/// forms are representable; a degenerate q_i = 0 is allowed and yields the
/// exterior-algebra limit.
struct QuadraticSpace {
  std::vector<Scalar> q;  // exact form values, one per generator

  int dim() const { return static_cast<int>(q.size()); }

  /// Form value of generator i (1-based). Throws on out-of-range.
  const Scalar& form_value(int i) const;

  bool nondegenerate() const;

  static QuadraticSpace euclidean(int n);
  static QuadraticSpace lorentzian(int n);  // (+, -, -, ..., -)
  static QuadraticSpace with_values(std::vector<Scalar> values);

  bool operator==(const QuadraticSpace& o) const { return q == o.q; }
  bool operator!=(const QuadraticSpace& o) const { return !(*this == o); }

  /// "q:1,-1,0" — exact values, used by the CLI and JSON layers.
  std::string describe() const;
};

/// Parses "s:+--0" (sign pattern) or "q:1,-1,1/2" (explicit values).
QuadraticSpace parse_signature(const std::string& spec);

}  // namespace cliffordkit
