#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffordkit/scalar.hpp"

namespace cliffordkit {

/// Dense matrix of Scalar entries. Used for endomorphisms of modules in a
/// fixed ordered basis; all kernels below run exact elimination over the
/// Gaussian-rational field (entries must be exact).
class OperatorMatrix {
 public:
  OperatorMatrix() : rows_(0), cols_(0) {}
  OperatorMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static OperatorMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  bool is_exact() const;

  OperatorMatrix operator+(const OperatorMatrix& o) const;
  OperatorMatrix operator-(const OperatorMatrix& o) const;
  OperatorMatrix operator-() const;
  OperatorMatrix operator*(const OperatorMatrix& o) const;
  OperatorMatrix scaled(const Scalar& c) const;
  bool operator==(const OperatorMatrix& o) const;
  bool operator!=(const OperatorMatrix& o) const { return !(*this == o); }

  OperatorMatrix conjugate_transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  /// Maximum |entry| as a double; handy for float-tolerance checks.
  double max_abs() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// Exact rank via Gaussian elimination over the Gaussian rationals.
int exact_rank(OperatorMatrix m);

/// Solves A x = b exactly. Returns nullopt when inconsistent; free
/// variables, if any, are set to zero.
std::optional<std::vector<Scalar>> solve_exact(const OperatorMatrix& a,
                                               const std::vector<Scalar>& b);

/// Basis of the kernel of A, one vector per column of the result.
std::vector<std::vector<Scalar>> nullspace_basis(const OperatorMatrix& a);

/// Exact inverse. Throws NonInvertible on singular input.
OperatorMatrix invert_exact(const OperatorMatrix& a);

}  // namespace cliffordkit
