#include "cliffordkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "cliffordkit/errors.hpp"

namespace cliffordkit {

OperatorMatrix OperatorMatrix::identity(int n) {
  OperatorMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::rational(1);
  return m;
}

bool OperatorMatrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool OperatorMatrix::is_exact() const {
  for (const Scalar& s : e_)
    if (!s.is_exact()) return false;
  return true;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  OperatorMatrix out(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  OperatorMatrix out(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
  return out;
}

OperatorMatrix OperatorMatrix::operator-() const {
  OperatorMatrix out(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
  return out;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  OperatorMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

OperatorMatrix OperatorMatrix::scaled(const Scalar& c) const {
  OperatorMatrix out(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
  return out;
}

bool OperatorMatrix::operator==(const OperatorMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

OperatorMatrix OperatorMatrix::conjugate_transpose() const {
  OperatorMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

std::vector<Scalar> OperatorMatrix::apply(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Scalar> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
  return out;
}

double OperatorMatrix::max_abs() const {
  double m = 0.0;
  for (const Scalar& s : e_) m = std::max(m, std::abs(s.to_complex()));
  return m;
}

std::string OperatorMatrix::str() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]\n";
  }
  return out;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns. Exact field
// arithmetic throughout.
std::vector<int> rref(OperatorMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = Scalar::rational(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int exact_rank(OperatorMatrix m) {
  return static_cast<int>(rref(m).size());
}

std::optional<std::vector<Scalar>> solve_exact(const OperatorMatrix& a,
                                               const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatch("solve_exact shape mismatch");
  OperatorMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Scalar> x(static_cast<size_t>(a.cols()));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

std::vector<std::vector<Scalar>> nullspace_basis(const OperatorMatrix& a) {
  OperatorMatrix m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(a.cols()));
    v[static_cast<size_t>(free)] = Scalar::rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

OperatorMatrix invert_exact(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) throw NonInvertible("inverse of a non-square matrix");
  int n = a.rows();
  OperatorMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::rational(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw NonInvertible("singular matrix");
  OperatorMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace cliffordkit
