#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliffordkit/quadratic_space.hpp"
#include "cliffordkit/scalar.hpp"

namespace cliffordkit {

/// A blade index set I over generators {1..n}, stored as a bitset:
/// bit j-1 set means generator j is present. 0 is the unit blade.
using BladeBits = std::uint32_t;

namespace blades {

int grade(BladeBits I);
bool contains(BladeBits I, int j);                 // 1-based generator index
BladeBits from_indices(const std::vector<int>& idx);
std::vector<int> indices(BladeBits I);             // ascending, 1-based
std::string str(BladeBits I);                      // "1", "e{1,3}"

/// Graded-lexicographic order on index sets: by grade, then lexicographic
/// on the ascending index sequence.
bool graded_lex_less(BladeBits a, BladeBits b);

/// All subsets of {1..n} in graded-lexicographic order.
std::vector<BladeBits> all_graded_lex(int n);

}  // namespace blades

enum class Algebra { clifford, exterior };

/// Sparse multivector: a map from blade index sets to exact (or Float64)
/// coefficients, tagged with its quadratic space and product rule. Zero
/// coefficients are never stored. Immutable-by-convention: all operations
/// return new values.
class Multivector {
 public:
  Multivector(QuadraticSpace space, Algebra algebra)
      : space_(std::move(space)), algebra_(algebra) {}

  static Multivector zero(const QuadraticSpace& s, Algebra a = Algebra::clifford);
  static Multivector unit(const QuadraticSpace& s, Algebra a = Algebra::clifford);
  static Multivector scalar(const QuadraticSpace& s, const Scalar& c,
                            Algebra a = Algebra::clifford);
  static Multivector basis_vector(const QuadraticSpace& s, int j,
                                  Algebra a = Algebra::clifford);
  static Multivector blade(const QuadraticSpace& s, BladeBits I, const Scalar& c,
                           Algebra a = Algebra::clifford);

  const QuadraticSpace& space() const { return space_; }
  Algebra algebra() const { return algebra_; }
  const std::map<BladeBits, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(BladeBits I) const;

  /// Accumulates c onto blade I, pruning the term if it becomes zero.
  void add_term(BladeBits I, const Scalar& c);

  /// True when every stored blade has the given grade.
  bool pure_grade(int k) const;
  /// True when the element is a 1-vector (possibly zero).
  bool is_vector() const { return pure_grade(1); }
  /// Coordinates of a 1-vector in the generator basis. Throws NotAVector.
  std::vector<Scalar> vector_coords() const;

  /// 0 = even, 1 = odd, -1 = mixed or zero.
  int parity() const;

  Multivector with_algebra(Algebra a) const;  // retag, same terms

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector scaled(const Scalar& c) const;

  bool operator==(const Multivector& o) const;
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  std::string str() const;  // "2 + 3/2 e{1,2}", terms in graded-lex order

 private:
  QuadraticSpace space_;
  Algebra algebra_;
  std::map<BladeBits, Scalar> terms_;
};

inline Multivector operator*(const Scalar& c, const Multivector& a) {
  return a.scaled(c);
}

/// Product of two basis blades under the Clifford rule:
/// e_I e_J = coeff * e_K with K = I xor J. The coefficient is the swap sign
/// times prod_{i in I and J} (-q_i).
std::pair<Scalar, BladeBits> blade_product(const QuadraticSpace& space,
                                           BladeBits I, BladeBits J);

/// Exterior variant: same swap sign, zero whenever I and J intersect.
std::pair<Scalar, BladeBits> blade_product_exterior(BladeBits I, BladeBits J);

/// Bilinear extension of the blade product. Throws MismatchedSpace or
/// MismatchedAlgebra when the operands do not live in the same algebra.
Multivector mv_multiply(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return mv_multiply(a, b);
}

/// The star involution: e_I with |I| = k maps to (-1)^(k(k+1)/2) e_I and
/// coefficients are conjugated. Clifford tag only.
Multivector star(const Multivector& a);

/// Even/odd split by blade grade parity.
std::pair<Multivector, Multivector> parity_split(const Multivector& a);

/// (dim C^+, dim C^-) counted by blade enumeration.
std::pair<long long, long long> dimension_census(const QuadraticSpace& space);

/// q(v) for a 1-vector with exact coordinates.
Scalar quadratic_form(const QuadraticSpace& space, const Multivector& v);

/// (v, w) for 1-vectors.
Scalar bilinear_form(const QuadraticSpace& space, const Multivector& v,
                     const Multivector& w);

}  // namespace cliffordkit
