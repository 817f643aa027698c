#include "cliffordkit/exterior.hpp"

#include <bit>

#include "cliffordkit/errors.hpp"

namespace cliffordkit {

namespace {

void require_vector(const Multivector& v) {
  if (!v.is_vector())
    throw NotAVector("operator argument must be a pure 1-vector: " + v.str());
}

void require_exterior(const Multivector& a) {
  if (a.algebra() != Algebra::exterior)
    throw MismatchedAlgebra("argument must carry the exterior tag");
}

// Sign of moving generator j into the sorted blade I from the left.
int left_insert_sign(BladeBits I, int j) {
  int below = std::popcount(I & ((BladeBits{1} << (j - 1)) - 1));
  return below % 2 == 0 ? 1 : -1;
}

// Position (1-based) of generator j within the sorted blade I.
int position_in(BladeBits I, int j) {
  return std::popcount(I & ((BladeBits{1} << (j - 1)) - 1)) + 1;
}

}  // namespace

Multivector epsilon(const Multivector& v, const Multivector& a) {
  require_vector(v);
  require_exterior(a);
  if (v.space() != a.space()) throw MismatchedSpace("epsilon over different spaces");
  Multivector out(a.space(), Algebra::exterior);
  for (const auto& [J, cv] : v.terms()) {
    int j = blades::indices(J)[0];
    for (const auto& [I, ca] : a.terms()) {
      if (blades::contains(I, j)) continue;
      Scalar s = cv * ca;
      if (left_insert_sign(I, j) < 0) s = -s;
      out.add_term(I | J, s);
    }
  }
  return out;
}

Multivector iota(const Multivector& v, const Multivector& a) {
  require_vector(v);
  require_exterior(a);
  if (v.space() != a.space()) throw MismatchedSpace("iota over different spaces");
  Multivector out(a.space(), Algebra::exterior);
  for (const auto& [J, cv] : v.terms()) {
    int j = blades::indices(J)[0];
    const Scalar& qj = a.space().form_value(j);
    if (qj.is_zero()) continue;  // degenerate direction contracts to zero
    for (const auto& [I, ca] : a.terms()) {
      if (!blades::contains(I, j)) continue;
      Scalar s = cv * ca * qj;
      if (position_in(I, j) % 2 == 0) s = -s;
      out.add_term(I & ~(BladeBits{1} << (j - 1)), s);
    }
  }
  return out;
}

Scalar gram_form(const Multivector& a, const Multivector& b) {
  if (a.space() != b.space()) throw MismatchedSpace("gram_form over different spaces");
  // On the orthogonal blade basis the Gram determinant collapses to
  // delta_IJ prod_{i in I} q_i.
  Scalar out;
  for (const auto& [I, ca] : a.terms()) {
    Scalar cb = b.coeff(I);
    if (cb.is_zero()) continue;
    Scalar g = Scalar::rational(1);
    for (int i : blades::indices(I)) g = g * a.space().form_value(i);
    out += ca * cb * g;
  }
  return out;
}

Multivector clifford_act_exterior(const Multivector& v, const Multivector& a) {
  return epsilon(v, a) - iota(v, a);
}

Multivector symbol(const Multivector& a) {
  if (a.algebra() != Algebra::clifford)
    throw MismatchedAlgebra("symbol expects a clifford-tagged element");
  Multivector out(a.space(), Algebra::exterior);
  for (const auto& [I, c] : a.terms()) {
    Multivector acc = Multivector::unit(a.space(), Algebra::exterior);
    std::vector<int> idx = blades::indices(I);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
      acc = clifford_act_exterior(Multivector::basis_vector(a.space(), *it, Algebra::exterior), acc);
    out = out + acc.scaled(c);
  }
  return out;
}

Multivector quantize(const Multivector& x) {
  if (x.algebra() != Algebra::exterior)
    throw MismatchedAlgebra("quantize expects an exterior-tagged element");
  return x.with_algebra(Algebra::clifford);
}

Multivector GradedDecomposition::sum() const {
  if (component.empty()) throw Error("empty graded decomposition");
  Multivector out = component[0];
  for (size_t k = 1; k < component.size(); ++k) out = out + component[k];
  return out;
}

GradedDecomposition grade_decompose(const Multivector& a) {
  Multivector sym = symbol(a);
  int n = a.space().dim();
  GradedDecomposition out;
  out.component.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Multivector part(a.space(), Algebra::exterior);
    for (const auto& [I, c] : sym.terms())
      if (blades::grade(I) == k) part.add_term(I, c);
    out.component.push_back(quantize(part));
  }
  return out;
}

Multivector grade_component(const Multivector& a, int k) {
  Multivector sym = symbol(a);
  Multivector part(a.space(), Algebra::exterior);
  for (const auto& [I, c] : sym.terms())
    if (blades::grade(I) == k) part.add_term(I, c);
  return quantize(part);
}

bool pure_z_grade(const Multivector& a, int k) {
  Multivector sym = symbol(a);
  for (const auto& [I, c] : sym.terms())
    if (blades::grade(I) != k) return false;
  return true;
}

}  // namespace cliffordkit
