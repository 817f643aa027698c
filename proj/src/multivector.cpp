#include "cliffordkit/multivector.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cliffordkit/errors.hpp"

namespace cliffordkit {

// ---------------------------------------------------------------------------
// QuadraticSpace

const Scalar& QuadraticSpace::form_value(int i) const {
  if (i < 1 || i > dim())
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " out of range for dimension " + std::to_string(dim()));
  return q[static_cast<size_t>(i - 1)];
}

bool QuadraticSpace::nondegenerate() const {
  for (const Scalar& v : q)
    if (v.is_zero()) return false;
  return true;
}

QuadraticSpace QuadraticSpace::euclidean(int n) {
  return with_values(std::vector<Scalar>(static_cast<size_t>(n), Scalar::rational(1)));
}

QuadraticSpace QuadraticSpace::lorentzian(int n) {
  std::vector<Scalar> v(static_cast<size_t>(n), Scalar::rational(-1));
  v.at(0) = Scalar::rational(1);
  return with_values(std::move(v));
}

QuadraticSpace QuadraticSpace::with_values(std::vector<Scalar> values) {
  if (values.empty())
    throw IndexOutOfRange("quadratic space must have positive dimension");
  for (const Scalar& v : values)
    if (!v.is_exact())
      throw Error("quadratic form values must be exact scalars");
  return QuadraticSpace{std::move(values)};
}

std::string QuadraticSpace::describe() const {
  std::string out = "q:";
  for (int i = 0; i < dim(); ++i) {
    if (i) out += ",";
    out += q[static_cast<size_t>(i)].str();
  }
  return out;
}

QuadraticSpace parse_signature(const std::string& spec) {
  if (spec.size() < 3 || spec[1] != ':')
    throw Error("bad signature spec '" + spec + "' (want s:+--0 or q:1,-1)");
  std::vector<Scalar> values;
  if (spec[0] == 's') {
    for (size_t i = 2; i < spec.size(); ++i) {
      switch (spec[i]) {
        case '+': values.push_back(Scalar::rational(1)); break;
        case '-': values.push_back(Scalar::rational(-1)); break;
        case '0': values.push_back(Scalar::rational(0)); break;
        default:
          throw Error("bad signature character '" + std::string(1, spec[i]) +
                      "' in '" + spec + "'");
      }
    }
  } else if (spec[0] == 'q') {
    std::stringstream ss(spec.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ','))
      values.push_back(Scalar::parse_rational(tok));
  } else {
    throw Error("bad signature spec '" + spec + "'");
  }
  if (values.empty()) throw Error("empty signature spec '" + spec + "'");
  if (values.size() > 24) throw DimensionTooLarge("signature dimension > 24");
  return QuadraticSpace::with_values(std::move(values));
}

// ---------------------------------------------------------------------------
// Blade helpers

namespace blades {

int grade(BladeBits I) { return std::popcount(I); }

bool contains(BladeBits I, int j) {
  return (I >> (j - 1)) & 1u;
}

BladeBits from_indices(const std::vector<int>& idx) {
  BladeBits I = 0;
  for (int j : idx) {
    if (j < 1 || j > 24) throw IndexOutOfRange("blade index out of range");
    I |= BladeBits{1} << (j - 1);
  }
  return I;
}

std::vector<int> indices(BladeBits I) {
  std::vector<int> out;
  for (int j = 1; I != 0; ++j, I >>= 1)
    if (I & 1u) out.push_back(j);
  return out;
}

std::string str(BladeBits I) {
  if (I == 0) return "1";
  std::string s = "e{";
  bool first = true;
  for (int j : indices(I)) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  return s + "}";
}

bool graded_lex_less(BladeBits a, BladeBits b) {
  int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  // Same grade: lexicographic on ascending index tuples. Comparing from the
  // lowest set bit, the blade whose first differing generator is smaller
  // comes first; on bitsets this is lowest-set-bit-first comparison.
  while (a != 0 && b != 0) {
    BladeBits la = a & (~a + 1), lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return false;  // equal
}

std::vector<BladeBits> all_graded_lex(int n) {
  std::vector<BladeBits> out;
  out.reserve(size_t{1} << n);
  for (BladeBits I = 0; I < (BladeBits{1} << n); ++I) out.push_back(I);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace blades

// ---------------------------------------------------------------------------
// Multivector

Multivector Multivector::zero(const QuadraticSpace& s, Algebra a) {
  return Multivector(s, a);
}

Multivector Multivector::unit(const QuadraticSpace& s, Algebra a) {
  return blade(s, 0, Scalar::rational(1), a);
}

Multivector Multivector::scalar(const QuadraticSpace& s, const Scalar& c, Algebra a) {
  return blade(s, 0, c, a);
}

Multivector Multivector::basis_vector(const QuadraticSpace& s, int j, Algebra a) {
  if (j < 1 || j > s.dim())
    throw IndexOutOfRange("basis vector index " + std::to_string(j));
  return blade(s, BladeBits{1} << (j - 1), Scalar::rational(1), a);
}

Multivector Multivector::blade(const QuadraticSpace& s, BladeBits I, const Scalar& c,
                               Algebra a) {
  Multivector m(s, a);
  m.add_term(I, c);
  return m;
}

Scalar Multivector::coeff(BladeBits I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Scalar() : it->second;
}

void Multivector::add_term(BladeBits I, const Scalar& c) {
  if (space_.dim() < 32 && (I >> space_.dim()) != 0)
    throw IndexOutOfRange("blade " + blades::str(I) + " outside dimension " +
                          std::to_string(space_.dim()));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(I, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Multivector::pure_grade(int k) const {
  for (const auto& [I, c] : terms_)
    if (blades::grade(I) != k) return false;
  return true;
}

std::vector<Scalar> Multivector::vector_coords() const {
  if (!is_vector()) throw NotAVector("expected a pure 1-vector: " + str());
  std::vector<Scalar> out(static_cast<size_t>(space_.dim()));
  for (const auto& [I, c] : terms_)
    out[static_cast<size_t>(blades::indices(I)[0] - 1)] = c;
  return out;
}

int Multivector::parity() const {
  int p = -1;
  for (const auto& [I, c] : terms_) {
    int bp = blades::grade(I) & 1;
    if (p == -1)
      p = bp;
    else if (p != bp)
      return -1;
  }
  return p;
}

Multivector Multivector::with_algebra(Algebra a) const {
  Multivector out(space_, a);
  out.terms_ = terms_;
  return out;
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (space_ != o.space_) throw MismatchedSpace("adding multivectors over different spaces");
  if (algebra_ != o.algebra_) throw MismatchedAlgebra("adding multivectors with different product rules");
  Multivector out = *this;
  for (const auto& [I, c] : o.terms_) out.add_term(I, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
  return *this + (-o);
}

Multivector Multivector::operator-() const {
  Multivector out(space_, algebra_);
  for (const auto& [I, c] : terms_) out.terms_.emplace(I, -c);
  return out;
}

Multivector Multivector::scaled(const Scalar& c) const {
  Multivector out(space_, algebra_);
  if (c.is_zero()) return out;
  for (const auto& [I, t] : terms_) out.add_term(I, t * c);
  return out;
}

bool Multivector::operator==(const Multivector& o) const {
  return space_ == o.space_ && algebra_ == o.algebra_ && terms_ == o.terms_;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::vector<BladeBits> keys;
  keys.reserve(terms_.size());
  for (const auto& [I, c] : terms_) keys.push_back(I);
  std::sort(keys.begin(), keys.end(), blades::graded_lex_less);
  std::string out;
  const char* glue = algebra_ == Algebra::exterior ? "^" : " ";
  for (BladeBits I : keys) {
    if (!out.empty()) out += " + ";
    std::string c = coeff(I).str();
    if (I == 0) {
      out += c;
    } else if (c == "1") {
      out += blades::str(I);
    } else {
      out += "(" + c + ")" + glue + blades::str(I);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

// Number of generator transpositions needed to merge the sorted word of J
// into the sorted word of I: for each j in J, the set bits of I above j.
int swap_count(BladeBits I, BladeBits J) {
  int swaps = 0;
  for (int j = 1; J != 0; ++j, J >>= 1) {
    if (J & 1u) swaps += std::popcount(I >> j);  // bits of I strictly above j
  }
  return swaps;
}

}  // namespace

std::pair<Scalar, BladeBits> blade_product(const QuadraticSpace& space,
                                           BladeBits I, BladeBits J) {
  Scalar coeff = Scalar::rational(swap_count(I, J) % 2 == 0 ? 1 : -1);
  BladeBits both = I & J;
  for (int j = 1; both != 0; ++j, both >>= 1) {
    if (both & 1u) coeff = coeff * (-space.form_value(j));
  }
  return {coeff, I ^ J};
}

std::pair<Scalar, BladeBits> blade_product_exterior(BladeBits I, BladeBits J) {
  if ((I & J) != 0) return {Scalar(), 0};
  return {Scalar::rational(swap_count(I, J) % 2 == 0 ? 1 : -1), I ^ J};
}

Multivector mv_multiply(const Multivector& a, const Multivector& b) {
  if (a.space() != b.space())
    throw MismatchedSpace("multiplying multivectors over different spaces");
  if (a.algebra() != b.algebra())
    throw MismatchedAlgebra("multiplying clifford by exterior multivector");
  Multivector out(a.space(), a.algebra());
  const bool exterior = a.algebra() == Algebra::exterior;
  for (const auto& [I, ca] : a.terms()) {
    for (const auto& [J, cb] : b.terms()) {
      auto [s, K] = exterior ? blade_product_exterior(I, J)
                             : blade_product(a.space(), I, J);
      if (s.is_zero()) continue;
      out.add_term(K, ca * cb * s);
    }
  }
  return out;
}

Multivector star(const Multivector& a) {
  if (a.algebra() != Algebra::clifford)
    throw MismatchedAlgebra("star is defined on the clifford algebra");
  Multivector out(a.space(), a.algebra());
  for (const auto& [I, c] : a.terms()) {
    int k = blades::grade(I);
    bool flip = ((k * (k + 1)) / 2) % 2 != 0;
    Scalar cc = c.conj();
    out.add_term(I, flip ? -cc : cc);
  }
  return out;
}

std::pair<Multivector, Multivector> parity_split(const Multivector& a) {
  Multivector even(a.space(), a.algebra()), odd(a.space(), a.algebra());
  for (const auto& [I, c] : a.terms())
    (blades::grade(I) % 2 == 0 ? even : odd).add_term(I, c);
  return {even, odd};
}

std::pair<long long, long long> dimension_census(const QuadraticSpace& space) {
  int n = space.dim();
  if (n > 24) throw DimensionTooLarge("census limited to dimension 24");
  long long even = 0, odd = 0;
  for (BladeBits I = 0; I < (BladeBits{1} << n); ++I)
    (blades::grade(I) % 2 == 0 ? even : odd) += 1;
  return {even, odd};
}

Scalar quadratic_form(const QuadraticSpace& space, const Multivector& v) {
  std::vector<Scalar> x = v.vector_coords();
  Scalar out;
  for (int i = 1; i <= space.dim(); ++i) {
    const Scalar& xi = x[static_cast<size_t>(i - 1)];
    out += space.form_value(i) * xi * xi;
  }
  return out;
}

Scalar bilinear_form(const QuadraticSpace& space, const Multivector& v,
                     const Multivector& w) {
  std::vector<Scalar> x = v.vector_coords(), y = w.vector_coords();
  Scalar out;
  for (int i = 1; i <= space.dim(); ++i)
    out += space.form_value(i) * x[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(i - 1)];
  return out;
}

}  // namespace cliffordkit
