#include "oracle.hpp"

#include <algorithm>

namespace cliffordkit::oracle {

WordSum word_from_multivector(const Multivector& a) {
  WordSum out{a.space(), {}};
  for (const auto& [I, c] : a.terms()) out.words.emplace_back(c, blades::indices(I));
  return out;
}

WordSum word_concat(const WordSum& a, const WordSum& b) {
  WordSum out{a.space, {}};
  for (const auto& [ca, wa] : a.words) {
    for (const auto& [cb, wb] : b.words) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.words.emplace_back(ca * cb, std::move(w));
    }
  }
  return out;
}

Multivector word_normalize(const WordSum& a) {
  Multivector out(a.space, Algebra::clifford);
  for (const auto& [c0, w0] : a.words) {
    Scalar c = c0;
    std::vector<int> w = w0;
    // Bubble toward sorted order; adjacent equal generators square out.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          c = c * (-a.space.form_value(w[i]));
          w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
        if (w[i] > w[i + 1]) {
          std::swap(w[i], w[i + 1]);
          c = -c;
          changed = true;
          break;
        }
      }
    }
    out.add_term(blades::from_indices(w), c);
  }
  return out;
}

std::pair<Scalar, BladeBits> blade_product_oracle(const QuadraticSpace& space,
                                                  BladeBits I, BladeBits J) {
  WordSum a{space, {{Scalar::rational(1), blades::indices(I)}}};
  WordSum b{space, {{Scalar::rational(1), blades::indices(J)}}};
  Multivector p = word_normalize(word_concat(a, b));
  if (p.is_zero()) return {Scalar(), 0};
  if (p.terms().size() != 1)
    throw Error("word oracle produced a non-blade product");
  auto it = p.terms().begin();
  return {it->second, it->first};
}

Multivector multiply_oracle(const Multivector& a, const Multivector& b) {
  return word_normalize(word_concat(word_from_multivector(a), word_from_multivector(b)));
}

Multivector quantize_permutation_oracle(const std::vector<Multivector>& vectors) {
  if (vectors.empty()) throw Error("need at least one vector");
  const QuadraticSpace& space = vectors[0].space();
  std::vector<size_t> perm(vectors.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Multivector acc(space, Algebra::clifford);
  long fact = 1;
  for (size_t i = 2; i <= vectors.size(); ++i) fact *= static_cast<long>(i);
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    WordSum prod = word_from_multivector(vectors[perm[0]]);
    for (size_t i = 1; i < perm.size(); ++i)
      prod = word_concat(prod, word_from_multivector(vectors[perm[i]]));
    Multivector term = word_normalize(prod);
    acc = acc + (inversions % 2 == 0 ? term : -term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.scaled(Scalar::rational(1, fact));
}

Scalar laplace_determinant(const std::vector<std::vector<Scalar>>& m) {
  size_t n = m.size();
  if (n == 0) return Scalar::rational(1);
  if (n == 1) return m[0][0];
  Scalar det;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Scalar>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][j] * laplace_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace cliffordkit::oracle
