#pragma once

#include <cstdint>
#include <random>

#include "cliffordkit/multivector.hpp"

namespace cliffordkit {

/// Seeded generator for property suites. Only the (fully specified)
/// mt19937_64 engine is used; numeric ranges are derived by modulo so that
/// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform-ish integer in [lo, hi]; bias is irrelevant for test data.
  long long pick(long long lo, long long hi) {
    return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Scalar rational(int max_abs_num = 9, int max_den = 9) {
    return Scalar::rational(pick(-max_abs_num, max_abs_num), pick(1, max_den));
  }

  Scalar gaussian_rational(int max_abs_num = 9, int max_den = 9) {
    return Scalar::gaussian(
        mpq_class(static_cast<long>(pick(-max_abs_num, max_abs_num)),
                  static_cast<long>(pick(1, max_den))),
        mpq_class(static_cast<long>(pick(-max_abs_num, max_abs_num)),
                  static_cast<long>(pick(1, max_den))));
  }

  Multivector vector(const QuadraticSpace& space, bool complex_coeffs = false,
                     Algebra alg = Algebra::clifford) {
    Multivector v(space, alg);
    for (int j = 1; j <= space.dim(); ++j)
      v.add_term(BladeBits{1} << (j - 1),
                 complex_coeffs ? gaussian_rational() : rational());
    return v;
  }

  Multivector multivector(const QuadraticSpace& space, int terms = 6,
                          bool complex_coeffs = false, Algebra alg = Algebra::clifford) {
    Multivector a(space, alg);
    BladeBits top = (BladeBits{1} << space.dim()) - 1;
    for (int t = 0; t < terms; ++t)
      a.add_term(static_cast<BladeBits>(next_u64()) & top,
                 complex_coeffs ? gaussian_rational() : rational());
    return a;
  }

  /// Random parity-homogeneous element (even when parity = 0, odd when 1).
  Multivector homogeneous(const QuadraticSpace& space, int parity, int terms = 6,
                          bool complex_coeffs = false) {
    Multivector a(space, Algebra::clifford);
    BladeBits top = (BladeBits{1} << space.dim()) - 1;
    int placed = 0;
    for (int guard = 0; placed < terms && guard < 64 * terms; ++guard) {
      BladeBits I = static_cast<BladeBits>(next_u64()) & top;
      if (blades::grade(I) % 2 != parity) continue;
      a.add_term(I, complex_coeffs ? gaussian_rational() : rational());
      ++placed;
    }
    return a;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cliffordkit
