#include "cliffordkit/spinor.hpp"

#include <algorithm>
#include <bit>

#include "cliffordkit/errors.hpp"
#include "cliffordkit/exterior.hpp"

namespace cliffordkit {

namespace {

// Sign of inserting polarized index k into the sorted subset P from the left.
int insert_sign(BladeBits P, int k) {
  int below = std::popcount(P & ((BladeBits{1} << (k - 1)) - 1));
  return below % 2 == 0 ? 1 : -1;
}

}  // namespace

QuadraticSpace SpinorContext::orthonormal_space() const {
  return QuadraticSpace::euclidean(n);
}

SpinorContext complexify(const QuadraticSpace& space) {
  SpinorContext ctx;
  ctx.base = space;
  ctx.n = space.dim();
  if (ctx.n % 2 != 0)
    throw OddDimension("polarization requires an even dimension");
  if (!space.nondegenerate())
    throw DegenerateForm("polarization requires a nondegenerate form");
  ctx.m = ctx.n / 2;
  ctx.dim = 1 << ctx.m;
  ctx.rescaled.resize(static_cast<size_t>(ctx.n));
  const Scalar one = Scalar::rational(1), minus_one = Scalar::rational(-1);
  for (int j = 1; j <= ctx.n; ++j) {
    const Scalar& qj = space.form_value(j);
    if (qj == one)
      ctx.rescaled[static_cast<size_t>(j - 1)] = false;
    else if (qj == minus_one)
      ctx.rescaled[static_cast<size_t>(j - 1)] = true;
    else
      throw WrongSignature("form value " + qj.str() +
                           " is not +-1; rescaling by i cannot normalize it");
  }

  ctx.basis = blades::all_graded_lex(ctx.m);
  ctx.basis_index.assign(static_cast<size_t>(ctx.dim), -1);
  for (int p = 0; p < ctx.dim; ++p)
    ctx.basis_index[ctx.basis[static_cast<size_t>(p)]] = p;
  ctx.spinor_parity.resize(static_cast<size_t>(ctx.dim));
  for (int p = 0; p < ctx.dim; ++p)
    ctx.spinor_parity[static_cast<size_t>(p)] =
        blades::grade(ctx.basis[static_cast<size_t>(p)]) % 2;

  // Wedge and contraction on the spinor blade basis; the sqrt(2)
  // normalizations cancel in c(f_{2k-1}) = eps_k - io_k and
  // c(f_{2k}) = -i (eps_k + io_k).
  auto eps = [&](int k) {
    OperatorMatrix m(ctx.dim, ctx.dim);
    for (int p = 0; p < ctx.dim; ++p) {
      BladeBits P = ctx.basis[static_cast<size_t>(p)];
      if (blades::contains(P, k)) continue;
      BladeBits Q = P | (BladeBits{1} << (k - 1));
      int row = ctx.basis_index[Q];
      m.at(row, p) = Scalar::rational(insert_sign(P, k));
    }
    return m;
  };
  auto io = [&](int k) {
    OperatorMatrix m(ctx.dim, ctx.dim);
    for (int p = 0; p < ctx.dim; ++p) {
      BladeBits P = ctx.basis[static_cast<size_t>(p)];
      if (!blades::contains(P, k)) continue;
      BladeBits Q = P & ~(BladeBits{1} << (k - 1));
      int row = ctx.basis_index[Q];
      m.at(row, p) = Scalar::rational(insert_sign(Q, k));
    }
    return m;
  };

  const Scalar minus_i = Scalar::gaussian(0, -1);
  ctx.c_f.reserve(static_cast<size_t>(ctx.n));
  for (int k = 1; k <= ctx.m; ++k) {
    OperatorMatrix e = eps(k), i = io(k);
    ctx.c_f.push_back(e - i);
    ctx.c_f.push_back((e + i).scaled(minus_i));
  }
  ctx.c_e.reserve(static_cast<size_t>(ctx.n));
  for (int j = 1; j <= ctx.n; ++j) {
    const OperatorMatrix& cf = ctx.c_f[static_cast<size_t>(j - 1)];
    // e_j = -i f_j for rescaled generators.
    ctx.c_e.push_back(ctx.rescaled[static_cast<size_t>(j - 1)] ? cf.scaled(minus_i) : cf);
  }

  ctx.chirality_perm.reserve(static_cast<size_t>(ctx.dim));
  for (int p = 0; p < ctx.dim; ++p)
    if (ctx.spinor_parity[static_cast<size_t>(p)] == 0) ctx.chirality_perm.push_back(p);
  for (int p = 0; p < ctx.dim; ++p)
    if (ctx.spinor_parity[static_cast<size_t>(p)] == 1) ctx.chirality_perm.push_back(p);
  return ctx;
}

const OperatorMatrix& clifford_action_matrix(const SpinorContext& ctx, int j) {
  if (j < 1 || j > ctx.n)
    throw IndexOutOfRange("generator index " + std::to_string(j));
  return ctx.c_f[static_cast<size_t>(j - 1)];
}

OperatorMatrix polarize_pairing(const SpinorContext& ctx) {
  // (f_k^-, f_l^+) with the complex-bilinear form; entries are rational
  // because the 1/sqrt(2) normalizations multiply to 1/2.
  OperatorMatrix out(ctx.m, ctx.m);
  const Scalar half = Scalar::rational(1, 2);
  const Scalar i = Scalar::imaginary_unit();
  for (int k = 1; k <= ctx.m; ++k) {
    for (int l = 1; l <= ctx.m; ++l) {
      // (f_{2k-1} - i f_{2k}, f_{2l-1} + i f_{2l}) over delta_jk
      Scalar v;
      if (k == l) v = Scalar::rational(1) - i * i;  // 1 + 1
      out.at(k - 1, l - 1) = half * v;
    }
  }
  return out;
}

std::pair<Scalar, Scalar> polarization_identity(const SpinorContext& ctx,
                                                const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != ctx.n)
    throw DimensionMismatch("coordinate count != dimension");
  const Scalar half = Scalar::rational(1, 2);
  const Scalar i = Scalar::imaginary_unit();
  // w_{+-} = 1/2 sum_k (x^{2k-1} -+ i x^{2k}) (f_{2k-1} +- i f_{2k});
  // (w_-, w_+) = 1/2 sum_k (x^{2k-1} + i x^{2k})(x^{2k-1} - i x^{2k}).
  Scalar pairing, q;
  for (int k = 1; k <= ctx.m; ++k) {
    const Scalar& xo = coords[static_cast<size_t>(2 * k - 2)];
    const Scalar& xe = coords[static_cast<size_t>(2 * k - 1)];
    pairing += half * (xo + i * xe) * (xo - i * xe);
  }
  for (int j = 0; j < ctx.n; ++j) q += coords[static_cast<size_t>(j)] * coords[static_cast<size_t>(j)];
  return {pairing, half * q};
}

Multivector chirality_product_form(const SpinorContext& ctx) {
  Multivector out = Multivector::unit(ctx.orthonormal_space());
  for (int k = 1; k <= ctx.m; ++k) out = out * polarization_number_element(ctx, k);
  return out;
}

Multivector polarization_number_element(const SpinorContext& ctx, int k) {
  if (k < 1 || k > ctx.m) throw IndexOutOfRange("pair index " + std::to_string(k));
  QuadraticSpace ortho = ctx.orthonormal_space();
  BladeBits pair = (BladeBits{3} << (2 * k - 2));  // f_{2k-1} f_{2k}
  return Multivector::blade(ortho, pair, Scalar::imaginary_unit());
}

std::pair<Multivector, OperatorMatrix> chirality(const SpinorContext& ctx) {
  QuadraticSpace ortho = ctx.orthonormal_space();
  // i^(n/2) f_1 f_2 ... f_n
  Scalar phase = Scalar::rational(1);
  const Scalar i = Scalar::imaginary_unit();
  for (int k = 0; k < ctx.m; ++k) phase = phase * i;
  Multivector gamma = Multivector::blade(ortho, (BladeBits{1} << ctx.n) - 1, phase);
  OperatorMatrix m(ctx.dim, ctx.dim);
  for (int p = 0; p < ctx.dim; ++p)
    m.at(p, p) = Scalar::rational(ctx.spinor_parity[static_cast<size_t>(p)] == 0 ? 1 : -1);
  return {gamma, m};
}

Multivector chirality_with_order(const SpinorContext& ctx, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != ctx.n)
    throw DimensionMismatch("order must list every generator once");
  QuadraticSpace ortho = ctx.orthonormal_space();
  Scalar phase = Scalar::rational(1);
  const Scalar i = Scalar::imaginary_unit();
  for (int k = 0; k < ctx.m; ++k) phase = phase * i;
  Multivector out = Multivector::scalar(ortho, phase);
  for (int j : order) out = out * Multivector::basis_vector(ortho, j);
  return out;
}

Scalar hermitian_form(const SpinorContext& ctx, const std::vector<Scalar>& x,
                      const std::vector<Scalar>& y) {
  if (x.size() != y.size() || static_cast<int>(x.size()) != ctx.dim)
    throw DimensionMismatch("spinor coordinate count != 2^(n/2)");
  Scalar out;
  for (size_t p = 0; p < x.size(); ++p) out += x[p].conj() * y[p];
  return out;
}

OperatorMatrix op_adjoint(const SpinorContext& ctx, const OperatorMatrix& a) {
  (void)ctx;  // the spinor blade basis is orthonormal for <,>
  return a.conjugate_transpose();
}

Multivector conjugate_element(const SpinorContext& ctx, const Multivector& a) {
  Multivector out(a.space(), a.algebra());
  for (const auto& [I, c] : a.terms()) {
    int flips = 0;
    if (a.space() == ctx.base) {
      for (int j : blades::indices(I))
        if (ctx.rescaled[static_cast<size_t>(j - 1)]) ++flips;
    }
    // Over the orthonormal space the basis is conjugation-fixed.
    Scalar cc = c.conj();
    out.add_term(I, flips % 2 == 0 ? cc : -cc);
  }
  return out;
}

Multivector star_element(const SpinorContext& ctx, const Multivector& a) {
  return conjugate_element(ctx, star(a.with_algebra(Algebra::clifford)))
      .with_algebra(a.algebra());
}

namespace {

OperatorMatrix act_impl(const std::vector<OperatorMatrix>& gens, int dim,
                        const Multivector& a) {
  OperatorMatrix out(dim, dim);
  for (const auto& [I, c] : a.terms()) {
    OperatorMatrix blade_m = OperatorMatrix::identity(dim);
    for (int j : blades::indices(I)) blade_m = blade_m * gens[static_cast<size_t>(j - 1)];
    out = out + blade_m.scaled(c);
  }
  return out;
}

}  // namespace

OperatorMatrix act(const SpinorContext& ctx, const Multivector& a) {
  if (a.space() == ctx.base) return act_impl(ctx.c_e, ctx.dim, a);
  if (a.space() == ctx.orthonormal_space()) return act_impl(ctx.c_f, ctx.dim, a);
  throw MismatchedSpace("element lives neither in the base nor the orthonormal space");
}

OperatorMatrix act(const TwistedModule& mod, const Multivector& a) {
  if (a.space() == mod.ctx.base) return act_impl(mod.c_e, mod.dim, a);
  if (a.space() == mod.ctx.orthonormal_space()) return act_impl(mod.c_f, mod.dim, a);
  throw MismatchedSpace("element lives neither in the base nor the orthonormal space");
}

Parity matrix_parity(const OperatorMatrix& m, const std::vector<int>& basis_parity) {
  bool has_even = false, has_odd = false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (basis_parity[static_cast<size_t>(i)] == basis_parity[static_cast<size_t>(j)])
        has_even = true;
      else
        has_odd = true;
    }
  }
  if (has_even && has_odd) return Parity::mixed;
  if (has_odd) return Parity::odd;
  return Parity::even;
}

std::pair<OperatorMatrix, OperatorMatrix> matrix_parity_split(
    const OperatorMatrix& m, const std::vector<int>& basis_parity) {
  OperatorMatrix even(m.rows(), m.cols()), odd(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (basis_parity[static_cast<size_t>(i)] == basis_parity[static_cast<size_t>(j)])
        even.at(i, j) = m.at(i, j);
      else
        odd.at(i, j) = m.at(i, j);
    }
  return {even, odd};
}

OperatorMatrix matrix_supercommutator(const OperatorMatrix& a, const OperatorMatrix& b,
                                      const std::vector<int>& basis_parity) {
  auto [ae, ao] = matrix_parity_split(a, basis_parity);
  auto [be, bo] = matrix_parity_split(b, basis_parity);
  OperatorMatrix out = ao * bo + bo * ao;
  out = out + (ae * be - be * ae);
  out = out + (ae * bo - bo * ae);
  out = out + (ao * be - be * ao);
  return out;
}

GammaBundle gamma_matrices(const SpinorContext& ctx) {
  QuadraticSpace expected = QuadraticSpace::lorentzian(4);
  if (ctx.base != expected)
    throw WrongSignature("gamma matrices require the signature (+,-,-,-)");

  GammaBundle out;
  const Scalar i = Scalar::imaginary_unit();
  for (int mu = 0; mu < 4; ++mu)
    out.gamma[static_cast<size_t>(mu)] = ctx.c_e[static_cast<size_t>(mu)].scaled(i);
  out.gamma5 = chirality(ctx).second;
  out.chirality_perm = ctx.chirality_perm;

  // Basis change, in the chirality-sorted basis, to the standard Pauli block
  // form: block-diagonal diag(U, W) with W = U * A0, where A0 is the upper
  // block of gamma^0. U = [[1,1],[-1,1]] realizes the required rotation of
  // the Pauli frame with Gaussian-rational entries.
  int d = ctx.dim;
  int h = d / 2;
  OperatorMatrix u(h, h);
  if (h == 2) {
    u.at(0, 0) = Scalar::rational(1);
    u.at(0, 1) = Scalar::rational(1);
    u.at(1, 0) = Scalar::rational(-1);
    u.at(1, 1) = Scalar::rational(1);
  } else {
    u = OperatorMatrix::identity(h);
  }
  // gamma^0 in the sorted basis, upper-right block A0.
  OperatorMatrix g0(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      g0.at(r, c) = out.gamma[0].at(ctx.chirality_perm[static_cast<size_t>(r)],
                                    ctx.chirality_perm[static_cast<size_t>(c)]);
  OperatorMatrix a0(h, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c) a0.at(r, c) = g0.at(r, h + c);
  OperatorMatrix w = u * a0;
  OperatorMatrix change(d, d);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c) {
      change.at(r, c) = u.at(r, c);
      change.at(h + r, h + c) = w.at(r, c);
    }
  out.block_change = change;
  out.block_change_inv = invert_exact(change);
  return out;
}

OperatorMatrix sigma_tensor(const SpinorContext& ctx, const std::vector<int>& indices) {
  for (size_t a = 0; a < indices.size(); ++a)
    for (size_t b = a + 1; b < indices.size(); ++b)
      if (indices[a] == indices[b])
        throw RepeatedIndex("sigma tensor indices must be distinct");
  Multivector wedge = Multivector::unit(ctx.base, Algebra::exterior);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    wedge = epsilon(Multivector::basis_vector(ctx.base, *it, Algebra::exterior), wedge);
  return act(ctx, quantize(wedge));
}

TwistedModule build_twisted(const SpinorContext& ctx, int d_w,
                            std::optional<std::pair<int, int>> grading) {
  if (d_w < 1) throw BadGrading("twisting dimension must be >= 1");
  if (grading && (grading->first < 0 || grading->second < 0 ||
                  grading->first + grading->second != d_w))
    throw BadGrading("graded split must satisfy d+ + d- = d_W");
  TwistedModule mod;
  mod.ctx = ctx;
  mod.d_w = d_w;
  mod.w_grading = grading;
  mod.dim = d_w * ctx.dim;
  mod.parity.resize(static_cast<size_t>(mod.dim));
  for (int a = 0; a < d_w; ++a) {
    int wp = (grading && a >= grading->first) ? 1 : 0;
    for (int p = 0; p < ctx.dim; ++p)
      mod.parity[static_cast<size_t>(a * ctx.dim + p)] =
          (wp + ctx.spinor_parity[static_cast<size_t>(p)]) % 2;
  }
  OperatorMatrix iw = OperatorMatrix::identity(d_w);
  for (const OperatorMatrix& cf : ctx.c_f) mod.c_f.push_back(kron(iw, cf));
  for (const OperatorMatrix& ce : ctx.c_e) mod.c_e.push_back(kron(iw, ce));
  return mod;
}

bool end_s_dimension_check(const SpinorContext& ctx) {
  int total = 1 << ctx.n;
  OperatorMatrix flat(total, ctx.dim * ctx.dim);
  QuadraticSpace base = ctx.base;
  int row = 0;
  for (BladeBits I = 0; I < static_cast<BladeBits>(total); ++I, ++row) {
    OperatorMatrix m = act(ctx, Multivector::blade(base, I, Scalar::rational(1)));
    int k = 0;
    for (int r = 0; r < ctx.dim; ++r)
      for (int c = 0; c < ctx.dim; ++c) flat.at(row, k++) = m.at(r, c);
  }
  return exact_rank(flat) == total;
}

}  // namespace cliffordkit
