#include "cliffordkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "cliffordkit/endo.hpp"
#include "cliffordkit/errors.hpp"
#include "cliffordkit/exterior.hpp"
#include "cliffordkit/rng.hpp"
#include "cliffordkit/spin.hpp"
#include "cliffordkit/spinor.hpp"

namespace cliffordkit {

int VerifyReport::total_failures() const {
  int n = 0;
  for (const VerifyCheck& c : checks) n += c.failures;
  return n;
}

namespace {

class SuiteRunner {
 public:
  SuiteRunner(VerifyReport* report, const VerifyOptions& options)
      : report_(report), options_(options) {}

  VerifyCheck& check(const std::string& name, const std::string& anchor) {
    report_->checks.push_back(VerifyCheck{name, anchor, 0, 0, {}});
    return report_->checks.back();
  }

  void record(VerifyCheck& c, bool ok, const std::function<VerifyFailure()>& detail) {
    ++c.cases;
    if (ok) return;
    ++c.failures;
    if (c.samples.size() < 3) c.samples.push_back(detail());
  }

  // Product wrapper carrying the fault hook: with Fault::sign_table the
  // blade pair ({1},{2}) is given the wrong sign.
  Multivector product(const Multivector& a, const Multivector& b) const {
    Multivector out = mv_multiply(a, b);
    if (options_.fault == Fault::sign_table) {
      Scalar a1 = a.coeff(1), b2 = b.coeff(2);
      if (!a1.is_zero() && !b2.is_zero()) {
        auto [s, K] = blade_product(a.space(), 1, 2);
        out.add_term(K, Scalar::rational(-2) * a1 * b2 * s);
      }
    }
    return out;
  }

  int trials() const { return options_.trials; }

 private:
  VerifyReport* report_;
  VerifyOptions options_;
};

std::string pair_str(const Multivector& a, const Multivector& b) {
  return "a = " + a.str() + "; b = " + b.str();
}

void run_core(SuiteRunner& r, Rng& rng, const QuadraticSpace& space) {
  VerifyCheck& relation = r.check("clifford-relation", "Eq. 1");
  VerifyCheck& anticomm = r.check("clifford-anticommutation", "Eq. 3");
  VerifyCheck& star_inv = r.check("star-involution", "Sec. 3");
  VerifyCheck& star_anti = r.check("star-antihomomorphism", "Sec. 3");
  VerifyCheck& star_grade = r.check("star-grade-law", "Sec. 4");
  VerifyCheck& parity_tab = r.check("parity-table", "Sec. 2");
  VerifyCheck& wedge_super = r.check("exterior-supercommutativity", "Sec. 2");

  for (int t = 0; t < r.trials(); ++t) {
    Multivector v = rng.vector(space), w = rng.vector(space);
    Multivector vv = r.product(v, v);
    Multivector rhs = Multivector::scalar(space, -quadratic_form(space, v));
    r.record(relation, vv == rhs, [&] {
      return VerifyFailure{"v = " + v.str(), vv.str(), rhs.str()};
    });

    Multivector lhs = r.product(v, w) + r.product(w, v) +
                      Multivector::scalar(space, Scalar::rational(2) * bilinear_form(space, v, w));
    r.record(anticomm, lhs.is_zero(), [&] {
      return VerifyFailure{pair_str(v, w), lhs.str(), "0"};
    });

    Multivector a = rng.multivector(space), b = rng.multivector(space);
    r.record(star_inv, star(star(a)) == a, [&] {
      return VerifyFailure{"a = " + a.str(), star(star(a)).str(), a.str()};
    });
    Multivector sab = star(r.product(a, b));
    Multivector sba = r.product(star(b), star(a));
    r.record(star_anti, sab == sba, [&] {
      return VerifyFailure{pair_str(a, b), sab.str(), sba.str()};
    });

    auto [ae, ao] = parity_split(a);
    auto [be, bo] = parity_split(b);
    bool tab_ok = parity_split(ae * be).second.is_zero() &&
                  parity_split(ao * bo).second.is_zero() &&
                  parity_split(ae * bo).first.is_zero() &&
                  parity_split(ao * be).first.is_zero();
    r.record(parity_tab, tab_ok, [&] {
      return VerifyFailure{pair_str(a, b), "parity table violated", ""};
    });

    BladeBits top = (BladeBits{1} << space.dim()) - 1;
    BladeBits I = static_cast<BladeBits>(rng.next_u64()) & top;
    BladeBits J = static_cast<BladeBits>(rng.next_u64()) & top;
    Multivector bi = Multivector::blade(space, I, Scalar::rational(1), Algebra::exterior);
    Multivector bj = Multivector::blade(space, J, Scalar::rational(1), Algebra::exterior);
    Multivector wedge_ab = bi * bj;
    Multivector wedge_ba = bj * bi;
    bool sign = (blades::grade(I) * blades::grade(J)) % 2 == 1;
    r.record(wedge_super, wedge_ab == (sign ? -wedge_ba : wedge_ba), [&] {
      return VerifyFailure{blades::str(I) + ", " + blades::str(J), wedge_ab.str(),
                           wedge_ba.str()};
    });
  }

  for (int k = 0; k <= space.dim(); ++k) {
    for (BladeBits I = 0; I < (BladeBits{1} << space.dim()); ++I) {
      if (blades::grade(I) != k) continue;
      Multivector e = Multivector::blade(space, I, Scalar::rational(1));
      bool flip = ((k * (k + 1)) / 2) % 2 != 0;
      Multivector expect = flip ? -e : e;
      r.record(star_grade, star(e) == expect, [&] {
        return VerifyFailure{blades::str(I), star(e).str(), expect.str()};
      });
    }
  }
}

void run_car(SuiteRunner& r, Rng& rng, const QuadraticSpace& space) {
  VerifyCheck& car = r.check("canonical-anticommutation", "Eq. 7");
  VerifyCheck& adj = r.check("epsilon-iota-adjointness", "Sec. 4");
  VerifyCheck& clifford_map = r.check("exterior-clifford-map", "Eq. 2");
  VerifyCheck& round = r.check("symbol-quantize-roundtrip", "Sec. 4");
  VerifyCheck& grading = r.check("grading-consistency", "Sec. 4");

  for (int t = 0; t < r.trials(); ++t) {
    Multivector u = rng.vector(space, false, Algebra::exterior);
    Multivector v = rng.vector(space, false, Algebra::exterior);
    Multivector a = rng.multivector(space, 6, false, Algebra::exterior);
    Multivector lhs = iota(u, epsilon(v, a)) + epsilon(v, iota(u, a));
    Multivector rhs = a.scaled(bilinear_form(space, u, v));
    bool ok = lhs == rhs && iota(u, iota(v, a)) == -iota(v, iota(u, a)) &&
              epsilon(u, epsilon(v, a)) == -epsilon(v, epsilon(u, a));
    r.record(car, ok, [&] {
      return VerifyFailure{pair_str(u, v) + "; x = " + a.str(), lhs.str(), rhs.str()};
    });

    Multivector b = rng.multivector(space, 6, false, Algebra::exterior);
    Scalar left = gram_form(epsilon(v, a), b);
    Scalar right = gram_form(a, iota(v, b));
    r.record(adj, left == right, [&] {
      return VerifyFailure{"v = " + v.str(), left.str(), right.str()};
    });

    Multivector cv = clifford_act_exterior(v, clifford_act_exterior(v, a));
    Multivector want = a.scaled(-quadratic_form(space, v));
    r.record(clifford_map, cv == want, [&] {
      return VerifyFailure{"v = " + v.str(), cv.str(), want.str()};
    });

    Multivector c = rng.multivector(space);
    Multivector x = rng.multivector(space, 6, false, Algebra::exterior);
    bool rt = quantize(symbol(c)) == c && symbol(quantize(x)) == x;
    r.record(round, rt, [&] {
      return VerifyFailure{"a = " + c.str() + "; x = " + x.str(),
                           quantize(symbol(c)).str(), c.str()};
    });

    GradedDecomposition dec = grade_decompose(c);
    Multivector even_regroup(space, Algebra::clifford);
    Multivector odd_regroup(space, Algebra::clifford);
    for (size_t k = 0; k < dec.component.size(); ++k) {
      if (k % 2 == 0)
        even_regroup = even_regroup + dec.component[k];
      else
        odd_regroup = odd_regroup + dec.component[k];
    }
    auto [ce, co] = parity_split(c);
    bool gok = dec.sum() == c && even_regroup == ce && odd_regroup == co;
    r.record(grading, gok, [&] {
      return VerifyFailure{"a = " + c.str(), "grade regrouping", "parity split"};
    });
  }
}

void run_spin(SuiteRunner& r, Rng& rng, const QuadraticSpace& space) {
  VerifyCheck& derivation = r.check("inner-derivation-rule", "Eq. 10");
  VerifyCheck& contraction = r.check("contraction-identity", "Eq. 13");
  VerifyCheck& jacobi = r.check("generalized-jacobi", "Eq. 15");
  VerifyCheck& inclusions = r.check("graded-inclusions", "Eq. 11-12");
  VerifyCheck& so_membership = r.check("so-membership", "Eq. 14");
  VerifyCheck& spin_unitary = r.check("spin-gg-star", "Sec. 5");

  for (int t = 0; t < r.trials(); ++t) {
    int pa = static_cast<int>(rng.pick(0, 1));
    int pb = static_cast<int>(rng.pick(0, 1));
    Multivector a = rng.homogeneous(space, pa, 4);
    Multivector b = rng.homogeneous(space, pb, 4);
    Multivector c = rng.homogeneous(space, static_cast<int>(rng.pick(0, 1)), 4);

    Multivector lhs = supercommutator(a, b * c);
    Multivector rhs = (pa == 1 && pb == 1)
                          ? supercommutator(a, b) * c - b * supercommutator(a, c)
                          : supercommutator(a, b) * c + b * supercommutator(a, c);
    r.record(derivation, lhs == rhs, [&] {
      return VerifyFailure{pair_str(a, b) + "; c = " + c.str(), lhs.str(), rhs.str()};
    });

    Multivector v = rng.vector(space);
    r.record(contraction, contraction_identity_check(v, a), [&] {
      Multivector l = supercommutator(v, a).scaled(Scalar::rational(-1, 2));
      Multivector rr = quantize(iota(v, symbol(a)));
      return VerifyFailure{"v = " + v.str() + "; a = " + a.str(), l.str(), rr.str()};
    });

    Multivector jl = supercommutator(a, supercommutator(b, c)) -
                     supercommutator(supercommutator(a, b), c);
    Multivector jr = supercommutator(b, supercommutator(a, c));
    if (pa == 1 && pb == 1) jr = -jr;
    r.record(jacobi, jl == jr, [&] {
      return VerifyFailure{pair_str(a, b) + "; c = " + c.str(), jl.str(), jr.str()};
    });

    // [[v, C^k]] drops the grade by one; [[C^2, C^k]] preserves it.
    int k = static_cast<int>(rng.pick(0, space.dim()));
    Multivector ck = grade_component(rng.multivector(space, 8), k);
    bool incl_ok = true;
    if (!ck.is_zero()) {
      Multivector dv = supercommutator(v, ck);
      incl_ok = dv.is_zero() || pure_z_grade(dv, k - 1);
      Multivector biv = rng.homogeneous(space, 0, 4);
      biv = grade_component(biv, 2);
      if (!biv.is_zero()) {
        Multivector db = supercommutator(biv, ck);
        incl_ok = incl_ok && (db.is_zero() || pure_z_grade(db, k));
      }
    }
    r.record(inclusions, incl_ok, [&] {
      return VerifyFailure{"k = " + std::to_string(k), "grade drifted", ""};
    });
  }

  if (space.nondegenerate()) {
    for (BladeBits I = 0; I < (BladeBits{1} << space.dim()); ++I) {
      if (blades::grade(I) != 2) continue;
      Multivector a2 = Multivector::blade(space, I, Scalar::rational(1));
      OperatorMatrix m = ad_matrix(a2);
      bool ok = true;
      for (int i = 1; i <= space.dim() && ok; ++i) {
        for (int j = 1; j <= space.dim() && ok; ++j) {
          Scalar lhs = space.form_value(i) * m.at(i - 1, j - 1) +
                       space.form_value(j) * m.at(j - 1, i - 1);
          ok = lhs.is_zero();
        }
      }
      r.record(so_membership, ok, [&] {
        return VerifyFailure{blades::str(I), m.str(), "form-antisymmetric"};
      });
    }

    // Closed-form rotations at quarter turns have exact g g* = 1.
    for (int t = 0; t < std::min(r.trials(), 32); ++t) {
      BladeBits I = 0;
      int i = static_cast<int>(rng.pick(1, space.dim()));
      int j = static_cast<int>(rng.pick(1, space.dim()));
      if (i == j) continue;
      I = blades::from_indices({i, j});
      Multivector biv = Multivector::blade(space, I, Scalar::rational(1));
      Multivector sq = biv * biv;
      if (!(sq == -Multivector::unit(space))) continue;  // split planes skipped
      GroupElement g = clifford_exp_pi(biv, Scalar::rational(static_cast<long>(rng.pick(-3, 3)), 2));
      Multivector gg = g.element * star(g.element);
      r.record(spin_unitary, gg == Multivector::unit(space), [&] {
        return VerifyFailure{"g = " + g.element.str(), gg.str(), "1"};
      });
    }
  } else {
    // ad and exp need an invertible form.
  }
}

void run_spinor(SuiteRunner& r, Rng& rng, const QuadraticSpace& space) {
  SpinorContext ctx = complexify(space);
  VerifyCheck& anti = r.check("spinor-anticommutation", "Eq. 3");
  VerifyCheck& gamma_sq = r.check("chirality-squares-to-one", "Sec. 6");
  VerifyCheck& gradings = r.check("chirality-grading-coincidence", "Sec. 6");
  VerifyCheck& product_form = r.check("chirality-product-form", "Eq. 18");
  VerifyCheck& polarization = r.check("polarization-identity", "Eq. 17");
  VerifyCheck& selfadj = r.check("selfadjointness", "Sec. 7");
  VerifyCheck& sigma_consistency = r.check("sigma-tensor-consistency", "Sec. 8");

  OperatorMatrix id = OperatorMatrix::identity(ctx.dim);
  for (int jj = 1; jj <= ctx.n; ++jj) {
    for (int kk = 1; kk <= ctx.n; ++kk) {
      OperatorMatrix lhs = ctx.c_f[static_cast<size_t>(jj - 1)] * ctx.c_f[static_cast<size_t>(kk - 1)] +
                           ctx.c_f[static_cast<size_t>(kk - 1)] * ctx.c_f[static_cast<size_t>(jj - 1)];
      OperatorMatrix rhs = jj == kk ? id.scaled(Scalar::rational(-2)) : OperatorMatrix(ctx.dim, ctx.dim);
      r.record(anti, lhs == rhs, [&] {
        return VerifyFailure{"j = " + std::to_string(jj) + ", k = " + std::to_string(kk),
                             lhs.str(), rhs.str()};
      });
    }
  }

  auto [gamma_el, gamma_m] = chirality(ctx);
  QuadraticSpace ortho = ctx.orthonormal_space();
  r.record(gamma_sq, gamma_el * gamma_el == Multivector::unit(ortho), [&] {
    return VerifyFailure{"Gamma = " + gamma_el.str(), (gamma_el * gamma_el).str(), "1"};
  });
  r.record(product_form, chirality_product_form(ctx) == gamma_el, [&] {
    return VerifyFailure{"", chirality_product_form(ctx).str(), gamma_el.str()};
  });
  bool diag_ok = act(ctx, gamma_el) == gamma_m;
  for (int p = 0; p < ctx.dim; ++p) {
    Scalar want = Scalar::rational(ctx.spinor_parity[static_cast<size_t>(p)] == 0 ? 1 : -1);
    diag_ok = diag_ok && gamma_m.at(p, p) == want;
  }
  r.record(gradings, diag_ok, [&] {
    return VerifyFailure{"", act(ctx, gamma_el).str(), gamma_m.str()};
  });

  for (int t = 0; t < r.trials(); ++t) {
    std::vector<Scalar> coords;
    for (int j = 0; j < ctx.n; ++j) coords.push_back(rng.gaussian_rational());
    auto [lhs, rhs] = polarization_identity(ctx, coords);
    r.record(polarization, lhs == rhs, [&] {
      return VerifyFailure{"coords", lhs.str(), rhs.str()};
    });
  }

  for (int j = 1; j <= ctx.n; ++j) {
    Multivector f = Multivector::basis_vector(ortho, j);
    OperatorMatrix lhs = op_adjoint(ctx, act(ctx, f));
    OperatorMatrix rhs = -act(ctx, conjugate_element(ctx, f));
    Multivector e = Multivector::basis_vector(ctx.base, j);
    OperatorMatrix lhs2 = op_adjoint(ctx, act(ctx, e));
    OperatorMatrix rhs2 = -act(ctx, conjugate_element(ctx, e));
    r.record(selfadj, lhs == rhs && lhs2 == rhs2, [&] {
      return VerifyFailure{"generator " + std::to_string(j), lhs.str(), rhs.str()};
    });
  }

  // Quantize-then-act against the antisymmetrized generator product.
  for (int t = 0; t < std::min(r.trials(), 16); ++t) {
    int k = static_cast<int>(rng.pick(0, std::min(4, ctx.n)));
    std::vector<int> idx;
    while (static_cast<int>(idx.size()) < k) {
      int cand = static_cast<int>(rng.pick(1, ctx.n));
      bool dup = false;
      for (int u : idx) dup = dup || u == cand;
      if (!dup) idx.push_back(cand);
    }
    OperatorMatrix route1 = sigma_tensor(ctx, idx);
    // (1/k!) sum_pi sign(pi) c(e_{pi(1)}) ... c(e_{pi(k)})
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    OperatorMatrix acc(ctx.dim, ctx.dim);
    long fact = 1;
    for (int u = 2; u <= k; ++u) fact *= u;
    do {
      int inv = 0;
      for (size_t x = 0; x < perm.size(); ++x)
        for (size_t y = x + 1; y < perm.size(); ++y)
          if (perm[x] > perm[y]) ++inv;
      OperatorMatrix word = OperatorMatrix::identity(ctx.dim);
      for (int u : perm) word = word * ctx.c_e[static_cast<size_t>(u - 1)];
      acc = acc + (inv % 2 == 0 ? word : -word);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Fix the sign against the requested (possibly unsorted) index order.
    int inv_req = 0;
    for (size_t x = 0; x < idx.size(); ++x)
      for (size_t y = x + 1; y < idx.size(); ++y)
        if (idx[x] > idx[y]) ++inv_req;
    OperatorMatrix route2 = acc.scaled(Scalar::rational(inv_req % 2 == 0 ? 1 : -1, fact));
    r.record(sigma_consistency, route1 == route2, [&] {
      return VerifyFailure{"k = " + std::to_string(k), route1.str(), route2.str()};
    });
  }
}

void run_decomp(SuiteRunner& r, Rng& rng, const QuadraticSpace& space) {
  SpinorContext ctx = complexify(space);
  TwistedModule mod = build_twisted(ctx, 1);
  QuadraticSpace ortho = ctx.orthonormal_space();
  QCalibration cal = calibrate_q(ortho);

  VerifyCheck& eigen = r.check("projection-eigenvalue-law", "Eq. 20");
  VerifyCheck& left_inverse = r.check("q-left-inverse", "Eq. 21");
  VerifyCheck& key_eq = r.check("key-equation", "Eq. 23");
  VerifyCheck& skew = r.check("component-supercommutation", "Eq. 24");
  VerifyCheck& complete = r.check("completeness", "Sec. 10");

  int n = ctx.n;
  for (BladeBits I = 0; I < (BladeBits{1} << n); ++I) {
    for (BladeBits J = 0; J < (BladeBits{1} << n); ++J) {
      Multivector ej = Multivector::blade(ortho, J, Scalar::rational(1));
      Multivector pij = p_algebra(ortho, n, I, ej);
      Multivector expect = I == J ? ej : Multivector::zero(ortho);
      // With k = n the eigenvalue law collapses to delta_IJ on blades.
      r.record(eigen, pij == expect, [&] {
        return VerifyFailure{blades::str(I) + ", " + blades::str(J), pij.str(), expect.str()};
      });
      Multivector qij = q_algebra(ortho, I, ej, cal);
      Multivector qexpect = I == J ? Multivector::unit(ortho) : Multivector::zero(ortho);
      r.record(left_inverse, qij == qexpect, [&] {
        return VerifyFailure{blades::str(I) + ", " + blades::str(J), qij.str(), qexpect.str()};
      });
    }
  }

  for (int t = 0; t < std::min(r.trials(), 40); ++t) {
    OperatorMatrix b(mod.dim, mod.dim);
    for (int i = 0; i < mod.dim; ++i)
      for (int j = 0; j < mod.dim; ++j) b.at(i, j) = rng.gaussian_rational(4, 4);

    for (int k = 1; k <= n; ++k) {
      const OperatorMatrix& ck = mod.c_f[static_cast<size_t>(k - 1)];
      OperatorMatrix lhs = matrix_supercommutator(ck, ck * b, mod.parity).scaled(Scalar::rational(-1, 2)) +
                           (ck * matrix_supercommutator(ck, b, mod.parity)).scaled(Scalar::rational(-1, 2));
      r.record(key_eq, lhs == b, [&] {
        return VerifyFailure{"k = " + std::to_string(k), lhs.str(), b.str()};
      });
    }

    DecompositionResult dec = decompose_endo(mod, b);
    r.record(complete, dec.residual_zero, [&] {
      return VerifyFailure{"b", "nonzero residual", "0"};
    });
    r.record(skew, components_supercommute(mod, dec), [&] {
      return VerifyFailure{"b", "component fails to supercommute", "0"};
    });
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"all", "core", "car", "spin", "spinor", "decomp"};
}

VerifyReport run_verify_suite(const std::string& suite, const QuadraticSpace& space,
                              const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  report.signature = space.describe();
  report.seed = options.seed;
  report.trials = options.trials;

  auto t0 = std::chrono::steady_clock::now();
  SuiteRunner runner(&report, options);
  Rng rng(options.seed);

  bool spinor_ok = space.dim() % 2 == 0 && space.nondegenerate();
  if (spinor_ok) {
    for (const Scalar& q : space.q)
      spinor_ok = spinor_ok && (q.is_one() || q == Scalar::rational(-1));
  }

  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (!(suite == "all" || suite == "core" || suite == "car" || suite == "spin" ||
        suite == "spinor" || suite == "decomp"))
    throw Error("unknown verify suite '" + suite + "'");

  if (want("core")) run_core(runner, rng, space);
  if (want("car")) run_car(runner, rng, space);
  if (want("spin")) run_spin(runner, rng, space);
  if (want("spinor")) {
    if (spinor_ok)
      run_spinor(runner, rng, space);
    else if (suite == "spinor")
      throw WrongSignature("spinor suite needs an even dimension and q_i in {+1,-1}");
    else
      report.skipped.push_back("spinor (needs even dimension, q_i in {+1,-1})");
  }
  if (want("decomp")) {
    if (spinor_ok && space.dim() <= 6)
      run_decomp(runner, rng, space);
    else if (suite == "decomp")
      throw WrongSignature("decomp suite needs an even dimension <= 6 and q_i in {+1,-1}");
    else
      report.skipped.push_back("decomp (needs even dimension <= 6, q_i in {+1,-1})");
  }

  auto t1 = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

}  // namespace cliffordkit
