#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cliffordkit/endo.hpp"
#include "cliffordkit/errors.hpp"
#include "cliffordkit/exterior.hpp"
#include "cliffordkit/json_io.hpp"
#include "cliffordkit/spin.hpp"
#include "cliffordkit/spinor.hpp"
#include "cliffordkit/verify.hpp"

namespace ck = cliffordkit;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string signature = "s:+++";
  std::uint64_t seed = 0;
  int trials = 200;
  std::string format = "json";
  std::string out_path;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CLIFFORDKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ck::Error("CLIFFORDKIT_SEED is not an integer");
    }
  }
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_trials = false) {
  cmd->add_option("--signature", opts->signature, "Signature spec: s:+--0 or q:1,-1,1/2");
  cmd->add_option("--seed", opts->seed, "RNG seed (default: CLIFFORDKIT_SEED or 0)");
  if (with_trials) cmd->add_option("--trials", opts->trials, "Trials per property");
  cmd->add_option("--format", opts->format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts->out_path, "Write output to this path instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw ck::Error("cannot open output path " + opts.out_path);
  f << payload;
}

// ---------------------------------------------------------------------------

int cmd_table(const CommonOpts& opts, const std::string& algebra) {
  ck::QuadraticSpace space = ck::parse_signature(opts.signature);
  if (space.dim() > 10) throw ck::DimensionTooLarge("table limited to dimension 10");
  ck::Algebra alg = algebra == "exterior" ? ck::Algebra::exterior : ck::Algebra::clifford;
  std::vector<ck::BladeBits> order = ck::blades::all_graded_lex(space.dim());

  if (opts.format == "json") {
    json j;
    j["signature"] = space.describe();
    j["algebra"] = algebra;
    json basis = json::array();
    for (ck::BladeBits I : order) basis.push_back(ck::blades::indices(I));
    j["basis"] = basis;
    json rows = json::array();
    for (ck::BladeBits I : order) {
      json row = json::array();
      for (ck::BladeBits J : order) {
        auto [c, K] = alg == ck::Algebra::exterior
                          ? ck::blade_product_exterior(I, J)
                          : ck::blade_product(space, I, J);
        json cell = ck::scalar_to_json(c);
        cell["blades"] = c.is_zero() ? std::vector<int>{} : ck::blades::indices(K);
        row.push_back(cell);
      }
      rows.push_back(row);
    }
    j["table"] = rows;
    emit(opts, j.dump(2) + "\n");
    return 0;
  }

  std::vector<std::vector<std::string>> cells;
  size_t width = 0;
  for (ck::BladeBits I : order) {
    std::vector<std::string> row;
    for (ck::BladeBits J : order) {
      auto [c, K] = alg == ck::Algebra::exterior ? ck::blade_product_exterior(I, J)
                                                 : ck::blade_product(space, I, J);
      std::string cell;
      if (c.is_zero()) {
        cell = "0";
      } else {
        std::string coeff = c.str();
        if (coeff == "1" && K != 0)
          cell = ck::blades::str(K);
        else if (coeff == "-1" && K != 0)
          cell = "-" + ck::blades::str(K);
        else if (K == 0)
          cell = coeff;
        else
          cell = coeff + " " + ck::blades::str(K);
      }
      width = std::max(width, cell.size());
      row.push_back(cell);
    }
    cells.push_back(row);
  }
  std::ostringstream text;
  text << "# " << (alg == ck::Algebra::exterior ? "exterior" : "clifford")
       << " multiplication table, " << space.describe() << "\n";
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = 0; j < order.size(); ++j) {
      std::string& cell = cells[i][j];
      text << cell << std::string(width - cell.size() + 2, ' ');
    }
    text << "\n";
  }
  emit(opts, text.str());
  return 0;
}

// ---------------------------------------------------------------------------

json report_to_json(const ck::VerifyReport& report) {
  json j;
  j["suite"] = report.suite;
  j["signature"] = report.signature;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  json checks = json::array();
  for (const ck::VerifyCheck& c : report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["anchor"] = c.anchor;
    cj["cases"] = c.cases;
    cj["failures"] = c.failures;
    json samples = json::array();
    for (const ck::VerifyFailure& f : c.samples) {
      samples.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    cj["failure_samples"] = samples;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["skipped"] = report.skipped;
  j["failures_total"] = report.total_failures();
  return j;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, bool inject_fault) {
  ck::QuadraticSpace space = ck::parse_signature(opts.signature);
  ck::VerifyOptions vo;
  vo.seed = opts.seed;
  vo.trials = opts.trials;
  vo.fault = inject_fault ? ck::Fault::sign_table : ck::Fault::none;
  ck::VerifyReport report = ck::run_verify_suite(suite, space, vo);

  if (opts.format == "json") {
    emit(opts, report_to_json(report).dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "suite " << report.suite << " on " << report.signature << ", seed "
         << report.seed << ", trials " << report.trials << "\n";
    for (const ck::VerifyCheck& c : report.checks) {
      text << (c.failures == 0 ? "  ok   " : "  FAIL ") << c.name << " [" << c.anchor
           << "] " << c.cases - c.failures << "/" << c.cases << "\n";
      for (const ck::VerifyFailure& f : c.samples) {
        text << "         violation of " << c.anchor << " at " << f.inputs << "\n";
        text << "           lhs: " << f.lhs << "\n           rhs: " << f.rhs << "\n";
      }
    }
    for (const std::string& s : report.skipped) text << "  skip " << s << "\n";
    text << (report.total_failures() == 0 ? "PASS" : "FAIL") << " ("
         << report.total_failures() << " failures, " << report.wall_seconds << "s)\n";
    emit(opts, text.str());
  }
  return report.total_failures() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_gamma(const CommonOpts& opts) {
  ck::SpinorContext ctx = ck::complexify(ck::QuadraticSpace::lorentzian(4));
  ck::GammaBundle bundle = ck::gamma_matrices(ctx);

  json j;
  j["signature"] = "q:1,-1,-1,-1";
  json basis = json::array();
  for (ck::BladeBits I : ctx.basis) basis.push_back(ck::blades::indices(I));
  j["spinor_basis"] = basis;
  for (int mu = 0; mu < 4; ++mu)
    j["gamma" + std::to_string(mu)] =
        ck::matrix_to_json(bundle.gamma[static_cast<size_t>(mu)], &ctx.spinor_parity, &ctx.basis);
  j["gamma5"] = ck::matrix_to_json(bundle.gamma5, &ctx.spinor_parity, &ctx.basis);
  j["chirality_permutation"] = bundle.chirality_perm;
  j["block_change"] = ck::matrix_to_json(bundle.block_change);
  json adj;
  adj["gamma0"] = "gamma0* = gamma0";
  adj["gamma1"] = "gamma1* = -gamma1";
  adj["gamma2"] = "gamma2* = -gamma2";
  adj["gamma3"] = "gamma3* = -gamma3";
  adj["gamma5"] = "gamma5* = gamma5";
  j["adjointness"] = adj;

  if (opts.format == "json") {
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    for (int mu = 0; mu < 4; ++mu)
      text << "gamma" << mu << " =\n" << bundle.gamma[static_cast<size_t>(mu)].str();
    text << "gamma5 =\n" << bundle.gamma5.str();
    text << "adjointness: gamma0* = gamma0, gammak* = -gammak (k=1,2,3), gamma5* = gamma5\n";
    emit(opts, text.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_exp(const CommonOpts& opts, const std::string& plane, const std::string& times_pi,
            const std::string& coeff, const std::string& mode, int max_degree,
            double tolerance) {
  ck::QuadraticSpace space = ck::parse_signature(opts.signature);
  std::vector<int> idx;
  {
    std::stringstream ss(plane);
    std::string tok;
    while (std::getline(ss, tok, ',')) idx.push_back(std::stoi(tok));
  }
  if (idx.size() != 2) throw ck::Error("--plane wants two generator indices, e.g. 1,2");
  ck::Multivector biv = ck::Multivector::blade(space, ck::blades::from_indices(idx),
                                               ck::Scalar::rational(1));

  ck::GroupElement g{ck::Multivector::unit(space), true, true};
  std::string how;
  if (!times_pi.empty()) {
    g = ck::clifford_exp_pi(biv, ck::Scalar::parse_rational(times_pi));
    how = "exp((" + times_pi + ") pi e_plane), closed form";
  } else {
    ck::Scalar c = ck::Scalar::parse_rational(coeff.empty() ? "1" : coeff);
    ck::Multivector a = biv.scaled(c);
    if (mode == "series") {
      // Force the Taylor path by asking for the series on the float copy.
      ck::Multivector af(space, ck::Algebra::clifford);
      for (const auto& [I, cc] : a.terms()) af.add_term(I, ck::Scalar::f64(cc.to_double()));
      g = ck::clifford_exp(af + ck::Multivector::zero(space), max_degree, tolerance);
      g.closed_form = false;
      how = "series";
    } else {
      g = ck::clifford_exp(a, max_degree, tolerance);
      how = g.closed_form ? "closed form" : "series";
    }
  }

  ck::Multivector gg = g.element * ck::star(g.element);
  json j;
  j["signature"] = space.describe();
  j["mode"] = how;
  j["element"] = ck::multivector_to_json(g.element);
  j["g_times_g_star"] = ck::multivector_to_json(gg);
  if (!g.pure_bivector) j["warning"] = "argument is not pure grade 2";
  if (opts.format == "json") {
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "exp = " << g.element.str() << "  (" << how << ")\n";
    text << "g g* = " << gg.str() << "\n";
    emit(opts, text.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_decompose(const CommonOpts& opts, int d_w, const std::string& matrix_path) {
  ck::QuadraticSpace space = ck::parse_signature(opts.signature);
  ck::SpinorContext ctx = ck::complexify(space);
  ck::TwistedModule mod = ck::build_twisted(ctx, d_w);

  json input;
  {
    std::ifstream f(matrix_path);
    if (!f) throw ck::BadMatrixFile("cannot open matrix file " + matrix_path);
    try {
      f >> input;
    } catch (const std::exception& e) {
      throw ck::BadMatrixFile("matrix file is not valid JSON: " + std::string(e.what()));
    }
  }
  ck::OperatorMatrix b = ck::matrix_from_json(input);
  if (b.rows() != mod.dim || b.cols() != mod.dim)
    throw ck::DimensionMismatch("matrix is " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ", module dimension is " +
                                std::to_string(mod.dim));
  if (!b.is_exact()) throw ck::BadMatrixFile("matrix entries must be exact rationals");

  ck::DecompositionResult dec = ck::decompose_endo(mod, b);
  bool skew_ok = ck::components_supercommute(mod, dec);
  json j = ck::decomposition_to_json(dec, mod);
  j["components_supercommute"] = skew_ok;
  emit(opts, j.dump(2) + "\n");
  return (dec.residual_zero && skew_ok) ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_spinor(const CommonOpts& opts) {
  ck::QuadraticSpace space = ck::parse_signature(opts.signature);
  ck::SpinorContext ctx = ck::complexify(space);
  json j;
  j["signature"] = space.describe();
  j["dim_spinor"] = ctx.dim;
  json resc = json::array();
  for (bool b : ctx.rescaled) resc.push_back(b);
  j["rescaled_by_i"] = resc;
  json basis = json::array();
  for (ck::BladeBits I : ctx.basis) basis.push_back(ck::blades::indices(I));
  j["basis"] = basis;
  json actions = json::array();
  for (int jj = 1; jj <= ctx.n; ++jj)
    actions.push_back(ck::matrix_to_json(ck::clifford_action_matrix(ctx, jj),
                                         &ctx.spinor_parity, &ctx.basis));
  j["orthonormal_actions"] = actions;
  auto [gamma_el, gamma_m] = ck::chirality(ctx);
  j["chirality_element"] = ck::multivector_to_json(gamma_el);
  j["chirality_matrix"] = ck::matrix_to_json(gamma_m, &ctx.spinor_parity, &ctx.basis);
  j["chirality_permutation"] = ctx.chirality_perm;
  if (opts.format == "json") {
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "spinor module over " << space.describe() << ", dim " << ctx.dim << "\n";
    for (int jj = 1; jj <= ctx.n; ++jj)
      text << "c(f" << jj << ") =\n" << ck::clifford_action_matrix(ctx, jj).str();
    text << "Gamma = " << gamma_el.str() << "\n";
    emit(opts, text.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffordkit: exact Clifford algebra kernel"};
  app.require_subcommand(1);

  CommonOpts table_opts, verify_opts, gamma_opts, exp_opts, dec_opts, spinor_opts;
  std::string table_algebra = "clifford";
  std::string verify_suite = "all";
  bool verify_fault = false;
  std::string exp_plane = "1,2", exp_times_pi, exp_coeff, exp_mode = "auto";
  int exp_max_degree = 40;
  double exp_tolerance = 1e-12;
  int dec_dw = 1;
  std::string dec_matrix;

  CLI::App* table = app.add_subcommand("table", "Blade multiplication table");
  add_common(table, &table_opts);
  table->add_option("--algebra", table_algebra, "clifford or exterior")
      ->check(CLI::IsMember({"clifford", "exterior"}));

  CLI::App* verify = app.add_subcommand("verify", "Run property suites");
  add_common(verify, &verify_opts, true);
  verify->add_option("--suite", verify_suite, "all|core|car|spin|spinor|decomp")
      ->check(CLI::IsMember(ck::verify_suite_names()));
  verify->add_flag("--inject-fault", verify_fault,
                   "Corrupt a product sign to exercise failure reporting");

  CLI::App* gamma = app.add_subcommand("gamma", "Dirac gamma-matrix bundle for q:1,-1,-1,-1");
  add_common(gamma, &gamma_opts);

  CLI::App* expc = app.add_subcommand("exp", "Exponential of a coordinate-plane bivector");
  add_common(expc, &exp_opts);
  expc->add_option("--plane", exp_plane, "Two generator indices, e.g. 1,2");
  expc->add_option("--times-pi", exp_times_pi,
                   "Angle as a rational multiple of pi (exact at half-integers)");
  expc->add_option("--coeff", exp_coeff, "Plain rational coefficient (auto mode)");
  expc->add_option("--mode", exp_mode, "auto or series")
      ->check(CLI::IsMember({"auto", "series"}));
  expc->add_option("--max-degree", exp_max_degree, "Series degree cap");
  expc->add_option("--tol", exp_tolerance, "Series remainder tolerance");

  CLI::App* dec = app.add_subcommand("decompose", "Decompose an endomorphism over blades");
  add_common(dec, &dec_opts);
  dec->add_option("--dw", dec_dw, "Twisting dimension");
  dec->add_option("--matrix", dec_matrix, "JSON matrix file")->required();

  CLI::App* spinor = app.add_subcommand("spinor", "Spinor module data");
  add_common(spinor, &spinor_opts);

  std::uint64_t seed0;
  try {
    seed0 = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  table_opts.seed = verify_opts.seed = gamma_opts.seed = exp_opts.seed = dec_opts.seed =
      spinor_opts.seed = seed0;

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return cmd_table(table_opts, table_algebra);
    if (verify->parsed()) return cmd_verify(verify_opts, verify_suite, verify_fault);
    if (gamma->parsed()) return cmd_gamma(gamma_opts);
    if (expc->parsed())
      return cmd_exp(exp_opts, exp_plane, exp_times_pi, exp_coeff, exp_mode,
                     exp_max_degree, exp_tolerance);
    if (dec->parsed()) return cmd_decompose(dec_opts, dec_dw, dec_matrix);
    if (spinor->parsed()) return cmd_spinor(spinor_opts);
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
