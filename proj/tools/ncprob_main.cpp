// Command line front end: transform conversions, convolutions, the
// diagonal-law pipelines, multiplicative convolution of determining pairs,
// the operator-model oracle, and the per-statement verify suites.
//
// All numeric output is exact (rationals as "p/q" strings) except for the
// opmodel subcommand, which reports floating-point moments. Output is JSON
// by default; --pretty switches the verify report to a table. Exit codes:
// 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>

#include "ncprob/json_io.hpp"
#include "ncprob/multconv.hpp"
#include "ncprob/opmodel.hpp"
#include "ncprob/verify.hpp"

using namespace ncprob;

namespace {

PowerSeries moments_argument(const Json& j, int order) {
  // Accepts a one-variable moment series or a measure.
  if (j.contains("atoms")) return moment_series(measure_from_json(j), order);
  PowerSeries m = powerseries_from_json(j);
  if (m.order() == order) return m;
  PowerSeries out(order);
  for (int n = 0; n <= std::min(order, m.order()); ++n) out.set_coeff(n, m.coeff(n));
  return out;
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["cases"] = r.cases;
  j["seed"] = r.seed;
  j["pass"] = r.passed();
  j["failures"] = r.failures;
  j["seconds"] = r.seconds;
  return j;
}

void print_report(const VerifyReport& r, bool pretty) {
  if (!pretty) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  std::printf("%-18s %s  order=%d cases=%d seed=%llu  %.2fs\n", r.id.c_str(),
              r.passed() ? "pass" : "FAIL", r.order, r.cases,
              static_cast<unsigned long long>(r.seed), r.seconds);
  for (const auto& f : r.failures) std::printf("  %s\n", f.c_str());
}

Json series_moment_list(const PowerSeries& m) {
  Json out = Json::array();
  for (int n = 1; n <= m.order(); ++n) out.push_back(coeff_to_json(m.coeff(n)));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact transforms and verified identities for *-distributions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int order = 6;
  std::uint64_t seed = 1;
  int cases = 0;
  int oracle_cap = kDefaultOracleCap;
  double tol = 1e-10;
  bool pretty = false;
  app.add_option("-N,--order", order, "truncation order")->capture_default_str();
  app.add_option("--seed", seed, "random seed for verify suites");
  app.add_option("--cases", cases, "number of random cases (0 = suite default)");
  app.add_option("--oracle-cap", oracle_cap, "largest ground set the enumerations accept");
  app.add_option("--tol", tol, "operator-model tolerance");
  app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

  // transform -------------------------------------------------------------
  auto* t = app.add_subcommand("transform", "apply a series transform to JSON input");
  std::string t_op, t_in;
  t->add_option("--op", t_op,
                "one of: eta_from_moments moments_from_eta r_from_moments moments_from_r "
                "eta1 moments_from_eta1 r1 moments_from_r1 bbp bbp1 s moments_from_s "
                "complexify decomplexify eplus")
      ->required();
  t->add_option("--in", t_in, "JSON literal, @file, or - for stdin")->required();

  // convolve ---------------------------------------------------------------
  auto* cv = app.add_subcommand("convolve", "free/Boolean/multiplicative convolutions");
  std::string cv_kind, cv_a, cv_b, cv_power;
  cv->add_option("--kind", cv_kind, "free | boolean | freemult")->required();
  cv->add_option("--a", cv_a, "first input (series or measure JSON)")->required();
  cv->add_option("--b", cv_b, "second input (omit when using --power)");
  cv->add_option("--power", cv_power, "convolution power t as a rational");

  // diagonal ---------------------------------------------------------------
  auto* dg = app.add_subcommand("diagonal", "eta/R-diagonal laws and their parametrizations");
  std::string dg_op = "psi", dg_s1, dg_s2, dg_pair, dg_t = "1";
  dg->add_option("op", dg_op, "phi | psi | producteta | productr | kmstau | infdiv")
      ->capture_default_str();
  dg->add_option("--sigma1", dg_s1, "first measure (JSON)");
  dg->add_option("--sigma2", dg_s2, "second measure (JSON)");
  dg->add_option("--pair", dg_pair, "determining pair (JSON)");
  dg->add_option("--t", dg_t, "KMS parameter");

  // multconv ---------------------------------------------------------------
  auto* mc = app.add_subcommand("multconv", "free multiplicative convolution of R-diagonal laws");
  std::string mc_a, mc_b, mc_lambda;
  int mc_k = 0;
  mc->add_option("--a", mc_a, "first determining pair (JSON)");
  mc->add_option("--b", mc_b, "second determining pair (JSON)");
  mc->add_option("--lambda", mc_lambda, "lambda for the circular power ladder");
  mc->add_option("--k", mc_k, "power index for the ladder");

  // opmodel ----------------------------------------------------------------
  auto* om = app.add_subcommand("opmodel", "finite-dimensional operator model moments");
  std::string om_s1, om_s2;
  int om_len = 6;
  om->add_option("--sigma1", om_s1)->required();
  om->add_option("--sigma2", om_s2)->required();
  om->add_option("--maxlen", om_len, "longest word to evaluate")->capture_default_str();

  // verify -----------------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "run a per-statement verification suite");
  std::vector<std::string> vf_ids;
  vf->add_option("ids", vf_ids, "suite ids, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  if (t->parsed()) {
    Json in = load_json_argument(t_in);
    Json out;
    if (t_op == "eta_from_moments" || t_op == "moments_from_eta" || t_op == "r_from_moments" ||
        t_op == "moments_from_r" || t_op == "bbp" || t_op == "complexify" ||
        t_op == "decomplexify") {
      NcSeries f = ncseries_from_json(in);
      NcSeries g = t_op == "eta_from_moments"  ? eta_from_moments(f)
                   : t_op == "moments_from_eta" ? moments_from_eta(f)
                   : t_op == "r_from_moments"   ? r_from_moments(f, oracle_cap)
                   : t_op == "moments_from_r"   ? moments_from_r(f, oracle_cap)
                   : t_op == "bbp"              ? bbp(StarDistribution(f)).moments
                   : t_op == "complexify"       ? complexify(f)
                                                : decomplexify(f);
      out = ncseries_to_json(g);
    } else if (t_op == "eplus") {
      // the input is a candidate eta-series; measures enter through theirs
      PowerSeries f = in.contains("atoms") ? eta_of_measure(measure_from_json(in), order)
                                           : moments_argument(in, order);
      EPlusResult r = in_E_plus_truncated(f, order);
      out["pass"] = r.pass;
      out["order"] = r.order;
      if (!r.pass) out["reason"] = r.reason;
    } else {
      PowerSeries m = moments_argument(in, order);
      PowerSeries g = t_op == "eta1"               ? eta_from_moments1(m)
                      : t_op == "moments_from_eta1" ? moments_from_eta1(m)
                      : t_op == "r1"                ? r_from_moments1(m, oracle_cap)
                      : t_op == "moments_from_r1"   ? moments_from_r1(m, oracle_cap)
                      : t_op == "bbp1"              ? bbp1(m)
                      : t_op == "s"                 ? s_transform(m)
                      : t_op == "moments_from_s"    ? moments_from_s(m)
                                                    : throw CLI::ValidationError(
                                                          "--op", "unknown transform " + t_op);
      out = powerseries_to_json(g);
      out["moments"] = series_moment_list(g);
    }
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return 0;
  }

  if (cv->parsed()) {
    Json ja = load_json_argument(cv_a);
    Json out;
    const bool two_variable = ja.value("kind", "") == std::string("nc2");
    ConvolutionKind kind = cv_kind == "free"      ? ConvolutionKind::Free
                           : cv_kind == "boolean" ? ConvolutionKind::Boolean
                           : cv_kind == "freemult"
                               ? ConvolutionKind::Free  // placeholder; handled below
                               : throw CLI::ValidationError("--kind", "unknown kind " + cv_kind);
    if (!cv_power.empty()) {
      const Rational tpow = parse_rational(cv_power);
      if (cv_kind == "freemult") {
        throw CLI::ValidationError("--kind", "powers exist for free and boolean only");
      }
      if (two_variable) {
        StarDistribution a{ncseries_from_json(ja)};
        out = ncseries_to_json(convolution_power(a, tpow, kind).moments);
      } else {
        out = powerseries_to_json(convolution_power1(moments_argument(ja, order), tpow, kind));
      }
    } else {
      if (cv_b.empty()) throw CLI::ValidationError("--b", "second input required");
      Json jb = load_json_argument(cv_b);
      if (two_variable && cv_kind != "freemult") {
        StarDistribution a{ncseries_from_json(ja)}, b{ncseries_from_json(jb)};
        StarDistribution r =
            cv_kind == "free" ? free_convolve(a, b) : boolean_convolve(a, b);
        out = ncseries_to_json(r.moments);
      } else {
        PowerSeries a = moments_argument(ja, order);
        PowerSeries b = moments_argument(jb, order);
        PowerSeries r = cv_kind == "free"      ? free_convolve1(a, b)
                        : cv_kind == "boolean" ? boolean_convolve1(a, b)
                        : !a.coeff(1).is_zero() && !b.coeff(1).is_zero()
                            ? free_mult_convolve_series(a, b)
                            : free_mult_convolve_oracle(a, b, oracle_cap);
        out = powerseries_to_json(r);
      }
    }
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return 0;
  }

  if (dg->parsed()) {
    Json out;
    if (dg_op == "phi" || dg_op == "psi") {
      AtomicMeasure s1 = measure_from_json(load_json_argument(dg_s1));
      AtomicMeasure s2 = measure_from_json(load_json_argument(dg_s2));
      StarDistribution mu = dg_op == "phi" ? phi(s1, s2, order) : psi(s1, s2, order);
      out["moments"] = ncseries_to_json(mu.moments);
      // distributions of ZZ* and Z*Z up to order N, through the pair
      PowerSeries e1 = eta_of_measure(s1, order), e2 = eta_of_measure(s2, order);
      PowerSeries zzm(order), szm(order);
      if (dg_op == "phi") {
        zzm = moments_from_eta1(e1);
        szm = moments_from_eta1(e2);
      } else {
        DeterminingPair d;
        for (int n = 1; n <= order; ++n) {
          d.set_alpha(n, e1.coeff(n));
          d.set_beta(n, e2.coeff(n));
        }
        ProductR pr = product_r(d, order, oracle_cap);
        zzm = moments_from_r1(pr.zzstar, oracle_cap);
        szm = moments_from_r1(pr.starz, oracle_cap);
      }
      out["zzstar_moments"] = series_moment_list(zzm);
      out["starz_moments"] = series_moment_list(szm);
    } else if (dg_op == "producteta") {
      AtomicMeasure s1 = measure_from_json(load_json_argument(dg_s1));
      AtomicMeasure s2 = measure_from_json(load_json_argument(dg_s2));
      auto [e1, e2] = product_eta(phi(s1, s2, order));
      out["zzstar_eta"] = powerseries_to_json(e1);
      out["starz_eta"] = powerseries_to_json(e2);
      out["method"] = "interval-sum";
    } else if (dg_op == "productr") {
      DeterminingPair d = pair_from_json(load_json_argument(dg_pair));
      ProductR pr = product_r(d, order, oracle_cap);
      out["zzstar_r"] = powerseries_to_json(pr.zzstar);
      out["starz_r"] = powerseries_to_json(pr.starz);
      out["method"] = pr.method;
    } else if (dg_op == "kmstau") {
      AtomicMeasure sigma = measure_from_json(load_json_argument(dg_s1));
      auto [tau1, tau2] = kms_tau(sigma, parse_rational(dg_t), order);
      out["tau1"] = powerseries_to_json(tau1);
      out["tau2"] = powerseries_to_json(tau2);
      out["method"] = "s-transform";
    } else if (dg_op == "infdiv") {
      DeterminingPair d = pair_from_json(load_json_argument(dg_pair));
      InfDivResult r = is_infdiv_r_diagonal(d, order);
      out["pass"] = r.pass;
      out["order"] = order;
      if (!r.pass) {
        out["side"] = r.side;
        out["reason"] = r.reason;
      }
    } else {
      throw CLI::ValidationError("--op", "unknown diagonal operation " + dg_op);
    }
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return 0;
  }

  if (mc->parsed()) {
    Json out;
    if (!mc_lambda.empty()) {
      const Rational lam = parse_rational(mc_lambda);
      const int k = mc_k > 0 ? mc_k : 2;
      LambdaLadderStep step = lambda_circular_sigma(lam, k, order);
      if (step.moments_recursion != step.moments_product) {
        std::cerr << "internal disagreement between the two ladder routes\n";
        return 1;
      }
      out["sigma_k_moments"] = powerseries_to_json(step.moments_recursion);
      out["k"] = k;
      out["method"] = "s-recursion+measure-product";
    } else {
      DeterminingPair a = pair_from_json(load_json_argument(mc_a));
      DeterminingPair b = pair_from_json(load_json_argument(mc_b));
      BoxtimesResult r = boxtimes_determining(a, b, order, oracle_cap);
      out = pair_to_json(r.pair);
      out["method"] = r.method;
    }
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return 0;
  }

  if (om->parsed()) {
    AtomicMeasure s1 = measure_from_json(load_json_argument(om_s1));
    AtomicMeasure s2 = measure_from_json(load_json_argument(om_s2));
    OperatorModel model = build_model(s1, s2);
    StarDistribution mu = phi(s1, s2, om_len);
    Json rows = Json::array();
    double worst = 0;
    for (int n = 1; n <= om_len; ++n) {
      for (const Word& w : all_words(n)) {
        std::complex<double> got = model_star_moment(model, w);
        Coeff want = mu.moment(w);
        double err =
            std::abs(got - std::complex<double>(want.re().get_d(), want.im().get_d()));
        worst = std::max(worst, err);
        if (pretty) {
          std::printf("%-10s % .12f %+.12fi   exact %s\n", w.str().c_str(), got.real(),
                      got.imag(), to_string(want).c_str());
        } else {
          rows.push_back(Json{{"word", w.str()},
                              {"model_re", got.real()},
                              {"model_im", got.imag()},
                              {"exact", coeff_to_json(want)}});
        }
      }
    }
    if (pretty) {
      std::printf("dim(K) = %d, worst deviation %.3e (tol %.1e)\n", model.dim_h * model.dim_h,
                  worst, tol);
    } else {
      Json out;
      out["dim_k"] = model.dim_h * model.dim_h;
      out["worst_error"] = worst;
      out["tol"] = tol;
      out["rows"] = rows;
      std::cout << out.dump() << "\n";
    }
    return worst <= tol ? 0 : 1;
  }

  if (vf->parsed()) {
    VerifyOptions vo;
    vo.order = app.count("--order") ? order : 0;
    vo.cases = cases;
    vo.seed = seed;
    vo.oracle_cap = oracle_cap;
    vo.tol = tol;
    std::vector<std::string> ids = vf_ids;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = verify_ids();
    bool all_ok = true;
    for (const auto& id : ids) {
      VerifyReport rep = run_verify(id, vo);
      print_report(rep, pretty);
      all_ok = all_ok && rep.passed();
    }
    return all_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
