// Python bindings for the main operations. Exact values cross the boundary
// as rational strings or JSON documents in the same formats the CLI uses,
// so nothing is lost to floating point; only the operator model returns
// complex doubles.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncprob/json_io.hpp"
#include "ncprob/multconv.hpp"
#include "ncprob/opmodel.hpp"
#include "ncprob/verify.hpp"

namespace py = pybind11;
using namespace ncprob;

namespace {

std::string dump(const Json& j) { return j.dump(); }

PowerSeries moments_in(const std::string& json_text, int order) {
  Json j = Json::parse(json_text);
  if (j.contains("atoms")) return moment_series(measure_from_json(j), order);
  PowerSeries m = powerseries_from_json(j);
  if (m.order() == order) return m;
  PowerSeries out(order);
  for (int n = 0; n <= std::min(order, m.order()); ++n) out.set_coeff(n, m.coeff(n));
  return out;
}

std::vector<std::string> moment_strings(const PowerSeries& m) {
  std::vector<std::string> out;
  for (int n = 1; n <= m.order(); ++n) out.push_back(to_string(m.coeff(n)));
  return out;
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["order"] = r.order;
  d["cases"] = r.cases;
  d["seed"] = r.seed;
  d["pass"] = r.passed();
  d["failures"] = r.failures;
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ncprob, m) {
  m.doc() = "exact free/Boolean probability transforms with verified identities";

  m.def("classify_word", [](const std::string& w) {
    return std::string(to_string(classify_word(Word(w))));
  });
  m.def("canonical_factorization", [](const std::string& w) {
    std::vector<std::string> out;
    for (const Word& f : canonical_factorization(Word(w))) out.push_back(f.str());
    return out;
  });

  m.def("catalan_number", &catalan_number);
  m.def("noncrossing_partitions", [](int n) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const SetPartition& p : noncrossing_partitions(n)) out.push_back(p.blocks());
    return out;
  });

  m.def(
      "transform",
      [](const std::string& op, const std::string& payload, int order, int cap) {
        Json in = Json::parse(payload);
        if (op == "eta_from_moments") return dump(ncseries_to_json(eta_from_moments(ncseries_from_json(in))));
        if (op == "moments_from_eta") return dump(ncseries_to_json(moments_from_eta(ncseries_from_json(in))));
        if (op == "r_from_moments") return dump(ncseries_to_json(r_from_moments(ncseries_from_json(in), cap)));
        if (op == "moments_from_r") return dump(ncseries_to_json(moments_from_r(ncseries_from_json(in), cap)));
        if (op == "bbp") return dump(ncseries_to_json(bbp(StarDistribution(ncseries_from_json(in))).moments));
        if (op == "complexify") return dump(ncseries_to_json(complexify(ncseries_from_json(in))));
        if (op == "decomplexify") return dump(ncseries_to_json(decomplexify(ncseries_from_json(in))));
        PowerSeries ps = moments_in(payload, order);
        if (op == "eta1") return dump(powerseries_to_json(eta_from_moments1(ps)));
        if (op == "moments_from_eta1") return dump(powerseries_to_json(moments_from_eta1(ps)));
        if (op == "r1") return dump(powerseries_to_json(r_from_moments1(ps, cap)));
        if (op == "moments_from_r1") return dump(powerseries_to_json(moments_from_r1(ps, cap)));
        if (op == "bbp1") return dump(powerseries_to_json(bbp1(ps)));
        if (op == "s") return dump(powerseries_to_json(s_transform(ps)));
        if (op == "moments_from_s") return dump(powerseries_to_json(moments_from_s(ps)));
        throw std::invalid_argument("unknown transform op '" + op + "'");
      },
      py::arg("op"), py::arg("payload"), py::arg("order") = 6,
      py::arg("oracle_cap") = kDefaultOracleCap);

  m.def(
      "bbp1_moments",
      [](const std::string& measure_json, int order) {
        return moment_strings(bbp1(moments_in(measure_json, order)));
      },
      py::arg("measure"), py::arg("order") = 6);

  m.def(
      "phi_moments",
      [](const std::string& s1, const std::string& s2, int order) {
        StarDistribution mu = phi(measure_from_json(Json::parse(s1)),
                                  measure_from_json(Json::parse(s2)), order);
        return dump(ncseries_to_json(mu.moments));
      },
      py::arg("sigma1"), py::arg("sigma2"), py::arg("order") = 6);

  m.def(
      "psi_product_moments",
      [](const std::string& s1, const std::string& s2, int order) {
        StarDistribution nu = psi(measure_from_json(Json::parse(s1)),
                                  measure_from_json(Json::parse(s2)), order);
        std::vector<std::string> zz, sz;
        for (int n = 1; 2 * n <= order; ++n) {
          zz.push_back(to_string(nu.moment(Word::alternating(Letter::One, n))));
          sz.push_back(to_string(nu.moment(Word::alternating(Letter::Star, n))));
        }
        return py::make_tuple(zz, sz);
      },
      py::arg("sigma1"), py::arg("sigma2"), py::arg("order") = 8);

  m.def(
      "product_r",
      [](const std::string& pair_json, int order, int cap) {
        ProductR pr = product_r(pair_from_json(Json::parse(pair_json)), order, cap);
        py::dict d;
        d["zzstar"] = moment_strings(pr.zzstar);
        d["starz"] = moment_strings(pr.starz);
        d["method"] = pr.method;
        return d;
      },
      py::arg("pair"), py::arg("order") = 6, py::arg("oracle_cap") = kDefaultOracleCap);

  m.def(
      "boxtimes",
      [](const std::string& a, const std::string& b, int order, int cap) {
        BoxtimesResult r = boxtimes_determining(pair_from_json(Json::parse(a)),
                                                pair_from_json(Json::parse(b)), order, cap);
        Json j = pair_to_json(r.pair);
        j["method"] = r.method;
        return dump(j);
      },
      py::arg("a"), py::arg("b"), py::arg("order") = 5,
      py::arg("oracle_cap") = kDefaultOracleCap);

  m.def(
      "lambda_circular_sigma",
      [](const std::string& lam, int k, int order) {
        LambdaLadderStep step = lambda_circular_sigma(parse_rational(lam), k, order);
        if (step.moments_recursion != step.moments_product) {
          throw std::logic_error("ladder routes disagree");
        }
        return moment_strings(step.moments_recursion);
      },
      py::arg("lam"), py::arg("k"), py::arg("order") = 6);

  m.def(
      "opmodel_moments",
      [](const std::string& s1, const std::string& s2, int max_len) {
        OperatorModel model = build_model(measure_from_json(Json::parse(s1)),
                                          measure_from_json(Json::parse(s2)));
        py::dict out;
        for (int n = 1; n <= max_len; ++n) {
          for (const Word& w : all_words(n)) {
            out[py::str(w.str())] = model_star_moment(model, w);
          }
        }
        return out;
      },
      py::arg("sigma1"), py::arg("sigma2"), py::arg("max_len") = 6);

  m.def("verify_ids", &verify_ids);
  m.def(
      "verify",
      [](const std::string& id, int order, int cases, std::uint64_t seed, int cap, double tol) {
        VerifyOptions o;
        o.order = order;
        o.cases = cases;
        o.seed = seed;
        o.oracle_cap = cap;
        o.tol = tol;
        return report_dict(run_verify(id, o));
      },
      py::arg("id"), py::arg("order") = 0, py::arg("cases") = 0, py::arg("seed") = 1,
      py::arg("oracle_cap") = kDefaultOracleCap, py::arg("tol") = 1e-10);
}
