#include "ncprob/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ncprob {

Json coeff_to_json(const Coeff& c) {
  if (c.is_real()) return to_string(c.re());
  return Json{{"re", to_string(c.re())}, {"im", to_string(c.im())}};
}

// Series files always spell coefficients as {"re","im"} objects; the compact
// string form stays available for real-valued convenience arrays.
static Json coeff_to_json_full(const Coeff& c) {
  return Json{{"re", to_string(c.re())}, {"im", to_string(c.im())}};
}

Coeff coeff_from_json(const Json& j) {
  if (j.is_string()) return Coeff(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Coeff(Rational(j.get<long>()));
  if (j.is_object()) {
    Rational re(0), im(0);
    if (j.contains("re")) re = parse_rational(j.at("re").get<std::string>());
    if (j.contains("im")) im = parse_rational(j.at("im").get<std::string>());
    return Coeff(re, im);
  }
  throw std::invalid_argument("coefficient must be a rational string or {re,im} object");
}

Json ncseries_to_json(const NcSeries& f) {
  Json coeffs = Json::object();
  for (const auto& [w, c] : f.terms()) coeffs[w.str()] = coeff_to_json_full(c);
  return Json{{"kind", "nc2"}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

NcSeries ncseries_from_json(const Json& j) {
  if (j.value("kind", "nc2") != std::string("nc2")) {
    throw std::invalid_argument("expected a series of kind nc2");
  }
  NcSeries f(j.at("order").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    f.set_coeff(Word(key), coeff_from_json(val));
  }
  return f;
}

Json powerseries_to_json(const PowerSeries& f) {
  Json coeffs = Json::object();
  for (int n = 0; n <= f.order(); ++n) {
    if (!f.coeff(n).is_zero()) coeffs[std::to_string(n)] = coeff_to_json_full(f.coeff(n));
  }
  return Json{{"kind", "ps1"}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries powerseries_from_json(const Json& j) {
  if (j.value("kind", "ps1") != std::string("ps1")) {
    throw std::invalid_argument("expected a series of kind ps1");
  }
  PowerSeries f(j.at("order").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    f.set_coeff(std::stoi(key), coeff_from_json(val));
  }
  return f;
}

Json measure_to_json(const AtomicMeasure& m) {
  Json atoms = Json::array();
  for (const auto& [t, w] : m.atoms()) atoms.push_back(Json::array({to_string(t), to_string(w)}));
  return Json{{"atoms", std::move(atoms)}};
}

AtomicMeasure measure_from_json(const Json& j) {
  std::vector<AtomicMeasure::Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    if (!a.is_array() || a.size() != 2) {
      throw std::invalid_argument("each atom must be a [position, weight] pair");
    }
    atoms.emplace_back(parse_rational(a[0].get<std::string>()),
                       parse_rational(a[1].get<std::string>()));
  }
  return AtomicMeasure(std::move(atoms));
}

Json pair_to_json(const DeterminingPair& d) {
  Json alpha = Json::array(), beta = Json::array();
  for (int n = 1; n <= d.length(); ++n) {
    alpha.push_back(coeff_to_json(d.alpha(n)));
    beta.push_back(coeff_to_json(d.beta(n)));
  }
  return Json{{"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

DeterminingPair pair_from_json(const Json& j) {
  std::vector<Coeff> alpha, beta;
  for (const auto& v : j.at("alpha")) alpha.push_back(coeff_from_json(v));
  for (const auto& v : j.at("beta")) beta.push_back(coeff_from_json(v));
  while (alpha.size() < beta.size()) alpha.emplace_back();
  while (beta.size() < alpha.size()) beta.emplace_back();
  return DeterminingPair(std::move(alpha), std::move(beta));
}

Json load_json_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open file " + arg.substr(1));
    return Json::parse(in);
  }
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return Json::parse(ss.str());
  }
  // Bare filenames work too; anything that opens as a file is read from disk.
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && arg[0] != '"') {
    std::ifstream in(arg);
    if (in) return Json::parse(in);
  }
  return Json::parse(arg);
}

}  // namespace ncprob
