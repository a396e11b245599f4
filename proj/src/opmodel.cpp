#include "ncprob/opmodel.hpp"

#include <cmath>

namespace ncprob {

std::vector<std::pair<double, double>> symmetric_sqrt(const AtomicMeasure& sigma) {
  if (!sigma.nonnegative_support()) {
    throw std::invalid_argument("symmetric_sqrt requires atoms in [0, inf)");
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& [t, w] : sigma.atoms()) {
    if (t == 0) {
      out.emplace_back(0.0, w.get_d());
    } else {
      const double root = std::sqrt(t.get_d());
      const double half = w.get_d() / 2.0;
      out.emplace_back(-root, half);
      out.emplace_back(root, half);
    }
  }
  return out;
}

OperatorModel build_model(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2) {
  const auto s1 = symmetric_sqrt(sigma1);
  const auto s2 = symmetric_sqrt(sigma2);
  const int d1 = static_cast<int>(s1.size());
  const int d2 = static_cast<int>(s2.size());
  const int dh = d1 + d2;

  OperatorModel m;
  m.dim_h = dh;
  m.X = Eigen::MatrixXcd::Zero(dh, dh);
  for (int i = 0; i < d1; ++i) m.X(i, i) = s1[static_cast<std::size_t>(i)].first;
  for (int i = 0; i < d2; ++i) m.X(d1 + i, d1 + i) = s2[static_cast<std::size_t>(i)].first;

  m.xi1 = Eigen::VectorXcd::Zero(dh);
  m.xi2 = Eigen::VectorXcd::Zero(dh);
  for (int i = 0; i < d1; ++i) m.xi1(i) = std::sqrt(s1[static_cast<std::size_t>(i)].second);
  for (int i = 0; i < d2; ++i) m.xi2(d1 + i) = std::sqrt(s2[static_cast<std::size_t>(i)].second);

  // Y zeta = <zeta, xi1> xi2
  m.Y = m.xi2 * m.xi1.adjoint();

  const int dk = dh * dh;
  m.V = Eigen::MatrixXcd::Zero(dk, dk);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) m.V(j * dh + i, i * dh + j) = 1.0;  // e_i (x) e_j -> e_j (x) e_i

  Eigen::MatrixXcd yx = Eigen::MatrixXcd::Zero(dk, dk);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j)
      for (int k = 0; k < dh; ++k)
        for (int l = 0; l < dh; ++l) {
          const std::complex<double> v = m.Y(i, k) * m.X(j, l);
          if (v != 0.0) yx(i * dh + j, k * dh + l) = v;
        }
  m.A = m.V * yx;

  m.xi = Eigen::VectorXcd::Zero(dk);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) m.xi(i * dh + j) = m.xi1(i) * m.xi2(j);
  return m;
}

std::complex<double> model_star_moment(const OperatorModel& m, const Word& w) {
  if (w.empty()) return 1.0;
  Eigen::VectorXcd v = m.xi;
  for (std::size_t k = w.size(); k-- > 0;) {
    v = (w.at(k) == Letter::One) ? (m.A * v).eval() : (m.A.adjoint() * v).eval();
  }
  return m.xi.dot(v);  // <v, xi> with Eigen's conjugate-first convention
}

Coeff free_mixed_moment(const PowerSeries& kappa_a, const PowerSeries& kappa_b,
                        const std::string& pattern, int cap) {
  const int n = static_cast<int>(pattern.size());
  if (n < 1) throw std::invalid_argument("pattern must be nonempty");
  for (char c : pattern) {
    if (c != 'a' && c != 'b') throw std::invalid_argument("pattern letters must be 'a' or 'b'");
  }
  Coeff total;
  for_each_noncrossing_partition(
      n,
      [&](const SetPartition& p) {
        Coeff term(1);
        for (const auto& block : p.blocks()) {
          const char color = pattern[static_cast<std::size_t>(block.front() - 1)];
          for (int x : block) {
            if (pattern[static_cast<std::size_t>(x - 1)] != color) return;  // mixed block
          }
          const auto& kappa = color == 'a' ? kappa_a : kappa_b;
          term *= kappa.coeff(static_cast<int>(block.size()));
          if (term.is_zero()) return;
        }
        total += term;
      },
      cap);
  return total;
}

}  // namespace ncprob
