#include "ncprob/diagonal.hpp"

namespace ncprob {

DeterminingPair::DeterminingPair(std::vector<Coeff> alpha, std::vector<Coeff> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.size() != beta_.size()) {
    throw std::invalid_argument("determining sequences must have equal length");
  }
}

Coeff DeterminingPair::alpha(int n) const {
  if (n < 1) throw std::invalid_argument("determining index must be >= 1");
  return n <= length() ? alpha_[static_cast<std::size_t>(n - 1)] : Coeff();
}

Coeff DeterminingPair::beta(int n) const {
  if (n < 1) throw std::invalid_argument("determining index must be >= 1");
  return n <= length() ? beta_[static_cast<std::size_t>(n - 1)] : Coeff();
}

void DeterminingPair::set_alpha(int n, Coeff c) {
  if (n < 1) throw std::invalid_argument("determining index must be >= 1");
  if (n > length()) {
    alpha_.resize(static_cast<std::size_t>(n));
    beta_.resize(static_cast<std::size_t>(n));
  }
  alpha_[static_cast<std::size_t>(n - 1)] = std::move(c);
}

void DeterminingPair::set_beta(int n, Coeff c) {
  if (n < 1) throw std::invalid_argument("determining index must be >= 1");
  if (n > length()) {
    alpha_.resize(static_cast<std::size_t>(n));
    beta_.resize(static_cast<std::size_t>(n));
  }
  beta_[static_cast<std::size_t>(n - 1)] = std::move(c);
}

bool DeterminingPair::is_real() const {
  for (const auto& c : alpha_) {
    if (!c.is_real()) return false;
  }
  for (const auto& c : beta_) {
    if (!c.is_real()) return false;
  }
  return true;
}

DeterminingPair DeterminingPair::scaled(const Coeff& c) const {
  DeterminingPair out = *this;
  for (auto& x : out.alpha_) x *= c;
  for (auto& x : out.beta_) x *= c;
  return out;
}

bool operator==(const DeterminingPair& a, const DeterminingPair& b) {
  const int n = std::max(a.length(), b.length());
  for (int k = 1; k <= n; ++k) {
    if (a.alpha(k) != b.alpha(k) || a.beta(k) != b.beta(k)) return false;
  }
  return true;
}

NcSeries diagonal_series(const DeterminingPair& d, int order) {
  NcSeries f(order);
  for (int n = 1; 2 * n <= order; ++n) {
    f.set_coeff(Word::alternating(Letter::One, n), d.alpha(n));
    f.set_coeff(Word::alternating(Letter::Star, n), d.beta(n));
  }
  return f;
}

bool is_diagonal_series(const NcSeries& f, Word* offending) {
  for (const auto& [w, c] : f.terms()) {
    if (!is_alternating(w)) {
      if (offending) *offending = w;
      return false;
    }
  }
  return true;
}

DeterminingPair pair_of_diagonal_series(const NcSeries& f) {
  Word bad;
  if (!is_diagonal_series(f, &bad)) {
    throw std::invalid_argument("series is not diagonal: word " + bad.str() +
                                " has a nonzero coefficient");
  }
  DeterminingPair d;
  for (int n = 1; 2 * n <= f.order(); ++n) {
    d.set_alpha(n, f.coeff(Word::alternating(Letter::One, n)));
    d.set_beta(n, f.coeff(Word::alternating(Letter::Star, n)));
  }
  return d;
}

StarDistribution make_eta_diagonal(const DeterminingPair& d, int order) {
  return StarDistribution(moments_from_eta(diagonal_series(d, order)));
}

StarDistribution make_r_diagonal(const DeterminingPair& d, int order) {
  return StarDistribution(moments_from_r(diagonal_series(d, order)));
}

DiagonalMomentCheck check_eta_diagonal_moments(const StarDistribution& mu) {
  DiagonalMomentCheck res;
  for (int n = 1; n <= mu.order(); ++n) {
    for (const Word& w : all_words(n)) {
      const Coeff m = mu.moment(w);
      if (!is_mixed_alternating(w)) {
        if (!m.is_zero()) {
          res.yes = false;
          res.witness = w;
          res.condition = "nonzero moment at a word that is not mixed-alternating";
          return res;
        }
        continue;
      }
      Coeff product(1);
      for (const Word& factor : canonical_factorization(w)) product *= mu.moment(factor);
      if (m != product) {
        res.yes = false;
        res.witness = w;
        res.condition = "moment does not factor over the canonical factorization";
        return res;
      }
    }
  }
  return res;
}

namespace {

PowerSeries alternating_moment_series(const StarDistribution& mu, Letter first) {
  const int N = mu.order() / 2;
  if (N < 1) throw std::invalid_argument("order too small to read product moments");
  PowerSeries m(N);
  for (int n = 1; n <= N; ++n) {
    m.set_coeff(n, mu.moment(Word::alternating(first, n)));
  }
  return m;
}

}  // namespace

std::pair<PowerSeries, PowerSeries> product_eta(const StarDistribution& mu) {
  NcSeries eta = eta_from_moments(mu.moments);
  Word bad;
  if (!is_diagonal_series(eta, &bad)) {
    throw std::invalid_argument("product_eta requires an eta-diagonal distribution; offending word " +
                                bad.str());
  }
  DeterminingPair d = pair_of_diagonal_series(eta);
  PowerSeries e1 = eta_from_moments1(alternating_moment_series(mu, Letter::One));
  PowerSeries e2 = eta_from_moments1(alternating_moment_series(mu, Letter::Star));
  for (int n = 1; n <= e1.order(); ++n) {
    if (e1.coeff(n) != d.alpha(n) || e2.coeff(n) != d.beta(n)) {
      throw std::logic_error("product eta-series disagree with the determining sequences");
    }
  }
  return {e1, e2};
}

std::pair<PowerSeries, PowerSeries> product_r_ncsum(const DeterminingPair& d, int N, int cap) {
  PowerSeries r1(N), r2(N);
  for (int n = 1; n <= N; ++n) {
    Coeff c1, c2;
    for (const SetPartition& p : noncrossing_partitions(n, cap)) {
      // blocks come ordered by minima, so blocks()[0] contains 1
      Coeff t1(1), t2(1);
      bool first = true;
      for (const auto& b : p.blocks()) {
        const int size = static_cast<int>(b.size());
        if (first) {
          t1 *= d.alpha(size);
          t2 *= d.beta(size);
          first = false;
        } else {
          t1 *= d.beta(size);
          t2 *= d.alpha(size);
        }
      }
      c1 += t1;
      c2 += t2;
    }
    r1.set_coeff(n, c1);
    r2.set_coeff(n, c2);
  }
  return {r1, r2};
}

std::pair<PowerSeries, PowerSeries> product_r_composition(const DeterminingPair& d, int N) {
  PowerSeries ra(N), rb(N);
  for (int n = 1; n <= N; ++n) {
    ra.set_coeff(n, d.alpha(n));
    rb.set_coeff(n, d.beta(n));
  }
  PowerSeries ma = moments_from_r1_functional(ra);
  PowerSeries mb = moments_from_r1_functional(rb);
  PowerSeries r1 = ps_compose(ra, one_plus(mb).shifted_up());
  PowerSeries r2 = ps_compose(rb, one_plus(ma).shifted_up());
  return {r1, r2};
}

DeterminingPair pair_from_product_r(const PowerSeries& r_zzstar, const PowerSeries& r_starz,
                                    int cap) {
  const int N = r_zzstar.order();
  DeterminingPair d;
  for (int n = 1; n <= N; ++n) {
    Coeff rest1, rest2;
    for (const SetPartition& p : noncrossing_partitions(n, cap)) {
      if (p.block_count() == 1) continue;
      Coeff t1(1), t2(1);
      bool first = true;
      for (const auto& b : p.blocks()) {
        const int size = static_cast<int>(b.size());
        if (first) {
          t1 *= d.alpha(size);
          t2 *= d.beta(size);
          first = false;
        } else {
          t1 *= d.beta(size);
          t2 *= d.alpha(size);
        }
      }
      rest1 += t1;
      rest2 += t2;
    }
    d.set_alpha(n, r_zzstar.coeff(n) - rest1);
    d.set_beta(n, r_starz.coeff(n) - rest2);
  }
  return d;
}

ProductR product_r(const DeterminingPair& d, int N, int cap) {
  auto comp = product_r_composition(d, N);
  if (N > cap) {
    return ProductR(comp.first, comp.second, "composition");
  }
  auto sums = product_r_ncsum(d, N, cap);
  if (sums.first != comp.first || sums.second != comp.second) {
    throw std::logic_error("partition-sum and composition routes disagree for product R-transforms");
  }
  return ProductR(comp.first, comp.second, "partition-sum+composition");
}

namespace {

void require_half_line(const AtomicMeasure& sigma, const char* who) {
  if (!sigma.nonnegative_support()) {
    throw std::invalid_argument(std::string(who) + ": measure is not supported on [0, inf)");
  }
}

DeterminingPair pair_from_measures(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2,
                                   int order) {
  const int K = order / 2;
  PowerSeries e1 = eta_of_measure(sigma1, std::max(K, 1));
  PowerSeries e2 = eta_of_measure(sigma2, std::max(K, 1));
  DeterminingPair d;
  for (int n = 1; n <= std::max(K, 1); ++n) {
    d.set_alpha(n, e1.coeff(n));
    d.set_beta(n, e2.coeff(n));
  }
  return d;
}

}  // namespace

StarDistribution phi(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2, int order) {
  require_half_line(sigma1, "phi");
  require_half_line(sigma2, "phi");
  return make_eta_diagonal(pair_from_measures(sigma1, sigma2, order), order);
}

StarDistribution phi_from_moment_sequences(const PowerSeries& zzstar_moments,
                                           const PowerSeries& starz_moments, int order) {
  PowerSeries e1 = eta_from_moments1(zzstar_moments);
  PowerSeries e2 = eta_from_moments1(starz_moments);
  DeterminingPair d;
  for (int n = 1; n <= e1.order(); ++n) {
    d.set_alpha(n, e1.coeff(n));
    d.set_beta(n, e2.coeff(n));
  }
  return make_eta_diagonal(d, order);
}

StarDistribution psi(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2, int order) {
  require_half_line(sigma1, "psi");
  require_half_line(sigma2, "psi");
  return bbp(phi(sigma1, sigma2, order));
}

std::pair<PowerSeries, PowerSeries> theorem62_products(const AtomicMeasure& sigma1,
                                                       const AtomicMeasure& sigma2, int N) {
  require_half_line(sigma1, "theorem62_products");
  require_half_line(sigma2, "theorem62_products");
  // R of the one-variable bijection image is the measure's eta-series.
  PowerSeries rb1 = eta_of_measure(sigma1, N);
  PowerSeries rb2 = eta_of_measure(sigma2, N);
  PowerSeries mb1 = moments_from_r1(rb1);
  PowerSeries mb2 = moments_from_r1(rb2);
  PowerSeries r1 = ps_compose(rb1, one_plus(mb2).shifted_up());
  PowerSeries r2 = ps_compose(rb2, one_plus(mb1).shifted_up());
  return {r1, r2};
}

bool kms_check(const DeterminingPair& d, const Rational& t) {
  if (t <= 0) throw std::invalid_argument("KMS parameter must be positive");
  const Coeff ct(t);
  for (int n = 1; n <= d.length(); ++n) {
    if (d.alpha(n) != ct * d.beta(n)) return false;
  }
  return true;
}

Coeff ut_identity_defect(const StarDistribution& mu, const Rational& t, const Word& v,
                         const Word& w) {
  if (t <= 0) throw std::invalid_argument("KMS parameter must be positive");
  auto moment_of = [&](const Word& u) { return u.empty() ? Coeff(1) : mu.moment(u); };
  int exponent = 0;
  for (std::size_t i = 0; i < v.size(); ++i) exponent += v.at(i) == Letter::One ? 1 : -1;
  Rational scale(1);
  for (int i = 0; i < std::abs(exponent); ++i) scale *= t;
  Coeff ut_factor = exponent >= 0 ? Coeff(scale) : Coeff(Rational(1) / scale);
  return moment_of(v.concat(w)) - ut_factor * moment_of(w.concat(v));
}

std::pair<PowerSeries, PowerSeries> kms_tau(const AtomicMeasure& sigma, const Rational& t, int N) {
  require_half_line(sigma, "kms_tau");
  if (t <= 0) throw std::invalid_argument("KMS parameter must be positive");
  PowerSeries msigma = moment_series(sigma, N);
  if (msigma.coeff(1).is_zero()) {
    throw std::invalid_argument("kms_tau: zero mean, S-transform path unavailable");
  }
  const PowerSeries pi1 = free_poisson_moments(FreePoissonParams{1, 1}, N);
  // tau1 = (B(sigma) boxtimes Pi1)^{boxplus t}
  PowerSeries m_b = moments_from_r1(eta_from_moments1(msigma));
  PowerSeries tau1 = convolution_power1(free_mult_convolve_series(m_b, pi1), t,
                                        ConvolutionKind::Free);
  // tau2 = (B(sigma)^{boxplus t} boxtimes Pi1)^{boxplus 1/t}
  PowerSeries m_bt = convolution_power1(m_b, t, ConvolutionKind::Free);
  PowerSeries tau2 = convolution_power1(free_mult_convolve_series(m_bt, pi1), Rational(1) / t,
                                        ConvolutionKind::Free);
  return {tau1, tau2};
}

InfDivResult is_infdiv_r_diagonal(const DeterminingPair& d, int N) {
  InfDivResult res;
  PowerSeries f(N), g(N);
  for (int n = 1; n <= N; ++n) {
    f.set_coeff(n, d.alpha(n));
    g.set_coeff(n, d.beta(n));
  }
  EPlusResult ra = in_E_plus_truncated(f, N);
  if (!ra.pass) {
    res.side = "alpha";
    res.reason = ra.reason;
    return res;
  }
  EPlusResult rb = in_E_plus_truncated(g, N);
  if (!rb.pass) {
    res.side = "beta";
    res.reason = rb.reason;
    return res;
  }
  res.pass = true;
  return res;
}

}  // namespace ncprob
