#include "ncprob/multconv.hpp"

#include "ncprob/opmodel.hpp"

namespace ncprob {

void for_each_split_nc_pair(int n, const std::function<void(const SplitNcPair&)>& visit, int cap) {
  if (n < 1) throw std::invalid_argument("split pair enumeration needs n >= 1");
  for_each_noncrossing_partition(
      2 * n,
      [&](const SetPartition& p) {
        SplitNcPair pair;
        for (const auto& b : p.blocks()) {
          const int parity = b.front() % 2;
          for (int x : b) {
            if (x % 2 != parity) return;  // mixed parity: not a split pair
          }
          (parity == 1 ? pair.odd_blocks : pair.even_blocks).push_back(b);
        }
        visit(pair);
      },
      cap);
}

DeterminingPair boxtimes_determining_oracle(const DeterminingPair& d, const DeterminingPair& dp,
                                            int N, int cap) {
  if (2 * N > cap) {
    throw OracleCapExceeded("oracle size exceeded at 2n=" + std::to_string(2 * N) +
                            "; use the composition route");
  }
  DeterminingPair out;
  for (int n = 1; n <= N; ++n) {
    Coeff ahat, bhat;
    for_each_split_nc_pair(
        n,
        [&](const SplitNcPair& sp) {
          // odd blocks ordered by minima: the first contains 1
          Coeff ta = d.alpha(static_cast<int>(sp.odd_blocks.front().size()));
          Coeff tb = dp.beta(static_cast<int>(sp.odd_blocks.front().size()));
          for (std::size_t i = 1; i < sp.odd_blocks.size(); ++i) {
            const int size = static_cast<int>(sp.odd_blocks[i].size());
            ta *= d.beta(size);
            tb *= dp.alpha(size);
          }
          for (const auto& b : sp.even_blocks) {
            const int size = static_cast<int>(b.size());
            ta *= dp.alpha(size);
            tb *= d.beta(size);
          }
          ahat += ta;
          bhat += tb;
        },
        cap);
    out.set_alpha(n, ahat);
    out.set_beta(n, bhat);
  }
  return out;
}

namespace {

PowerSeries alpha_series(const DeterminingPair& d, int N) {
  PowerSeries s(N);
  for (int n = 1; n <= N; ++n) s.set_coeff(n, d.alpha(n));
  return s;
}

PowerSeries beta_series(const DeterminingPair& d, int N) {
  PowerSeries s(N);
  for (int n = 1; n <= N; ++n) s.set_coeff(n, d.beta(n));
  return s;
}

/// M_{xy}(z) = sum phi((xy)^n) z^n for free x, y with the given cumulant
/// series, by the monochromatic partition sums. Past the enumeration cap
/// the same series comes from the S-transform product (the two agree
/// wherever both run; the means are nonzero on every path that gets here).
PowerSeries alternating_product_moments(const PowerSeries& kx, const PowerSeries& ky, int cap) {
  const int N = kx.order();
  PowerSeries m(N);
  if (2 * N <= cap) {
    std::string pattern;
    for (int n = 1; n <= N; ++n) {
      pattern += "ab";
      m.set_coeff(n, free_mixed_moment(kx, ky, pattern, cap));
    }
    return m;
  }
  PowerSeries mx = moments_from_r1_functional(kx);
  PowerSeries my = moments_from_r1_functional(ky);
  if (mx.coeff(1).is_zero() || my.coeff(1).is_zero()) {
    throw OracleCapExceeded("mixed-moment series past the cap needs nonzero means");
  }
  return free_mult_convolve_series(mx, my);
}

enum class Degenerate { None, BetaZero, AlphaPrimeZero, BothZero };

Degenerate degenerate_branch(const PowerSeries& rb, const PowerSeries& rap) {
  const bool beta_zero = rb.is_zero();
  const bool ap_zero = rap.is_zero();
  if (beta_zero && ap_zero) return Degenerate::BothZero;
  if (beta_zero) return Degenerate::BetaZero;
  if (ap_zero) return Degenerate::AlphaPrimeZero;
  return Degenerate::None;
}

/// Closed forms when a whole determining sequence vanishes: with beta = 0
/// the only surviving split pair has a full odd block and even singletons,
/// so alpha-hat_n = alpha_n (alpha'_1)^n and beta-hat = 0; with alpha' = 0
/// symmetrically alpha-hat = 0 and beta-hat_n = beta'_n (beta_1)^n.
DeterminingPair degenerate_boxtimes(Degenerate kind, const DeterminingPair& d,
                                    const DeterminingPair& dp, int N) {
  DeterminingPair out;
  for (int n = 1; n <= N; ++n) {
    out.set_alpha(n, Coeff());
    out.set_beta(n, Coeff());
  }
  if (kind == Degenerate::BothZero) return out;
  if (kind == Degenerate::BetaZero) {
    Coeff pw(1);
    for (int n = 1; n <= N; ++n) {
      pw *= dp.alpha(1);
      out.set_alpha(n, d.alpha(n) * pw);
    }
  } else {
    Coeff pw(1);
    for (int n = 1; n <= N; ++n) {
      pw *= d.beta(1);
      out.set_beta(n, dp.beta(n) * pw);
    }
  }
  return out;
}

void require_composable(const PowerSeries& rb, const PowerSeries& rap) {
  if (rb.coeff(1).is_zero() || rap.coeff(1).is_zero()) {
    throw std::invalid_argument(
        "composition path unavailable: beta_1 or alpha'_1 vanishes while the sequence does not");
  }
}

}  // namespace

DeterminingPair boxtimes_determining_fast(const DeterminingPair& d, const DeterminingPair& dp,
                                          int N, int cap) {
  PowerSeries ra = alpha_series(d, N), rb = beta_series(d, N);
  PowerSeries rap = alpha_series(dp, N), rbp = beta_series(dp, N);
  const Degenerate kind = degenerate_branch(rb, rap);
  if (kind != Degenerate::None) return degenerate_boxtimes(kind, d, dp, N);
  require_composable(rb, rap);

  PowerSeries m_ba = alternating_product_moments(rb, rap, cap);
  PowerSeries m_ab = alternating_product_moments(rap, rb, cap);
  PowerSeries ahat = ps_compose(ps_compose(ra, ps_comp_inverse(rb)), m_ba);
  PowerSeries bhat = ps_compose(ps_compose(rbp, ps_comp_inverse(rap)), m_ab);

  DeterminingPair out;
  for (int n = 1; n <= N; ++n) {
    out.set_alpha(n, ahat.coeff(n));
    out.set_beta(n, bhat.coeff(n));
  }
  return out;
}

DeterminingPair boxtimes_determining_subordination(const DeterminingPair& d,
                                                   const DeterminingPair& dp, int N, int cap) {
  PowerSeries ra = alpha_series(d, N), rb = beta_series(d, N);
  PowerSeries rap = alpha_series(dp, N), rbp = beta_series(dp, N);
  const Degenerate kind = degenerate_branch(rb, rap);
  if (kind != Degenerate::None) return degenerate_boxtimes(kind, d, dp, N);
  require_composable(rb, rap);

  PowerSeries mb = moments_from_r1_functional(rb);
  PowerSeries map = moments_from_r1_functional(rap);
  PowerSeries m_ba = alternating_product_moments(rb, rap, cap);
  PowerSeries m_ab = alternating_product_moments(rap, rb, cap);
  PowerSeries f = ps_compose(ps_comp_inverse(mb), m_ba);
  PowerSeries ft = ps_compose(ps_comp_inverse(map), m_ab);
  PowerSeries inner1 = f * one_plus(ps_compose(mb, f));
  PowerSeries inner2 = ft * one_plus(ps_compose(map, ft));
  PowerSeries ahat = ps_compose(ra, inner1);
  PowerSeries bhat = ps_compose(rbp, inner2);

  DeterminingPair out;
  for (int n = 1; n <= N; ++n) {
    out.set_alpha(n, ahat.coeff(n));
    out.set_beta(n, bhat.coeff(n));
  }
  return out;
}

BoxtimesResult boxtimes_determining(const DeterminingPair& d, const DeterminingPair& dp, int N,
                                    int cap) {
  BoxtimesResult res;
  bool have_fast = false;
  try {
    res.pair = boxtimes_determining_fast(d, dp, N, cap);
    res.method = "composition";
    have_fast = true;
  } catch (const std::invalid_argument&) {
    // composition path unavailable; the oracle below must carry the result
  }
  if (2 * N <= cap) {
    DeterminingPair oracle = boxtimes_determining_oracle(d, dp, N, cap);
    if (have_fast) {
      if (!(oracle == res.pair)) {
        throw std::logic_error("boxtimes routes disagree");
      }
      res.method = "partition-sum+composition";
    } else {
      res.pair = oracle;
      res.method = "partition-sum";
    }
    return res;
  }
  if (!have_fast) {
    throw OracleCapExceeded("oracle size exceeded and composition path unavailable");
  }
  return res;
}

Theorem78Check theorem78_check(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2,
                               const AtomicMeasure& sigma1p, const AtomicMeasure& sigma2p, int N,
                               int cap) {
  Theorem78Check out;
  DeterminingPair d, dp;
  {
    PowerSeries e1 = eta_of_measure(sigma1, N), e2 = eta_of_measure(sigma2, N);
    PowerSeries f1 = eta_of_measure(sigma1p, N), f2 = eta_of_measure(sigma2p, N);
    for (int n = 1; n <= N; ++n) {
      d.set_alpha(n, e1.coeff(n));
      d.set_beta(n, e2.coeff(n));
      dp.set_alpha(n, f1.coeff(n));
      dp.set_beta(n, f2.coeff(n));
    }
  }
  out.product = boxtimes_determining(d, dp, N, cap).pair;
  out.infdiv = is_infdiv_r_diagonal(out.product, N);
  out.pass = out.infdiv.pass;
  return out;
}

AtomicMeasure lambda_circular_tau(const Rational& lambda, int j) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (j < 1) throw std::invalid_argument("tau index must be >= 1");
  Rational lj(1);
  for (int i = 0; i < j; ++i) lj *= lambda;
  Rational w0 = lj / (1 + lj);
  return AtomicMeasure({{Rational(0), w0}, {1 + lj, 1 - w0}});
}

LambdaLadderStep lambda_circular_sigma(const Rational& lambda, int k, int N) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (k < 1) throw std::invalid_argument("power index must be >= 1");

  if (N < 2) throw std::invalid_argument("ladder needs order >= 2");
  // Route (i): S-transform recursion down the ladder, then back to moments.
  // S-transforms live one order below the moment series they come from.
  PowerSeries s = PowerSeries::constant(N - 1, Coeff(1));  // S of B(sigma_1), sigma_1 = delta_1
  const PowerSeries one_plus_lz = one_plus(PowerSeries::monomial(N - 1, 1, Coeff(lambda)));
  for (int step = 1; step < k; ++step) {
    s = s.scaled_argument(Coeff(lambda)) * ps_reciprocal(one_plus_lz);
  }
  PowerSeries m_bsigma = moments_from_s(s);
  PowerSeries eta_sigma = r_from_moments1(m_bsigma);  // R_{B(sigma)} = eta_sigma
  PowerSeries m_recursion = moments_from_eta1(eta_sigma);

  // Route (ii): sigma_k = tau_1 boxtimes ... boxtimes tau_{k-1}.
  PowerSeries m_product(N);
  if (k == 1) {
    for (int n = 1; n <= N; ++n) m_product.set_coeff(n, Coeff(1));  // delta_1
  } else {
    m_product = moment_series(lambda_circular_tau(lambda, 1), N);
    for (int j = 2; j <= k - 1; ++j) {
      m_product = free_mult_convolve_series(m_product, moment_series(lambda_circular_tau(lambda, j), N));
    }
  }
  return LambdaLadderStep{m_recursion, m_product};
}

}  // namespace ncprob
