#include "ncprob/transforms.hpp"

#include <algorithm>

#include "ncprob/opmodel.hpp"

namespace ncprob {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("measure needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.first < b.first; });
  Rational total(0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].second <= 0) throw std::invalid_argument("atom weights must be positive");
    if (i > 0 && atoms_[i].first == atoms_[i - 1].first) {
      throw std::invalid_argument("atom positions must be distinct");
    }
    total += atoms_[i].second;
  }
  if (total != 1) throw std::invalid_argument("atom weights must sum to 1");
}

AtomicMeasure AtomicMeasure::dirac(const Rational& position) {
  return AtomicMeasure({{position, Rational(1)}});
}

bool AtomicMeasure::nonnegative_support() const {
  for (const auto& [t, w] : atoms_) {
    if (t < 0) return false;
  }
  return true;
}

Rational AtomicMeasure::mean() const {
  Rational m(0);
  for (const auto& [t, w] : atoms_) m += t * w;
  return m;
}

// --------------------------------------------------------------------------
// eta <-> moments
// --------------------------------------------------------------------------

NcSeries eta_from_moments(const NcSeries& M) {
  // M (1+M)^{-1} = M (1+G) with (1+M)(1+G) = 1.
  NcSeries g = nc_geom_inverse(M);
  return M + nc_product(M, g);
}

NcSeries moments_from_eta(const NcSeries& eta) {
  const int N = eta.order();
  NcSeries power = eta;
  NcSeries out = eta;
  for (int k = 2; k <= N && !power.is_zero(); ++k) {
    power = nc_product(power, eta);
    out += power;
  }
  return out;
}

namespace {

void check_oracle_word(const Word& w, int cap) {
  if (static_cast<int>(w.size()) > cap) {
    throw OracleCapExceeded("oracle size exceeded: word length " + std::to_string(w.size()) +
                            " > cap " + std::to_string(cap));
  }
}

}  // namespace

Coeff eta_coeff_oracle(const NcSeries& M, const Word& w, int cap) {
  check_oracle_word(w, cap);
  Coeff total;
  for_each_interval_partition(static_cast<int>(w.size()), [&](const SetPartition& p) {
    Coeff term = cf_block_product(M, w, p);
    if (p.block_count() % 2 == 0) term = -term;  // (-1)^(1+|pi|)
    total += term;
  });
  return total;
}

Coeff moment_coeff_oracle(const NcSeries& eta, const Word& w, int cap) {
  check_oracle_word(w, cap);
  Coeff total;
  for_each_interval_partition(static_cast<int>(w.size()),
                              [&](const SetPartition& p) { total += cf_block_product(eta, w, p); });
  return total;
}

// --------------------------------------------------------------------------
// R-transform, partition-sum route
// --------------------------------------------------------------------------

NcSeries r_from_moments(const NcSeries& M, int cap) {
  const int N = M.order();
  NcSeries R(N);
  for (int n = 1; n <= N; ++n) {
    const auto& parts = noncrossing_partitions(n, cap);
    for (const Word& w : all_words(n)) {
      // The full-block term contributes Cf_w(R) itself; everything else
      // involves strictly shorter words of R, already known.
      Coeff rest;
      for (const SetPartition& p : parts) {
        if (p.block_count() == 1) continue;
        rest += cf_block_product(R, w, p);
      }
      R.set_coeff(w, M.coeff(w) - rest);
    }
  }
  return R;
}

NcSeries moments_from_r(const NcSeries& R, int cap) {
  const int N = R.order();
  NcSeries M(N);
  for (int n = 1; n <= N; ++n) {
    const auto& parts = noncrossing_partitions(n, cap);
    for (const Word& w : all_words(n)) {
      Coeff total;
      for (const SetPartition& p : parts) total += cf_block_product(R, w, p);
      M.set_coeff(w, total);
    }
  }
  return M;
}

NcSeries r_from_moments_functional(const NcSeries& M) {
  const int N = M.order();
  NcSeries R(N);
  for (int n = 1; n <= N; ++n) {
    // R is known below degree n; its degree-n words enter the substituted
    // series with coefficient 1 and nothing else at degree n.
    NcSeries s = substitute_shifted(R, M);
    for (const Word& w : all_words(n)) {
      R.set_coeff(w, M.coeff(w) - s.coeff(w));
    }
  }
  return R;
}

NcSeries moments_from_r_functional(const NcSeries& R) {
  const int N = R.order();
  NcSeries M(N);
  for (int n = 1; n <= N; ++n) {
    NcSeries s = substitute_shifted(R, M);  // degree n uses M only below n
    for (const Word& w : all_words(n)) M.set_coeff(w, s.coeff(w));
  }
  return M;
}

// --------------------------------------------------------------------------
// One-variable versions
// --------------------------------------------------------------------------

PowerSeries eta_from_moments1(const PowerSeries& M) {
  if (!M.zero_constant_term()) throw std::invalid_argument("moment series must have zero constant term");
  return M * ps_reciprocal(one_plus(M));
}

PowerSeries moments_from_eta1(const PowerSeries& eta) {
  if (!eta.zero_constant_term()) throw std::invalid_argument("eta series must have zero constant term");
  PowerSeries one_minus = one_plus(eta.scaled(Coeff(-1)));
  return eta * ps_reciprocal(one_minus);
}

namespace {

Coeff interval_sum1(const PowerSeries& f, int n, bool signed_sum) {
  Coeff total;
  for_each_interval_partition(n, [&](const SetPartition& p) {
    Coeff term(1);
    for (const auto& b : p.blocks()) term *= f.coeff(static_cast<int>(b.size()));
    if (signed_sum && p.block_count() % 2 == 0) term = -term;
    total += term;
  });
  return total;
}

}  // namespace

Coeff eta_coeff_oracle1(const PowerSeries& M, int n) { return interval_sum1(M, n, true); }
Coeff moment_coeff_oracle1(const PowerSeries& eta, int n) { return interval_sum1(eta, n, false); }

PowerSeries r_from_moments1(const PowerSeries& M, int cap) {
  const int N = M.order();
  PowerSeries R(N);
  for (int n = 1; n <= N; ++n) {
    Coeff rest;
    for (const SetPartition& p : noncrossing_partitions(n, cap)) {
      if (p.block_count() == 1) continue;
      Coeff term(1);
      for (const auto& b : p.blocks()) term *= R.coeff(static_cast<int>(b.size()));
      rest += term;
    }
    R.set_coeff(n, M.coeff(n) - rest);
  }
  return R;
}

PowerSeries moments_from_r1(const PowerSeries& R, int cap) {
  const int N = R.order();
  PowerSeries M(N);
  for (int n = 1; n <= N; ++n) {
    Coeff total;
    for (const SetPartition& p : noncrossing_partitions(n, cap)) {
      Coeff term(1);
      for (const auto& b : p.blocks()) term *= R.coeff(static_cast<int>(b.size()));
      total += term;
    }
    M.set_coeff(n, total);
  }
  return M;
}

PowerSeries r_from_moments1_functional(const PowerSeries& M) {
  // R(z(1+M)) = M, so R = M o (z(1+M))^{<-1>}.
  PowerSeries arg = one_plus(M).shifted_up();
  return ps_compose(M, ps_comp_inverse(arg));
}

PowerSeries moments_from_r1_functional(const PowerSeries& R) {
  const int N = R.order();
  PowerSeries M(N);
  for (int n = 1; n <= N; ++n) {
    PowerSeries s = ps_compose(R, one_plus(M).shifted_up());
    M.set_coeff(n, s.coeff(n));
  }
  return M;
}

// --------------------------------------------------------------------------
// Convolutions, powers, BBP
// --------------------------------------------------------------------------

StarDistribution free_convolve(const StarDistribution& a, const StarDistribution& b) {
  NcSeries r = r_from_moments(a.moments) + r_from_moments(b.moments);
  return StarDistribution(moments_from_r(r));
}

StarDistribution boolean_convolve(const StarDistribution& a, const StarDistribution& b) {
  NcSeries e = eta_from_moments(a.moments) + eta_from_moments(b.moments);
  return StarDistribution(moments_from_eta(e));
}

PowerSeries free_convolve1(const PowerSeries& ma, const PowerSeries& mb) {
  return moments_from_r1(r_from_moments1(ma) + r_from_moments1(mb));
}

PowerSeries boolean_convolve1(const PowerSeries& ma, const PowerSeries& mb) {
  return moments_from_eta1(eta_from_moments1(ma) + eta_from_moments1(mb));
}

namespace {

void check_power(const Rational& t) {
  if (t <= 0) throw std::invalid_argument("convolution power requires t > 0");
}

}  // namespace

StarDistribution convolution_power(const StarDistribution& a, const Rational& t,
                                   ConvolutionKind kind) {
  check_power(t);
  if (kind == ConvolutionKind::Free) {
    return StarDistribution(moments_from_r(r_from_moments(a.moments).scaled(Coeff(t))));
  }
  return StarDistribution(moments_from_eta(eta_from_moments(a.moments).scaled(Coeff(t))));
}

PowerSeries convolution_power1(const PowerSeries& m, const Rational& t, ConvolutionKind kind) {
  check_power(t);
  if (kind == ConvolutionKind::Free) {
    return moments_from_r1(r_from_moments1(m).scaled(Coeff(t)));
  }
  return moments_from_eta1(eta_from_moments1(m).scaled(Coeff(t)));
}

StarDistribution bbp(const StarDistribution& mu) {
  return StarDistribution(moments_from_r(eta_from_moments(mu.moments)));
}

PowerSeries bbp1(const PowerSeries& m) { return moments_from_r1(eta_from_moments1(m)); }

// --------------------------------------------------------------------------
// S-transform and boxtimes
// --------------------------------------------------------------------------

PowerSeries s_transform(const PowerSeries& m) {
  if (!m.zero_constant_term()) throw std::invalid_argument("moment series must have zero constant term");
  if (m.coeff(1).is_zero()) {
    throw std::invalid_argument("S-transform undefined at zero mean");
  }
  const int N = m.order();
  if (N < 2) throw std::invalid_argument("S-transform needs order >= 2");
  PowerSeries inv = ps_comp_inverse(m);
  // ((z+1)/z) M^{<-1>}: the 1/z cancels against the zero constant term.
  // Degree N of the quotient would need the (N+1)-st inverse coefficient,
  // so the result lives one order lower, with every coefficient exact.
  PowerSeries s(N - 1);
  for (int k = 0; k <= N - 1; ++k) {
    Coeff c = inv.coeff(k + 1);
    if (k >= 1) c += inv.coeff(k);
    s.set_coeff(k, c);
  }
  return s;
}

PowerSeries moments_from_s(const PowerSeries& s) {
  const int N = s.order() + 1;  // inverse of s_transform recovers one order
  if (s.coeff(0).is_zero()) {
    throw std::invalid_argument("S-transform must have nonzero constant term");
  }
  PowerSeries zs(N);
  for (int k = 1; k <= N; ++k) zs.set_coeff(k, s.coeff(k - 1));
  PowerSeries minv = zs * ps_reciprocal(one_plus(PowerSeries::identity(N)));
  return ps_comp_inverse(minv);
}

Rational measure_moment(const AtomicMeasure& sigma, int n) {
  if (n < 1) throw std::invalid_argument("moment index must be >= 1");
  Rational total(0);
  for (const auto& [t, w] : sigma.atoms()) {
    Rational p(1);
    for (int k = 0; k < n; ++k) p *= t;
    total += w * p;
  }
  return total;
}

PowerSeries moment_series(const AtomicMeasure& sigma, int N) {
  PowerSeries m(N);
  for (const auto& [t, w] : sigma.atoms()) {
    Rational p(1);
    for (int n = 1; n <= N; ++n) {
      p *= t;
      m.set_coeff(n, m.coeff(n) + Coeff(w * p));
    }
  }
  return m;
}

PowerSeries eta_of_measure(const AtomicMeasure& sigma, int N) {
  return eta_from_moments1(moment_series(sigma, N));
}

PowerSeries free_mult_convolve_series(const PowerSeries& ma, const PowerSeries& mb) {
  return moments_from_s(s_transform(ma) * s_transform(mb));
}

PowerSeries free_mult_convolve_oracle(const PowerSeries& ma, const PowerSeries& mb, int cap) {
  const int N = ma.order();
  PowerSeries ka = r_from_moments1(ma, cap);
  PowerSeries kb = r_from_moments1(mb, cap);
  PowerSeries out(N);
  std::string pattern;
  for (int n = 1; n <= N; ++n) {
    pattern += "ab";
    out.set_coeff(n, free_mixed_moment(ka, kb, pattern, cap));
  }
  return out;
}

PowerSeries free_mult_convolve_measures(const AtomicMeasure& sigma, const AtomicMeasure& tau,
                                        int N, int cap) {
  PowerSeries ms = moment_series(sigma, N);
  PowerSeries mt = moment_series(tau, N);
  if (!ms.coeff(1).is_zero() && !mt.coeff(1).is_zero()) {
    return free_mult_convolve_series(ms, mt);
  }
  return free_mult_convolve_oracle(ms, mt, cap);  // throws past the cap
}

PowerSeries free_poisson_r(const FreePoissonParams& p, int N) {
  if (p.rate <= 0 || p.jump <= 0) throw std::invalid_argument("free Poisson parameters must be positive");
  PowerSeries r(N);
  Rational c = p.rate * p.jump;
  for (int n = 1; n <= N; ++n) {
    r.set_coeff(n, Coeff(c));
    c *= p.jump;
  }
  return r;
}

PowerSeries free_poisson_moments(const FreePoissonParams& p, int N) {
  return moments_from_r1(free_poisson_r(p, N));
}

// --------------------------------------------------------------------------
// Complexification
// --------------------------------------------------------------------------

namespace {

// Images under the change of variables; index [target][source] with
// target/source in {0,1} for letters '1','*' (source) or x1,x2 (target).
struct LetterMatrix {
  Coeff t[2][2];
};

LetterMatrix forward_matrix() {
  LetterMatrix m;
  const Coeff half(Rational(1, 2));
  const Coeff half_over_i = Coeff(Rational(0), Rational(-1, 2));  // 1/(2i)
  m.t[0][0] = half;          // t_{1,1}
  m.t[0][1] = half;          // t_{1,*}
  m.t[1][0] = half_over_i;   // t_{2,1}
  m.t[1][1] = -half_over_i;  // t_{2,*}
  return m;
}

LetterMatrix inverse_matrix() {
  LetterMatrix m;
  m.t[0][0] = Coeff(1);      // t'_{1,1}
  m.t[0][1] = Coeff::i();    // t'_{1,2}
  m.t[1][0] = Coeff(1);      // t'_{*,1}
  m.t[1][1] = -Coeff::i();   // t'_{*,2}
  return m;
}

// Each source word of length n spreads over all 2^n target words with the
// product of matrix entries as weight.
NcSeries apply_letter_matrix(const NcSeries& f, const LetterMatrix& m) {
  NcSeries out(f.order());
  std::string target;
  std::function<void(const Word&, std::size_t, const Coeff&, const Coeff&)> spread =
      [&](const Word& src, std::size_t pos, const Coeff& weight, const Coeff& base) {
        if (weight.is_zero()) return;
        if (pos == src.size()) {
          out.add_coeff(Word(target), weight * base);
          return;
        }
        const int col = src.at(pos) == Letter::One ? 0 : 1;
        for (int row = 0; row < 2; ++row) {
          target.push_back(row == 0 ? '1' : '*');
          spread(src, pos + 1, weight * m.t[row][col], base);
          target.pop_back();
        }
      };
  for (const auto& [w, c] : f.terms()) {
    target.clear();
    spread(w, 0, Coeff(1), c);
  }
  return out;
}

}  // namespace

NcSeries complexify(const NcSeries& f) { return apply_letter_matrix(f, forward_matrix()); }
NcSeries decomplexify(const NcSeries& g) { return apply_letter_matrix(g, inverse_matrix()); }

// --------------------------------------------------------------------------
// Truncated Stieltjes test
// --------------------------------------------------------------------------

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      sign = -sign;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return sign < 0 ? Rational(-det) : det;
}

bool rational_psd(const std::vector<std::vector<Rational>>& m, std::string* witness) {
  const std::size_t n = m.size();
  // All principal minors (not just leading ones); with semidefiniteness the
  // leading-minor criterion is not sufficient.
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    }
    std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
    Rational d = rational_determinant(std::move(sub));
    if (d < 0) {
      if (witness) {
        std::string s = "negative principal minor {";
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(idx[i]);
        }
        s += "} = " + d.get_str();
        *witness = s;
      }
      return false;
    }
  }
  return true;
}

EPlusResult in_E_plus_truncated(const PowerSeries& f, int N) {
  EPlusResult res;
  res.order = N;
  if (!f.is_real()) {
    res.reason = "not real";
    return res;
  }
  if (!f.zero_constant_term()) {
    res.reason = "nonzero constant term";
    return res;
  }
  PowerSeries fN(N);
  for (int n = 1; n <= N; ++n) fN.set_coeff(n, f.coeff(n));
  PowerSeries M = moments_from_eta1(fN);
  std::vector<Rational> m(static_cast<std::size_t>(N) + 1);
  m[0] = 1;
  for (int n = 1; n <= N; ++n) m[static_cast<std::size_t>(n)] = M.coeff(n).re();

  auto hankel = [&](int shift, int size) {
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(size),
                                         std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m[static_cast<std::size_t>(i + j + shift)];
    return h;
  };

  std::string witness;
  if (!rational_psd(hankel(0, N / 2 + 1), &witness)) {
    res.reason = "Hankel (m_{i+j}): " + witness;
    return res;
  }
  if (!rational_psd(hankel(1, (N - 1) / 2 + 1), &witness)) {
    res.reason = "shifted Hankel (m_{i+j+1}): " + witness;
    return res;
  }
  res.pass = true;
  return res;
}

}  // namespace ncprob
