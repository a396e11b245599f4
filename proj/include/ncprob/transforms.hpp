#ifndef NCPROB_TRANSFORMS_HPP
#define NCPROB_TRANSFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncprob/series.hpp"

namespace ncprob {

/// A *-distribution given through its truncated moment series: the
/// coefficient of a word w is mu(Z^w), with mu(1) = 1 implicit.
struct StarDistribution {
  NcSeries moments;

  explicit StarDistribution(NcSeries m) : moments(std::move(m)) {}
  int order() const { return moments.order(); }
  Coeff moment(const Word& w) const { return moments.coeff(w); }
};

/// Finitely supported probability measure on the reals with exact rational
/// atom positions and weights. Weights are positive and sum to one;
/// positions are distinct.
class AtomicMeasure {
 public:
  using Atom = std::pair<Rational, Rational>;  // (position, weight)

  explicit AtomicMeasure(std::vector<Atom> atoms);
  static AtomicMeasure dirac(const Rational& position);

  const std::vector<Atom>& atoms() const { return atoms_; }
  /// True when every atom sits in [0, inf), i.e. the measure is a legal
  /// parameter for the maps that need measures on the half line.
  bool nonnegative_support() const;
  Rational mean() const;

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<Atom> atoms_;
};

struct FreePoissonParams {
  Rational rate;  // p > 0
  Rational jump;  // q > 0
};

// ---------------------------------------------------------------------------
// Two-variable transforms.
// ---------------------------------------------------------------------------

/// eta = M (1+M)^{-1}.
NcSeries eta_from_moments(const NcSeries& M);
/// M = eta (1-eta)^{-1} = sum_{k>=1} eta^k.
NcSeries moments_from_eta(const NcSeries& eta);

/// Interval-partition sums, the coefficientwise counterparts of the two maps
/// above: independent oracles used to cross-check them.
Coeff eta_coeff_oracle(const NcSeries& M, const Word& w, int cap = kDefaultOracleCap);
Coeff moment_coeff_oracle(const NcSeries& eta, const Word& w, int cap = kDefaultOracleCap);

/// The R-transform via the moment-cumulant relation: triangular solve of
/// Cf_w(M) = sum over non-crossing partitions of the block products of R.
NcSeries r_from_moments(const NcSeries& M, int cap = kDefaultOracleCap);
NcSeries moments_from_r(const NcSeries& R, int cap = kDefaultOracleCap);

/// Same conversions through the functional equation
/// R(z(1+M), z*(1+M)) = M, solved degree by degree. A second, independent
/// code path used to pit against the partition sums.
NcSeries r_from_moments_functional(const NcSeries& M);
NcSeries moments_from_r_functional(const NcSeries& R);

// ---------------------------------------------------------------------------
// One-variable transforms.
// ---------------------------------------------------------------------------

PowerSeries eta_from_moments1(const PowerSeries& M);
PowerSeries moments_from_eta1(const PowerSeries& eta);
Coeff eta_coeff_oracle1(const PowerSeries& M, int n);
Coeff moment_coeff_oracle1(const PowerSeries& eta, int n);

PowerSeries r_from_moments1(const PowerSeries& M, int cap = kDefaultOracleCap);
PowerSeries moments_from_r1(const PowerSeries& R, int cap = kDefaultOracleCap);
PowerSeries r_from_moments1_functional(const PowerSeries& M);
PowerSeries moments_from_r1_functional(const PowerSeries& R);

// ---------------------------------------------------------------------------
// Convolutions and the BBP bijection.
// ---------------------------------------------------------------------------

enum class ConvolutionKind { Free, Boolean };

/// Free convolution adds R-transforms; Boolean convolution adds eta-series.
/// Inputs and outputs are moment series.
StarDistribution free_convolve(const StarDistribution& a, const StarDistribution& b);
StarDistribution boolean_convolve(const StarDistribution& a, const StarDistribution& b);
PowerSeries free_convolve1(const PowerSeries& ma, const PowerSeries& mb);
PowerSeries boolean_convolve1(const PowerSeries& ma, const PowerSeries& mb);

/// Convolution power: scales the R-transform (free) or eta-series (Boolean)
/// by t > 0 and returns moments. Any positive rational t is accepted at the
/// series level; positivity of the result is not asserted here.
StarDistribution convolution_power(const StarDistribution& a, const Rational& t,
                                   ConvolutionKind kind);
PowerSeries convolution_power1(const PowerSeries& m, const Rational& t,
                               ConvolutionKind kind);

/// The Boolean-to-free bijection at series level: the output's R-transform
/// equals the input's eta-series.
StarDistribution bbp(const StarDistribution& mu);
PowerSeries bbp1(const PowerSeries& m);

// ---------------------------------------------------------------------------
// S-transform and multiplicative convolution.
// ---------------------------------------------------------------------------

/// S(z) = ((z+1)/z) M^{<-1>}(z), a unital series with constant term 1/m1.
/// Defined for series with nonzero first moment. The result has order N-1:
/// its degree-N coefficient would need the inverse series one past the
/// truncation, so it is not representable exactly. moments_from_s undoes
/// this, returning moments of order K+1.
PowerSeries s_transform(const PowerSeries& m);
PowerSeries moments_from_s(const PowerSeries& s);

Rational measure_moment(const AtomicMeasure& sigma, int n);
/// Moment series sum w_i t_i^n z^n up to order N.
PowerSeries moment_series(const AtomicMeasure& sigma, int N);
PowerSeries eta_of_measure(const AtomicMeasure& sigma, int N);

/// Moments of the free multiplicative convolution, via the product of
/// S-transforms. Requires both first moments nonzero.
PowerSeries free_mult_convolve_series(const PowerSeries& ma, const PowerSeries& mb);
/// Independent route: mixed-moment partition sums (freeness), no mean
/// restriction, subject to the enumeration cap.
PowerSeries free_mult_convolve_oracle(const PowerSeries& ma, const PowerSeries& mb,
                                      int cap = kDefaultOracleCap);
/// S-transform path when both means are nonzero, otherwise falls through to
/// the partition-sum oracle.
PowerSeries free_mult_convolve_measures(const AtomicMeasure& sigma, const AtomicMeasure& tau,
                                        int N, int cap = kDefaultOracleCap);

/// Moment series of the free Poisson law with R-transform pqz/(1-qz);
/// rate 1 jump 1 gives the Catalan moments.
PowerSeries free_poisson_moments(const FreePoissonParams& p, int N);
PowerSeries free_poisson_r(const FreePoissonParams& p, int N);

// ---------------------------------------------------------------------------
// Complexification.
// ---------------------------------------------------------------------------

/// Linear change of variables z = x1 + i x2, z* = x1 - i x2 at series level:
/// coefficient matrix t_{1,1} = t_{1,*} = 1/2, t_{2,1} = 1/(2i),
/// t_{2,*} = -1/(2i). In the image, the letter '1' stands for x1 and '*'
/// for x2. decomplexify applies the inverse matrix; the two compose to the
/// identity.
NcSeries complexify(const NcSeries& f);
NcSeries decomplexify(const NcSeries& g);

// ---------------------------------------------------------------------------
// Truncated membership test for eta-series of measures on the half line.
// ---------------------------------------------------------------------------

struct EPlusResult {
  bool pass = false;
  int order = 0;
  std::string reason;  // empty on pass
};

/// Necessary condition for f to be the eta-series of a compactly supported
/// probability measure on [0, inf), checked up to order N: recover the
/// candidate moments m_k from M = f(1-f)^{-1} with m_0 = 1 and require both
/// Hankel matrices (m_{i+j}) and (m_{i+j+1}) to be positive semidefinite.
/// The PSD test is exact: every principal minor must be >= 0. A pass
/// certifies only the absence of an obstruction up to order N.
EPlusResult in_E_plus_truncated(const PowerSeries& f, int N);

/// Exact determinant of a rational matrix (Gaussian elimination).
Rational rational_determinant(std::vector<std::vector<Rational>> m);
/// Exact PSD test through all principal minors; fills *witness with a
/// description of the first negative minor if any.
bool rational_psd(const std::vector<std::vector<Rational>>& m, std::string* witness);

}  // namespace ncprob

#endif
