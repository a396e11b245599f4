#ifndef NCPROB_DIAGONAL_HPP
#define NCPROB_DIAGONAL_HPP

#include <optional>
#include <string>
#include <utility>

#include "ncprob/transforms.hpp"

namespace ncprob {

/// Determining sequences (alpha_n), (beta_n) of a diagonal series: the
/// coefficients of (zz*)^n and (z*z)^n respectively. 1-based accessors;
/// indices past the stored length read as zero.
class DeterminingPair {
 public:
  DeterminingPair() = default;
  DeterminingPair(std::vector<Coeff> alpha, std::vector<Coeff> beta);

  int length() const { return static_cast<int>(alpha_.size()); }
  Coeff alpha(int n) const;
  Coeff beta(int n) const;
  void set_alpha(int n, Coeff c);
  void set_beta(int n, Coeff c);
  const std::vector<Coeff>& alpha() const { return alpha_; }
  const std::vector<Coeff>& beta() const { return beta_; }

  bool is_real() const;
  DeterminingPair scaled(const Coeff& c) const;

  friend bool operator==(const DeterminingPair& a, const DeterminingPair& b);

 private:
  std::vector<Coeff> alpha_, beta_;  // [k] holds index n = k+1
};

/// The diagonal series sum alpha_n (zz*)^n + beta_n (z*z)^n, truncated.
NcSeries diagonal_series(const DeterminingPair& d, int order);
/// Extracts the determining pair of a diagonal series; throws if any
/// non-alternating word carries a nonzero coefficient.
DeterminingPair pair_of_diagonal_series(const NcSeries& f);
bool is_diagonal_series(const NcSeries& f, Word* offending = nullptr);

/// Distribution whose eta-series is the given diagonal series.
StarDistribution make_eta_diagonal(const DeterminingPair& d, int order);
/// Distribution whose R-transform is the given diagonal series.
StarDistribution make_r_diagonal(const DeterminingPair& d, int order);

struct DiagonalMomentCheck {
  bool yes = true;
  std::optional<Word> witness;  // first violated word
  std::string condition;        // which moment condition failed
};

/// Moment-level characterization of eta-diagonality: non-mixed-alternating
/// *-moments vanish, and mixed-alternating ones factor over the canonical
/// factorization. Checked for every word up to the order of mu.
DiagonalMomentCheck check_eta_diagonal_moments(const StarDistribution& mu);

/// eta-series of ZZ* and Z*Z of an eta-diagonal distribution, computed from
/// its one-variable moments through the interval-partition formula and
/// cross-checked against the determining sequences (they must agree).
std::pair<PowerSeries, PowerSeries> product_eta(const StarDistribution& mu);

struct ProductR {
  PowerSeries zzstar;
  PowerSeries starz;
  std::string method;  // "partition-sum+composition" or "composition"
  ProductR(PowerSeries a, PowerSeries b, std::string m)
      : zzstar(std::move(a)), starz(std::move(b)), method(std::move(m)) {}
};

/// One-variable R-transforms of ZZ* and Z*Z of the R-diagonal distribution
/// with determining pair d. Computed by the non-crossing partition sum
/// (block of 1 takes alpha, other blocks beta; roles swapped for Z*Z) and
/// independently by the composition R_a(z(1+M_b(z))); exact agreement is
/// enforced. Past the enumeration cap only the composition route runs and
/// the method field says so.
ProductR product_r(const DeterminingPair& d, int N, int cap = kDefaultOracleCap);

/// Partition-sum route alone (oracle building block).
std::pair<PowerSeries, PowerSeries> product_r_ncsum(const DeterminingPair& d, int N,
                                                    int cap = kDefaultOracleCap);
/// Composition route alone.
std::pair<PowerSeries, PowerSeries> product_r_composition(const DeterminingPair& d, int N);

/// Triangular inversion of the partition sums: recovers the determining
/// sequences from the pair (R_{ZZ*}, R_{Z*Z}) by isolating the full-block
/// term at each degree.
DeterminingPair pair_from_product_r(const PowerSeries& r_zzstar, const PowerSeries& r_starz,
                                    int cap = kDefaultOracleCap);

/// The unique eta-diagonal distribution whose ZZ* and Z*Z distributions are
/// sigma1 and sigma2; the determining pair is the pair of eta-series of the
/// measures. Requires nonnegative support.
StarDistribution phi(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2, int order);
/// Same construction from raw one-variable moment sequences for ZZ* and
/// Z*Z. No positivity witness: nothing certifies that these are moments of
/// measures on the half line, so the operator-model cross-check is
/// unavailable for laws built this way.
StarDistribution phi_from_moment_sequences(const PowerSeries& zzstar_moments,
                                           const PowerSeries& starz_moments, int order);
/// psi = bbp o phi: the infinitely divisible R-diagonal distribution with
/// the same determining pair.
StarDistribution psi(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2, int order);

/// R-transforms of ZZ*, Z*Z of psi(sigma1, sigma2) via the compositions
/// with the one-variable bijection: R_{B(sigma1)}(z(1+M_{B(sigma2)}(z)))
/// and the mirror image.
std::pair<PowerSeries, PowerSeries> theorem62_products(const AtomicMeasure& sigma1,
                                                       const AtomicMeasure& sigma2, int N);

/// alpha_n = t beta_n for all stored n.
bool kms_check(const DeterminingPair& d, const Rational& t);

/// mu(Z^v Z^w) - mu(Z^w U_t(Z^v)) where U_t scales Z by t and Z* by 1/t, so
/// U_t(Z^v) is the monomial scaled by t^(#1(v) - #*(v)). Zero for all
/// monomials iff the trace-like identity holds.
Coeff ut_identity_defect(const StarDistribution& mu, const Rational& t, const Word& v,
                         const Word& w);

/// Moment series of the ZZ* and Z*Z distributions of the KMS family
/// psi(sigma^{Boolean t}, sigma), computed measure-side:
/// tau1 = (B(sigma) boxtimes Pi1)^{boxplus t},
/// tau2 = (B(sigma)^{boxplus t} boxtimes Pi1)^{boxplus 1/t}.
std::pair<PowerSeries, PowerSeries> kms_tau(const AtomicMeasure& sigma, const Rational& t, int N);

struct InfDivResult {
  bool pass = false;
  std::string side;    // "alpha" or "beta" when failing
  std::string reason;  // forwarded Hankel witness
};

/// Truncated infinite-divisibility test for an R-diagonal distribution:
/// both determining series must look like eta-series of measures on the
/// half line (Hankel positivity up to order N).
InfDivResult is_infdiv_r_diagonal(const DeterminingPair& d, int N);

}  // namespace ncprob

#endif
