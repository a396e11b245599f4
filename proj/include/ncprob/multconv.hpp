#ifndef NCPROB_MULTCONV_HPP
#define NCPROB_MULTCONV_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncprob/diagonal.hpp"

namespace ncprob {

/// A pair of partitions (pi, rho) of the odd and even positions of {1..2n}
/// whose union is non-crossing on the interleaved ground set. Blocks keep
/// their original position labels.
struct SplitNcPair {
  std::vector<std::vector<int>> odd_blocks;   // pi, first block contains 1
  std::vector<std::vector<int>> even_blocks;  // rho
};

/// Enumerates every SplitNcPair for the ground set {1..2n}: exactly the
/// non-crossing partitions of 2n points all of whose blocks are
/// parity-pure.
void for_each_split_nc_pair(int n, const std::function<void(const SplitNcPair&)>& visit,
                            int cap = kDefaultOracleCap);

/// Determining pair of the free multiplicative convolution of two
/// R-diagonal distributions, by direct enumeration of split non-crossing
/// pairs: the block containing 1 takes alpha (respectively the primed beta
/// for the second sequence), the remaining odd blocks beta (primed alpha),
/// and the even blocks the primed alpha (beta).
DeterminingPair boxtimes_determining_oracle(const DeterminingPair& d, const DeterminingPair& dp,
                                            int N, int cap = kDefaultOracleCap);

/// Composition route: alpha-hat series = R_a o R_b^{<-1>} o M_{ba'} and
/// beta-hat series = R_{b'} o R_{a'}^{<-1>} o M_{a'b}, with the mixed
/// moment series produced by the freeness partition sums. Needs beta_1 and
/// alpha'_1 nonzero; the all-zero degenerate branches are handled by their
/// closed forms. Throws when a sequence vanishes at 1 but not identically.
DeterminingPair boxtimes_determining_fast(const DeterminingPair& d, const DeterminingPair& dp,
                                          int N, int cap = kDefaultOracleCap);

/// Subordination form of the same series: alpha-hat =
/// R_a(F(z)(1+M_b(F(z)))) with F = M_b^{<-1>} o M_{ba'}, and mirrored for
/// beta-hat. Same preconditions as the fast route.
DeterminingPair boxtimes_determining_subordination(const DeterminingPair& d,
                                                   const DeterminingPair& dp, int N,
                                                   int cap = kDefaultOracleCap);

struct BoxtimesResult {
  DeterminingPair pair;
  std::string method;  // routes that ran and agreed
};

/// Reconciling front end: runs the composition route when its
/// preconditions hold and the oracle when within the cap, and insists on
/// exact agreement whenever both ran.
BoxtimesResult boxtimes_determining(const DeterminingPair& d, const DeterminingPair& dp, int N,
                                    int cap = kDefaultOracleCap);

struct Theorem78Check {
  bool pass = false;
  DeterminingPair product;
  InfDivResult infdiv;
};

/// Builds nu = psi(sigma1, sigma2) and nu' = psi(sigma1', sigma2'),
/// convolves, and runs the truncated infinite-divisibility test on the
/// product's determining pair.
Theorem78Check theorem78_check(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2,
                               const AtomicMeasure& sigma1p, const AtomicMeasure& sigma2p, int N,
                               int cap = kDefaultOracleCap);

struct LambdaLadderStep {
  PowerSeries moments_recursion;  // S-transform recursion route
  PowerSeries moments_product;    // explicit measure product route
};

/// The parameter measure sigma_k of the k-th power of a lambda-circular
/// element, computed two ways: (i) the S-transform recursion
/// S_{B(sigma_{k+1})}(z) = S_{B(sigma_k)}(lambda z) / (1 + lambda z) seeded
/// with the constant series 1, followed by inversion back to moments;
/// (ii) the free multiplicative product of the two-atom measures
/// tau_j = (lambda^j/(1+lambda^j)) delta_0 + (1/(1+lambda^j)) delta_{1+lambda^j}.
/// Both routes are returned; they must agree coefficientwise.
LambdaLadderStep lambda_circular_sigma(const Rational& lambda, int k, int N);

/// tau_j above, as an exact atomic measure.
AtomicMeasure lambda_circular_tau(const Rational& lambda, int j);

}  // namespace ncprob

#endif
