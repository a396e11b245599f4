#ifndef NCPROB_OPMODEL_HPP
#define NCPROB_OPMODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "ncprob/transforms.hpp"

namespace ncprob {

/// Symmetric square root of a measure on [0, inf): every atom (t, w) with
/// t > 0 splits into (-sqrt(t), w/2) and (sqrt(t), w/2); an atom at zero
/// stays put. Square roots are irrational in general, so this is the one
/// place where positions turn into floating point.
std::vector<std::pair<double, double>> symmetric_sqrt(const AtomicMeasure& sigma);

/// Finite-dimensional realization of the tensor-product operator model:
/// H = M1 (+) M2 carries X = T1 (+) T2 and the unit vectors xi1, xi2; Y is
/// the rank-one partial isometry zeta -> <zeta, xi1> xi2; on K = H (x) H,
/// V flips the tensor factors and A = V (Y (x) X). The vector state at
/// xi = xi1 (x) xi2 reproduces the eta-diagonal distribution parametrized
/// by (sigma1, sigma2); the model is the library's independent numerical
/// oracle for that map.
struct OperatorModel {
  int dim_h = 0;
  Eigen::MatrixXcd X, Y, V, A;
  Eigen::VectorXcd xi1, xi2, xi;
};

OperatorModel build_model(const AtomicMeasure& sigma1, const AtomicMeasure& sigma2);

/// phi_xi(A^w): matrix product with A for the letter '1' and A* for '*'.
std::complex<double> model_star_moment(const OperatorModel& m, const Word& w);

/// Mixed moment of two free variables from their cumulant series: sum over
/// non-crossing partitions whose blocks are monochromatic in the pattern
/// coloring (mixed blocks vanish by freeness). pattern is a string over
/// {'a','b'}; kappa(n) is read from coefficient n of the cumulant series.
/// Exact rational arithmetic.
Coeff free_mixed_moment(const PowerSeries& kappa_a, const PowerSeries& kappa_b,
                        const std::string& pattern, int cap = kDefaultOracleCap);

}  // namespace ncprob

#endif
