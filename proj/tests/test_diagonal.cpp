#include <doctest.h>

#include "ncprob/diagonal.hpp"
#include "ncprob/rng.hpp"

using namespace ncprob;

namespace {

DeterminingPair pair1(Coeff a1, Coeff b1) {
  DeterminingPair d;
  d.set_alpha(1, std::move(a1));
  d.set_beta(1, std::move(b1));
  return d;
}

}  // namespace

TEST_CASE("eta-diagonal laws from determining pairs") {
  const Coeff a(Rational(2, 3)), b(Rational(-1, 2));
  StarDistribution mu = make_eta_diagonal(pair1(a, b), 8);
  Coeff pa(1), pb(1);
  for (int n = 1; n <= 4; ++n) {
    pa *= a;
    pb *= b;
    CHECK(mu.moment(Word::alternating(Letter::One, n)) == pa);
    CHECK(mu.moment(Word::alternating(Letter::Star, n)) == pb);
  }
  CHECK(mu.moment(Word("1**1")) == a * b);
  CHECK(mu.moment(Word("1")) == Coeff(0));
  CHECK(mu.moment(Word("*")) == Coeff(0));
  CHECK(mu.moment(Word("11")) == Coeff(0));

  CHECK(make_eta_diagonal(DeterminingPair{}, 6).moments.is_zero());
}

TEST_CASE("R-diagonal laws from determining pairs") {
  StarDistribution nu = make_r_diagonal(pair1(Coeff(1), Coeff(1)), 6);
  CHECK(nu.moment(Word("1*1*")) == Coeff(2));  // two non-crossing pairings survive
  CHECK(nu.moment(Word("1*")) == Coeff(1));
  for (int n = 1; n <= 6; ++n) {
    CHECK(nu.moment(Word(std::string(static_cast<std::size_t>(n), '1'))) == Coeff(0));
  }
  CHECK(make_r_diagonal(DeterminingPair{}, 5).moments.is_zero());
}

TEST_CASE("moment characterization of eta-diagonality") {
  RandomSource rng(71);
  DeterminingPair d = rng.determining_pair(3, false);
  StarDistribution mu = make_eta_diagonal(d, 6);
  CHECK(check_eta_diagonal_moments(mu).yes);

  NcSeries bad1 = mu.moments;
  bad1.set_coeff(Word("11"), Coeff(1));
  auto r1 = check_eta_diagonal_moments(StarDistribution(bad1));
  CHECK_FALSE(r1.yes);
  CHECK(r1.witness->str() == "11");

  NcSeries bad2 = mu.moments;
  bad2.set_coeff(Word("1**1"), mu.moment(Word("1**1")) + Coeff(1));
  auto r2 = check_eta_diagonal_moments(StarDistribution(bad2));
  CHECK_FALSE(r2.yes);
  CHECK(r2.witness->str() == "1**1");
}

TEST_CASE("eta-series of the products ZZ* and Z*Z") {
  RandomSource rng(73);
  DeterminingPair d = rng.determining_pair(4, false);
  StarDistribution mu = make_eta_diagonal(d, 8);
  auto [e1, e2] = product_eta(mu);
  for (int n = 1; n <= 4; ++n) {
    CHECK(e1.coeff(n) == d.alpha(n));
    CHECK(e2.coeff(n) == d.beta(n));
  }

  auto [z1, z2] = product_eta(make_eta_diagonal(DeterminingPair{}, 6));
  CHECK(z1.is_zero());
  CHECK(z2.is_zero());

  StarDistribution notdiag{NcSeries(4)};
  NcSeries m(4);
  m.set_coeff(Word("11"), Coeff(1));
  CHECK_THROWS_AS(product_eta(StarDistribution(m)), std::invalid_argument);
}

TEST_CASE("R-transforms of the products: listed coefficients and routes") {
  RandomSource rng(79);
  DeterminingPair d = rng.determining_pair(5, true);
  ProductR pr = product_r(d, 5);
  CHECK(pr.method == "partition-sum+composition");
  const Coeff a1 = d.alpha(1), a2 = d.alpha(2), a3 = d.alpha(3);
  const Coeff b1 = d.beta(1), b2 = d.beta(2);
  CHECK(pr.zzstar.coeff(1) == a1);
  CHECK(pr.zzstar.coeff(2) == a2 + a1 * b1);
  CHECK(pr.zzstar.coeff(3) == a3 + Coeff(2) * a2 * b1 + a1 * b2 + a1 * b1 * b1);

  // beta = 0 collapses R_{ZZ*} to the alpha series
  DeterminingPair dz = d;
  for (int n = 1; n <= 5; ++n) dz.set_beta(n, Coeff());
  ProductR przero = product_r(dz, 5);
  for (int n = 1; n <= 5; ++n) CHECK(przero.zzstar.coeff(n) == d.alpha(n));

  // lambda-circular
  const Rational lam(5, 7);
  ProductR circ = product_r(pair1(Coeff(lam), Coeff(1)), 6);
  Rational geo(1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(circ.zzstar.coeff(n) == Coeff(lam));
    CHECK(circ.starz.coeff(n) == Coeff(geo));
    geo *= lam;
  }

  DeterminingPair back = pair_from_product_r(pr.zzstar, pr.starz);
  CHECK(back == d);
}

TEST_CASE("parametrization by measures") {
  const Rational lam(3);
  StarDistribution mu = phi(AtomicMeasure::dirac(lam), AtomicMeasure::dirac(1), 8);
  NcSeries eta = eta_from_moments(mu.moments);
  DeterminingPair d = pair_of_diagonal_series(eta);
  CHECK(d.alpha(1) == Coeff(lam));
  CHECK(d.beta(1) == Coeff(1));
  for (int n = 2; n <= d.length(); ++n) {
    CHECK(d.alpha(n) == Coeff(0));
    CHECK(d.beta(n) == Coeff(0));
  }

  StarDistribution ones = phi(AtomicMeasure::dirac(1), AtomicMeasure::dirac(1), 8);
  for (int n = 1; n <= 4; ++n) {
    CHECK(ones.moment(Word::alternating(Letter::One, n)) == Coeff(1));
  }

  CHECK_THROWS_AS(phi(AtomicMeasure::dirac(-1), AtomicMeasure::dirac(1), 6),
                  std::invalid_argument);

  // the raw moment-sequence entry point agrees where both apply
  AtomicMeasure half({{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}});
  StarDistribution via_measures = phi(half, AtomicMeasure::dirac(1), 8);
  StarDistribution via_moments =
      phi_from_moment_sequences(moment_series(half, 4), moment_series(AtomicMeasure::dirac(1), 4), 8);
  CHECK(via_measures.moments == via_moments.moments);
}

TEST_CASE("psi lands on infinitely divisible R-diagonal laws") {
  StarDistribution nu = psi(AtomicMeasure::dirac(1), AtomicMeasure::dirac(1), 8);
  const int catalan[] = {1, 2, 5, 14};
  for (int n = 1; n <= 4; ++n) {
    CHECK(nu.moment(Word::alternating(Letter::One, n)) == Coeff(catalan[n - 1]));
  }
  // R of the image equals eta of the preimage
  StarDistribution mu = phi(AtomicMeasure::dirac(1), AtomicMeasure::dirac(1), 8);
  CHECK(r_from_moments(nu.moments) == eta_from_moments(mu.moments));
}

TEST_CASE("theorem 6.2 compositions") {
  auto [r1, r2] = theorem62_products(AtomicMeasure::dirac(1), AtomicMeasure::dirac(1), 6);
  for (int n = 1; n <= 6; ++n) CHECK(r1.coeff(n) == Coeff(1));  // z/(1-z)

  AtomicMeasure half({{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}});
  auto [s1, s2] = theorem62_products(half, AtomicMeasure::dirac(0), 6);
  CHECK(s1 == eta_of_measure(half, 6));  // composing with z changes nothing
}

TEST_CASE("KMS condition and the trace-like identity") {
  const Rational t(4, 3);
  DeterminingPair d;
  d.set_beta(1, Coeff(1));
  d.set_beta(2, Coeff(Rational(1, 2)));
  d.set_alpha(1, Coeff(t));
  d.set_alpha(2, Coeff(t * Rational(1, 2)));
  CHECK(kms_check(d, t));
  CHECK_FALSE(kms_check(d, Rational(2)));

  StarDistribution nu = make_r_diagonal(d, 6);
  // n = 1 instance of the moment identity
  CHECK(nu.moment(Word("1*")) == Coeff(t) * nu.moment(Word("*1")));
  for (int lv = 0; lv <= 3; ++lv) {
    for (int lw = 0; lv + lw <= 6; ++lw) {
      if (lv + lw == 0) continue;
      for (const Word& v : all_words(lv)) {
        for (const Word& w : all_words(lw)) {
          CHECK(ut_identity_defect(nu, t, v, w).is_zero());
        }
      }
    }
  }

  // t = 1 with alpha = beta is the tracial case
  DeterminingPair sym = pair1(Coeff(2), Coeff(2));
  StarDistribution tr = make_r_diagonal(sym, 6);
  CHECK(ut_identity_defect(tr, Rational(1), Word("1*"), Word("*")).is_zero());
}

TEST_CASE("measure-side description of the KMS family") {
  const int N = 6;
  // sigma = delta_1, t = lambda: free Poisson laws on both sides
  const Rational lam(1, 2);
  auto [tau1, tau2] = kms_tau(AtomicMeasure::dirac(1), lam, N);
  CHECK(tau1 == free_poisson_moments(FreePoissonParams{lam, 1}, N));
  CHECK(tau2 == free_poisson_moments(FreePoissonParams{Rational(1) / lam, lam}, N));

  auto [p1, p2] = kms_tau(AtomicMeasure::dirac(1), Rational(1), N);
  CHECK(p1 == p2);
  CHECK(p1 == free_poisson_moments(FreePoissonParams{1, 1}, N));
}

TEST_CASE("truncated infinite divisibility of R-diagonal laws") {
  CHECK(is_infdiv_r_diagonal(pair1(Coeff(Rational(5, 2)), Coeff(1)), 6).pass);

  DeterminingPair bad;
  bad.set_alpha(1, Coeff(1));
  bad.set_alpha(2, Coeff(1));
  bad.set_beta(1, Coeff(1));
  bad.set_beta(2, Coeff(0));
  InfDivResult res = is_infdiv_r_diagonal(bad, 4);
  CHECK_FALSE(res.pass);
  CHECK(res.side == "alpha");

  RandomSource rng(83);
  for (int trial = 0; trial < 3; ++trial) {
    AtomicMeasure s1 = rng.atomic_measure(2);
    AtomicMeasure s2 = rng.atomic_measure(2);
    PowerSeries e1 = eta_of_measure(s1, 6), e2 = eta_of_measure(s2, 6);
    DeterminingPair d;
    for (int n = 1; n <= 6; ++n) {
      d.set_alpha(n, e1.coeff(n));
      d.set_beta(n, e2.coeff(n));
    }
    CHECK(is_infdiv_r_diagonal(d, 6).pass);
  }
}
