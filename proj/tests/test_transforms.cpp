#include <doctest.h>

#include "ncprob/rng.hpp"
#include "ncprob/transforms.hpp"

using namespace ncprob;

namespace {

PowerSeries constant_moments(int order, Coeff value) {
  PowerSeries m(order);
  Coeff p(1);
  for (int n = 1; n <= order; ++n) {
    p *= value;
    m.set_coeff(n, p);
  }
  return m;
}

}  // namespace

TEST_CASE("eta from moments, two variables") {
  NcSeries m(3);
  m.set_coeff(Word("1"), Coeff(Rational(2, 5)));
  NcSeries eta = eta_from_moments(m);
  CHECK(eta.coeff(Word("1")) == Coeff(Rational(2, 5)));
  CHECK(eta.coeff(Word("11")) == Coeff(Rational(-4, 25)));
  CHECK(eta.coeff(Word("111")) == Coeff(Rational(8, 125)));

  CHECK(eta_from_moments(NcSeries(4)).is_zero());

  RandomSource rng(31);
  NcSeries mm = rng.nc_series(4, false);
  NcSeries e = eta_from_moments(mm);
  // Cf_{1*}(eta) = mu(ZZ*) - mu(Z) mu(Z*)
  CHECK(e.coeff(Word("1*")) ==
        mm.coeff(Word("1*")) - mm.coeff(Word("1")) * mm.coeff(Word("*")));
  CHECK(moments_from_eta(e) == mm);
}

TEST_CASE("interval-sum oracles match the series algebra") {
  RandomSource rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    NcSeries m = rng.nc_series(5, false);
    NcSeries eta = eta_from_moments(m);
    for (int n = 1; n <= 5; ++n) {
      for (const Word& w : all_words(n)) {
        CHECK(eta_coeff_oracle(m, w) == eta.coeff(w));
        CHECK(moment_coeff_oracle(eta, w) == m.coeff(w));
      }
    }
    CHECK(eta_coeff_oracle(m, Word("1")) == m.coeff(Word("1")));
  }
}

TEST_CASE("R-transform of a delta-like element") {
  NcSeries m(4);
  for (int n = 1; n <= 4; ++n) {
    std::string ones(static_cast<std::size_t>(n), '1');
    m.set_coeff(Word(ones), Coeff(1));
  }
  NcSeries r = r_from_moments(m);
  CHECK(r.coeff(Word("1")) == Coeff(1));
  CHECK(r.coeff(Word("11")) == Coeff(0));
  CHECK(r.coeff(Word("111")) == Coeff(0));
  CHECK(r.coeff(Word("1111")) == Coeff(0));
  CHECK(r_from_moments(NcSeries(3)).is_zero());
}

TEST_CASE("moment/R round trips and the functional equation") {
  RandomSource rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    NcSeries r = rng.nc_series(5, false);
    NcSeries m = moments_from_r(r);
    CHECK(moments_from_r_functional(r) == m);
    CHECK(r_from_moments(m) == r);
    CHECK(r_from_moments_functional(m) == r);
  }
}

TEST_CASE("one-variable transforms") {
  // delta_1: moments all one
  PowerSeries d1 = constant_moments(6, Coeff(1));
  PowerSeries eta = eta_from_moments1(d1);
  CHECK(eta == PowerSeries::identity(6));

  // the free Poisson law has Catalan moments
  PowerSeries r = free_poisson_r(FreePoissonParams{1, 1}, 6);
  PowerSeries mom = moments_from_r1(r);
  const int catalan[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(mom.coeff(n) == Coeff(catalan[n - 1]));
  CHECK(moments_from_r1_functional(r) == mom);
  CHECK(r_from_moments1(mom) == r);
  CHECK(r_from_moments1_functional(mom) == r);

  PowerSeries zero(5);
  CHECK(eta_from_moments1(zero).is_zero());
  CHECK(r_from_moments1(zero).is_zero());

  RandomSource rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    PowerSeries m = rng.power_series(6, false);
    CHECK(moments_from_eta1(eta_from_moments1(m)) == m);
    for (int n = 1; n <= 6; ++n) {
      CHECK(eta_coeff_oracle1(m, n) == eta_from_moments1(m).coeff(n));
      CHECK(moment_coeff_oracle1(eta_from_moments1(m), n) == m.coeff(n));
    }
  }
}

TEST_CASE("free and Boolean convolution") {
  PowerSeries d1 = constant_moments(4, Coeff(1));
  PowerSeries d2 = constant_moments(4, Coeff(2));
  CHECK(free_convolve1(d1, d1) == d2);
  CHECK(boolean_convolve1(d1, d1) == d2);

  // neutral element
  RandomSource rng(47);
  StarDistribution mu(rng.nc_series(4, false));
  StarDistribution zero{NcSeries(4)};
  CHECK(free_convolve(mu, zero).moments == mu.moments);
  CHECK(boolean_convolve(mu, zero).moments == mu.moments);
}

TEST_CASE("convolution powers") {
  PowerSeries d1 = constant_moments(5, Coeff(1));
  CHECK(convolution_power1(d1, Rational(2), ConvolutionKind::Boolean) ==
        constant_moments(5, Coeff(2)));
  RandomSource rng(53);
  PowerSeries m = rng.power_series(5, false);
  CHECK(convolution_power1(m, Rational(1), ConvolutionKind::Free) == m);
  // free power of the free Poisson law scales the rate
  PowerSeries pi = free_poisson_moments(FreePoissonParams{1, 1}, 5);
  CHECK(convolution_power1(pi, Rational(3, 2), ConvolutionKind::Free) ==
        free_poisson_moments(FreePoissonParams{Rational(3, 2), 1}, 5));
  CHECK_THROWS_AS(convolution_power1(m, Rational(0), ConvolutionKind::Free),
                  std::invalid_argument);
}

TEST_CASE("one-variable bijection") {
  AtomicMeasure half({{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}});
  PowerSeries img = bbp1(moment_series(half, 5));
  const int catalan[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) CHECK(img.coeff(n) == Coeff(catalan[n - 1]));

  PowerSeries d1 = constant_moments(5, Coeff(1));
  CHECK(bbp1(d1) == d1);  // eta and R of the point mass at one coincide

  StarDistribution zero{NcSeries(4)};
  CHECK(bbp(zero).moments.is_zero());
}

TEST_CASE("S-transform") {
  PowerSeries pi = free_poisson_moments(FreePoissonParams{1, 1}, 6);
  PowerSeries s = s_transform(pi);  // 1/(1+z), one order below the moments
  REQUIRE(s.order() == 5);
  for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == (n % 2 == 0 ? Coeff(1) : Coeff(-1)));

  PowerSeries da = constant_moments(6, Coeff(Rational(7, 3)));
  PowerSeries sda = s_transform(da);
  CHECK(sda.coeff(0) == Coeff(Rational(3, 7)));
  for (int n = 1; n <= 5; ++n) CHECK(sda.coeff(n) == Coeff(0));

  RandomSource rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    PowerSeries m = rng.power_series(8, false);
    if (m.coeff(1).is_zero()) m.set_coeff(1, Coeff(1));
    CHECK(moments_from_s(s_transform(m)) == m);
  }
  CHECK_THROWS_WITH_AS(s_transform(PowerSeries::monomial(4, 2, Coeff(1))),
                       "S-transform undefined at zero mean", std::invalid_argument);
}

TEST_CASE("atomic measures") {
  AtomicMeasure half({{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}});
  CHECK(measure_moment(half, 3) == Rational(4));
  CHECK(measure_moment(AtomicMeasure::dirac(1), 5) == Rational(1));
  PowerSeries eta = eta_of_measure(half, 6);
  for (int n = 1; n <= 6; ++n) CHECK(eta.coeff(n) == Coeff(1));

  CHECK_THROWS_AS(AtomicMeasure({{Rational(0), Rational(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(AtomicMeasure({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
                  std::invalid_argument);
  CHECK_FALSE(AtomicMeasure({{Rational(-1), Rational(1)}}).nonnegative_support());
}

TEST_CASE("free multiplicative convolution of measures") {
  AtomicMeasure da = AtomicMeasure::dirac(Rational(3, 2));
  AtomicMeasure db = AtomicMeasure::dirac(Rational(4, 5));
  PowerSeries prod = free_mult_convolve_measures(da, db, 5);
  CHECK(prod == constant_moments(5, Coeff(Rational(6, 5))));

  RandomSource rng(61);
  AtomicMeasure sigma = rng.atomic_measure_nonzero_mean(3);
  CHECK(free_mult_convolve_measures(sigma, AtomicMeasure::dirac(1), 6) ==
        moment_series(sigma, 6));

  // the S route and the mixed-moment oracle agree; the oracle also covers
  // zero-mean inputs
  AtomicMeasure tau = rng.atomic_measure_nonzero_mean(2);
  PowerSeries ms = moment_series(sigma, 6), mt = moment_series(tau, 6);
  CHECK(free_mult_convolve_series(ms, mt) == free_mult_convolve_oracle(ms, mt));
  AtomicMeasure zero_mean = AtomicMeasure::dirac(0);
  CHECK(free_mult_convolve_measures(zero_mean, tau, 4).is_zero());
}

TEST_CASE("complexification") {
  NcSeries z(3);
  z.set_coeff(Word("1"), Coeff(1));
  NcSeries g = complexify(z);
  CHECK(g.coeff(Word("1")) == Coeff(Rational(1, 2)));               // x1 coefficient
  CHECK(g.coeff(Word("*")) == Coeff(Rational(0), Rational(-1, 2)));  // x2 coefficient

  CHECK(complexify(NcSeries(3)).is_zero());

  RandomSource rng(67);
  for (int trial = 0; trial < 3; ++trial) {
    NcSeries f = rng.nc_series(5, false);
    CHECK(decomplexify(complexify(f)) == f);
    CHECK(complexify(decomplexify(f)) == f);
  }
}

TEST_CASE("truncated membership test for eta-series of half-line measures") {
  PowerSeries pass = PowerSeries::monomial(4, 1, Coeff(2));  // eta of delta_2
  CHECK(in_E_plus_truncated(pass, 4).pass);

  PowerSeries neg = PowerSeries::monomial(4, 1, Coeff(-1));
  CHECK_FALSE(in_E_plus_truncated(neg, 4).pass);

  PowerSeries f(3);
  f.set_coeff(1, Coeff(1));
  f.set_coeff(2, Coeff(1));
  EPlusResult res = in_E_plus_truncated(f, 3);
  CHECK_FALSE(res.pass);
  CHECK(res.reason.find("shifted") != std::string::npos);

  PowerSeries cplx(3);
  cplx.set_coeff(1, Coeff::i());
  CHECK(in_E_plus_truncated(cplx, 3).reason == "not real");
}

TEST_CASE("exact PSD testing needs every principal minor") {
  std::vector<std::vector<Rational>> bad = {{Rational(0), Rational(0)},
                                            {Rational(0), Rational(-1)}};
  std::string witness;
  CHECK_FALSE(rational_psd(bad, &witness));
  CHECK(!witness.empty());

  std::vector<std::vector<Rational>> singular = {{Rational(1), Rational(1)},
                                                 {Rational(1), Rational(1)}};
  CHECK(rational_psd(singular, nullptr));
  CHECK(rational_determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) ==
        Rational(-2));
}
