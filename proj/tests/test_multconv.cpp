#include <doctest.h>

#include "ncprob/multconv.hpp"
#include "ncprob/rng.hpp"

using namespace ncprob;

TEST_CASE("split non-crossing pairs at n = 1") {
  int count = 0;
  for_each_split_nc_pair(1, [&](const SplitNcPair& sp) {
    ++count;
    REQUIRE(sp.odd_blocks.size() == 1);
    REQUIRE(sp.even_blocks.size() == 1);
    CHECK(sp.odd_blocks[0] == std::vector<int>{1});
    CHECK(sp.even_blocks[0] == std::vector<int>{2});
  });
  CHECK(count == 1);
}

TEST_CASE("degree-one product coefficients") {
  RandomSource rng(89);
  DeterminingPair d = rng.determining_pair(3, true);
  DeterminingPair dp = rng.determining_pair(3, true);
  DeterminingPair prod = boxtimes_determining_oracle(d, dp, 1);
  CHECK(prod.alpha(1) == d.alpha(1) * dp.alpha(1));
  CHECK(prod.beta(1) == dp.beta(1) * d.beta(1));
}

TEST_CASE("all three routes agree") {
  RandomSource rng(97);
  for (int trial = 0; trial < 5; ++trial) {
    DeterminingPair d = rng.determining_pair(4, true);
    DeterminingPair dp = rng.determining_pair(4, true);
    if (d.beta(1).is_zero()) d.set_beta(1, Coeff(1));
    if (dp.alpha(1).is_zero()) dp.set_alpha(1, Coeff(1));
    DeterminingPair oracle = boxtimes_determining_oracle(d, dp, 4);
    CHECK(boxtimes_determining_fast(d, dp, 4) == oracle);
    CHECK(boxtimes_determining_subordination(d, dp, 4) == oracle);
    BoxtimesResult r = boxtimes_determining(d, dp, 4);
    CHECK(r.pair == oracle);
    CHECK(r.method == "partition-sum+composition");
  }
}

TEST_CASE("vanishing-sequence branches") {
  RandomSource rng(101);
  DeterminingPair d = rng.determining_pair(4, true);
  DeterminingPair dp = rng.determining_pair(4, true);
  if (dp.alpha(1).is_zero()) dp.set_alpha(1, Coeff(2));
  for (int n = 1; n <= 4; ++n) d.set_beta(n, Coeff());

  DeterminingPair oracle = boxtimes_determining_oracle(d, dp, 4);
  Coeff pw(1);
  for (int n = 1; n <= 4; ++n) {
    pw *= dp.alpha(1);
    CHECK(oracle.alpha(n) == d.alpha(n) * pw);
    CHECK(oracle.beta(n) == Coeff(0));
  }
  CHECK(boxtimes_determining_fast(d, dp, 4) == oracle);

  // alpha' identically zero kills alpha-hat
  DeterminingPair dpz = dp;
  for (int n = 1; n <= 4; ++n) dpz.set_alpha(n, Coeff());
  DeterminingPair d2 = rng.determining_pair(4, true);
  if (d2.beta(1).is_zero()) d2.set_beta(1, Coeff(1));
  DeterminingPair o2 = boxtimes_determining_oracle(d2, dpz, 4);
  Coeff qw(1);
  for (int n = 1; n <= 4; ++n) {
    qw *= d2.beta(1);
    CHECK(o2.alpha(n) == Coeff(0));
    CHECK(o2.beta(n) == dpz.beta(n) * qw);
  }
  CHECK(boxtimes_determining_fast(d2, dpz, 4) == o2);
}

TEST_CASE("composition route keeps working past the enumeration cap") {
  RandomSource rng(499);
  DeterminingPair d = rng.determining_pair(8, true);
  DeterminingPair dp = rng.determining_pair(8, true);
  if (d.beta(1).is_zero()) d.set_beta(1, Coeff(1));
  if (dp.alpha(1).is_zero()) dp.set_alpha(1, Coeff(2));
  BoxtimesResult high = boxtimes_determining(d, dp, 8);  // 2N = 16 > cap
  CHECK(high.method == "composition");
  BoxtimesResult low = boxtimes_determining(d, dp, 5);  // both routes
  CHECK(low.method == "partition-sum+composition");
  for (int n = 1; n <= 5; ++n) {
    CHECK(high.pair.alpha(n) == low.pair.alpha(n));  // truncation consistency
    CHECK(high.pair.beta(n) == low.pair.beta(n));
  }

  ProductR pr = product_r(d, 4, /*cap=*/3);
  CHECK(pr.method == "composition");
  CHECK(pr.zzstar == product_r_composition(d, 4).first);
}

TEST_CASE("composition path reports itself unavailable") {
  DeterminingPair d;
  d.set_alpha(1, Coeff(1));
  d.set_beta(1, Coeff(0));
  d.set_beta(2, Coeff(1));  // beta_1 = 0 but beta != 0
  DeterminingPair dp;
  dp.set_alpha(1, Coeff(1));
  dp.set_beta(1, Coeff(1));
  CHECK_THROWS_AS(boxtimes_determining_fast(d, dp, 2), std::invalid_argument);
  BoxtimesResult r = boxtimes_determining(d, dp, 2);
  CHECK(r.method == "partition-sum");
}

TEST_CASE("KMS parameters multiply") {
  RandomSource rng(103);
  const Rational t(3, 2), tp(2, 5);
  DeterminingPair d, dp;
  for (int n = 1; n <= 4; ++n) {
    Coeff b = rng.real_coeff(), bp = rng.real_coeff();
    d.set_beta(n, b);
    d.set_alpha(n, Coeff(t) * b);
    dp.set_beta(n, bp);
    dp.set_alpha(n, Coeff(tp) * bp);
  }
  DeterminingPair prod = boxtimes_determining_oracle(d, dp, 4);
  CHECK(kms_check(prod, t * tp));
}

TEST_CASE("products of parametrized laws stay divisible") {
  RandomSource rng(107);
  AtomicMeasure s1 = rng.atomic_measure(2), s2 = rng.atomic_measure(2);
  AtomicMeasure s1p = rng.atomic_measure(2), s2p = rng.atomic_measure(2);
  Theorem78Check chk = theorem78_check(s1, s2, s1p, s2p, 4);
  CHECK(chk.pass);
}

TEST_CASE("the ladder of powers of a lambda-circular element") {
  const Rational lam(1, 2);
  LambdaLadderStep one = lambda_circular_sigma(lam, 1, 6);
  for (int n = 1; n <= 6; ++n) CHECK(one.moments_recursion.coeff(n) == Coeff(1));
  CHECK(one.moments_recursion == one.moments_product);

  LambdaLadderStep two = lambda_circular_sigma(lam, 2, 6);
  CHECK(two.moments_recursion == two.moments_product);
  // sigma_2 = tau_1 = (1/3) delta_0 + (2/3) delta_{3/2}
  AtomicMeasure tau1 = lambda_circular_tau(lam, 1);
  CHECK(tau1 == AtomicMeasure({{Rational(0), Rational(1, 3)}, {Rational(3, 2), Rational(2, 3)}}));
  CHECK(two.moments_recursion == moment_series(tau1, 6));
  CHECK(two.moments_recursion.coeff(1) == Coeff(1));
  CHECK(two.moments_recursion.coeff(2) == Coeff(Rational(3, 2)));
  CHECK(two.moments_recursion.coeff(3) == Coeff(Rational(9, 4)));

  LambdaLadderStep three = lambda_circular_sigma(lam, 3, 6);
  CHECK(three.moments_recursion == three.moments_product);

  // B(tau_j) is a free Poisson law
  for (int j = 1; j <= 3; ++j) {
    Rational lj(1);
    for (int i = 0; i < j; ++i) lj *= lam;
    CHECK(bbp1(moment_series(lambda_circular_tau(lam, j), 6)) ==
          free_poisson_moments(FreePoissonParams{Rational(1) / lj, lj}, 6));
  }
}
