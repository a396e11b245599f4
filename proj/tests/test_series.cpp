#include <doctest.h>

#include "ncprob/rng.hpp"
#include "ncprob/series.hpp"

using namespace ncprob;

namespace {

NcSeries monomial(int order, const char* w, Coeff c) {
  NcSeries f(order);
  f.set_coeff(Word(w), c);
  return f;
}

// (1+f)(1+g) - 1 = f + g + fg
NcSeries unital_product_defect(const NcSeries& f, const NcSeries& g) {
  return f + g + nc_product(f, g);
}

}  // namespace

TEST_CASE("nc_product basics") {
  NcSeries z = monomial(4, "1", Coeff(1));
  NcSeries zs = monomial(4, "*", Coeff(1));
  CHECK(nc_product(z, z).coeff(Word("11")) == Coeff(1));
  CHECK(nc_product(z, zs).coeff(Word("1*")) == Coeff(1));
  CHECK(nc_product(z, zs).coeff(Word("*1")) == Coeff(0));

  NcSeries f = monomial(4, "1", Coeff(Rational(2, 3)));
  NcSeries cube = nc_product(nc_product(f, f), f);
  CHECK(cube.coeff(Word("111")) == Coeff(Rational(8, 27)));

  NcSeries other(5);
  CHECK_THROWS_AS(nc_product(z, other), std::invalid_argument);
  CHECK_THROWS_AS(NcSeries(0), std::invalid_argument);
}

TEST_CASE("nc_product is associative and distributive") {
  RandomSource rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    NcSeries a = rng.nc_series(5, false);
    NcSeries b = rng.nc_series(5, false);
    NcSeries c = rng.nc_series(5, false);
    CHECK(nc_product(nc_product(a, b), c) == nc_product(a, nc_product(b, c)));
    CHECK(nc_product(a, b + c) == nc_product(a, b) + nc_product(a, c));
  }
}

TEST_CASE("geometric inverse") {
  NcSeries f = monomial(3, "1", Coeff(Rational(5)));
  NcSeries g = nc_geom_inverse(f);
  CHECK(g.coeff(Word("1")) == Coeff(-5));
  CHECK(g.coeff(Word("11")) == Coeff(25));
  CHECK(g.coeff(Word("111")) == Coeff(-125));

  CHECK(nc_geom_inverse(NcSeries(4)).is_zero());

  RandomSource rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    NcSeries h = rng.nc_series(6, false);
    NcSeries inv = nc_geom_inverse(h);
    CHECK(unital_product_defect(h, inv).is_zero());
    CHECK(unital_product_defect(inv, h).is_zero());  // two-sided
  }
}

TEST_CASE("left and right geometric quotients agree") {
  // M (1+M)^{-1} = (1+M)^{-1} M
  RandomSource rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    NcSeries m = rng.nc_series(6, false);
    NcSeries g = nc_geom_inverse(m);
    NcSeries left = m + nc_product(m, g);
    NcSeries right = m + nc_product(g, m);
    CHECK(left == right);
  }
}

TEST_CASE("block coefficient products") {
  RandomSource rng(7);
  NcSeries f = rng.nc_series(5, false);
  Word w = rng.word(5);
  SetPartition p(5, {{1, 4, 5}, {2, 3}});
  Coeff manual = f.coeff(restrict_word(w, {1, 4, 5})) * f.coeff(restrict_word(w, {2, 3}));
  CHECK(cf_block_product(f, w, p) == manual);
  CHECK(cf_block_product(f, w, SetPartition::full(5)) == f.coeff(w));

  NcSeries no_linear(5);
  no_linear.set_coeff(Word("1*"), Coeff(3));
  CHECK(cf_block_product(no_linear, w, SetPartition::singletons(5)) == Coeff(0));
  CHECK_THROWS_AS(cf_block_product(f, Word("1*"), p), std::invalid_argument);
}

TEST_CASE("power series composition") {
  PowerSeries z = PowerSeries::identity(4);
  PowerSeries g(4);
  g.set_coeff(1, Coeff(1));
  g.set_coeff(2, Coeff(1));
  CHECK(ps_compose(z, g) == g);

  PowerSeries f = PowerSeries::monomial(4, 2, Coeff(1));
  PowerSeries h = ps_compose(f, g);  // (z+z^2)^2 = z^2 + 2z^3 + z^4
  CHECK(h.coeff(2) == Coeff(1));
  CHECK(h.coeff(3) == Coeff(2));
  CHECK(h.coeff(4) == Coeff(1));

  CHECK_THROWS_AS(ps_compose(f, one_plus(g)), std::invalid_argument);
}

TEST_CASE("compositional inverse") {
  PowerSeries f(3);
  f.set_coeff(1, Coeff(2));
  CHECK(ps_comp_inverse(f).coeff(1) == Coeff(Rational(1, 2)));

  // z/(1-z) inverts to z/(1+z)
  PowerSeries geo(6), alt(6);
  for (int n = 1; n <= 6; ++n) {
    geo.set_coeff(n, Coeff(1));
    alt.set_coeff(n, n % 2 == 1 ? Coeff(1) : Coeff(-1));
  }
  CHECK(ps_comp_inverse(geo) == alt);

  PowerSeries q(3);
  q.set_coeff(1, Coeff(1));
  q.set_coeff(2, Coeff(1));
  PowerSeries qi = ps_comp_inverse(q);  // z - z^2 + 2z^3
  CHECK(qi.coeff(1) == Coeff(1));
  CHECK(qi.coeff(2) == Coeff(-1));
  CHECK(qi.coeff(3) == Coeff(2));

  CHECK_THROWS_AS(ps_comp_inverse(PowerSeries::monomial(3, 2, Coeff(1))), std::invalid_argument);

  RandomSource rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    PowerSeries r = rng.power_series(6, false);
    if (r.coeff(1).is_zero()) r.set_coeff(1, Coeff(1));
    PowerSeries ri = ps_comp_inverse(r);
    CHECK(ps_compose(r, ri) == PowerSeries::identity(6));
    CHECK(ps_compose(ri, r) == PowerSeries::identity(6));
  }
}

TEST_CASE("series reciprocal") {
  PowerSeries f = one_plus(PowerSeries::identity(5));
  PowerSeries r = ps_reciprocal(f);
  for (int n = 0; n <= 5; ++n) CHECK(r.coeff(n) == (n % 2 == 0 ? Coeff(1) : Coeff(-1)));
  CHECK(ps_reciprocal(PowerSeries::constant(3, Coeff(1))) == PowerSeries::constant(3, Coeff(1)));
  CHECK_THROWS_AS(ps_reciprocal(PowerSeries::identity(3)), std::invalid_argument);

  RandomSource rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    PowerSeries g = one_plus(rng.power_series(8, false));
    CHECK(g * ps_reciprocal(g) == PowerSeries::constant(8, Coeff(1)));
  }
}

TEST_CASE("degree shifts") {
  PowerSeries f(3);
  f.set_coeff(1, Coeff(2));
  f.set_coeff(3, Coeff(5));
  PowerSeries up = f.shifted_up();  // top coefficient falls off
  CHECK(up.coeff(2) == Coeff(2));
  CHECK(up.coeff(3) == Coeff(0));
  CHECK(f.shifted_down().coeff(0) == Coeff(2));
  CHECK(f.shifted_down().coeff(2) == Coeff(5));
  CHECK_THROWS_AS(one_plus(f).shifted_down(), std::invalid_argument);
}

TEST_CASE("coefficient arithmetic stays exact") {
  Coeff a(Rational(1, 3), Rational(2, 7));
  Coeff b(Rational(-5, 11), Rational(1, 2));
  CHECK((a + b) - b == a);
  CHECK(a * b / b == a);
  CHECK(Coeff::i() * Coeff::i() == Coeff(-1));
  CHECK_THROWS_AS(Coeff(0).recip(), std::domain_error);
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
