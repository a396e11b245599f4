#ifndef NCPROB_SERIES_HPP
#define NCPROB_SERIES_HPP

#include <map>
#include <vector>

#include "ncprob/partitions.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

/// Truncated formal power series in two non-commuting indeterminates with
/// vanishing constant term. Coefficients are indexed by non-empty words and
/// stored sparsely; a missing word means coefficient zero. Every operation
/// is exact for words of length <= order() and silently discards longer
/// words. Mixing orders is an error rather than an implicit min, so that
/// precision loss is never silent.
class NcSeries {
 public:
  explicit NcSeries(int order);

  int order() const { return order_; }
  const std::map<Word, Coeff>& terms() const { return coeffs_; }

  Coeff coeff(const Word& w) const;
  void set_coeff(const Word& w, Coeff c);
  void add_coeff(const Word& w, const Coeff& c);

  bool is_zero() const { return coeffs_.empty(); }

  NcSeries& operator+=(const NcSeries& o);
  NcSeries& operator-=(const NcSeries& o);
  friend NcSeries operator+(NcSeries a, const NcSeries& b) { return a += b; }
  friend NcSeries operator-(NcSeries a, const NcSeries& b) { return a -= b; }
  friend NcSeries operator-(const NcSeries& a);

  NcSeries scaled(const Coeff& c) const;

  friend bool operator==(const NcSeries& a, const NcSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const NcSeries& a, const NcSeries& b) { return !(a == b); }

 private:
  int order_;
  std::map<Word, Coeff> coeffs_;  // graded-lexicographic term order
};

/// Product in C_0<<z,z*>>, exact up to the common truncation order.
NcSeries nc_product(const NcSeries& f, const NcSeries& g);

/// g with (1+f)(1+g) = 1 up to the order, i.e. g = sum_{k>=1} (-f)^k.
NcSeries nc_geom_inverse(const NcSeries& f);

/// Product over the blocks B of p of the coefficient of w|B in f.
Coeff cf_block_product(const NcSeries& f, const Word& w, const SetPartition& p);

/// Substitution f(z(1+M), z*(1+M)) truncated to the common order; the
/// workhorse behind the R-transform functional equation.
NcSeries substitute_shifted(const NcSeries& f, const NcSeries& M);

/// Truncated one-variable power series with exact coefficients c_0..c_N.
/// Most series here have zero constant term (moment and eta series); the
/// constant slot exists for unital forms such as 1+M and S-transforms.
class PowerSeries {
 public:
  explicit PowerSeries(int order);

  static PowerSeries constant(int order, Coeff c);
  static PowerSeries identity(int order);  // z
  static PowerSeries monomial(int order, int degree, Coeff c);

  int order() const { return order_; }
  const Coeff& coeff(int n) const;
  void set_coeff(int n, Coeff c);

  bool zero_constant_term() const { return c_[0].is_zero(); }
  bool is_zero() const;
  bool is_real() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

  PowerSeries scaled(const Coeff& c) const;
  /// f(c z).
  PowerSeries scaled_argument(const Coeff& c) const;
  /// z * f(z); the top coefficient falls off.
  PowerSeries shifted_up() const;
  /// f(z)/z, defined when the constant term vanishes.
  PowerSeries shifted_down() const;

 private:
  int order_;
  std::vector<Coeff> c_;  // size order_+1
};

/// Composition f(g), requiring g to have zero constant term.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// Compositional inverse of f = c1 z + ..., c1 != 0; f(g) = g(f) = z.
PowerSeries ps_comp_inverse(const PowerSeries& f);

/// Multiplicative inverse of a series with invertible constant term.
PowerSeries ps_reciprocal(const PowerSeries& f);

/// 1 + f, as a convenience for the ubiquitous unital forms.
PowerSeries one_plus(const PowerSeries& f);

}  // namespace ncprob

#endif
