#ifndef NCPROB_RATIONAL_HPP
#define NCPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncprob {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws on malformed input.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

/// A Gaussian rational: exact complex number with rational real and
/// imaginary parts. This is the coefficient ring for every series in the
/// library; arithmetic never rounds.
class Coeff {
 public:
  Coeff() : re_(0), im_(0) {}
  Coeff(int v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Coeff(Rational re) : re_(std::move(re)), im_(0) {}
  Coeff(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Coeff i() { return Coeff(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Coeff conj() const { return Coeff(re_, -im_); }

  Coeff& operator+=(const Coeff& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Coeff& operator*=(const Coeff& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator-(const Coeff& a) { return Coeff(-a.re_, -a.im_); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Coeff recip() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    Rational d = re_ * re_ + im_ * im_;
    return Coeff(re_ / d, -im_ / d);
  }
  friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.recip(); }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

 private:
  Rational re_, im_;
};

/// "3/4", "-1", or "3/4+1/2i" style rendering, mostly for diagnostics.
std::string to_string(const Coeff& c);

}  // namespace ncprob

#endif
