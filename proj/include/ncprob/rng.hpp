#ifndef NCPROB_RNG_HPP
#define NCPROB_RNG_HPP

#include <cstdint>
#include <random>

#include "ncprob/diagonal.hpp"
#include "ncprob/series.hpp"
#include "ncprob/transforms.hpp"

namespace ncprob {

/// Seeded source of small random rationals (numerators and denominators up
/// to 9) and of the composite inputs the verify suites draw. Keeping the
/// values tiny keeps exact arithmetic fast.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  int integer(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational() {  // in [-9, 9], denominator in [1, 9]
    return make(integer(-9, 9), integer(1, 9));
  }
  Rational nonneg_rational() { return make(integer(0, 9), integer(1, 9)); }
  Rational positive_rational() { return make(integer(1, 9), integer(1, 9)); }

  Coeff coeff() { return Coeff(rational(), rational()); }
  Coeff real_coeff() { return Coeff(rational()); }

  PowerSeries power_series(int order, bool real = true) {
    PowerSeries f(order);
    for (int n = 1; n <= order; ++n) f.set_coeff(n, real ? real_coeff() : coeff());
    return f;
  }

  NcSeries nc_series(int order, bool real = true) {
    NcSeries f(order);
    for (int n = 1; n <= order; ++n) {
      for (const Word& w : all_words(n)) f.set_coeff(w, real ? real_coeff() : coeff());
    }
    return f;
  }

  DeterminingPair determining_pair(int length, bool real = true) {
    DeterminingPair d;
    for (int n = 1; n <= length; ++n) {
      d.set_alpha(n, real ? real_coeff() : coeff());
      d.set_beta(n, real ? real_coeff() : coeff());
    }
    return d;
  }

  /// Atoms at distinct nonnegative positions, weights normalized exactly.
  AtomicMeasure atomic_measure(int natoms) {
    std::vector<Rational> pos;
    while (static_cast<int>(pos.size()) < natoms) {
      Rational p = nonneg_rational();
      bool dup = false;
      for (const auto& q : pos) dup = dup || q == p;
      if (!dup) pos.push_back(p);
    }
    std::vector<AtomicMeasure::Atom> atoms;
    Rational total(0);
    std::vector<Rational> raw;
    for (int i = 0; i < natoms; ++i) {
      raw.push_back(positive_rational());
      total += raw.back();
    }
    for (int i = 0; i < natoms; ++i) {
      atoms.emplace_back(pos[static_cast<std::size_t>(i)],
                         raw[static_cast<std::size_t>(i)] / total);
    }
    return AtomicMeasure(std::move(atoms));
  }

  /// Measure with nonzero mean (rejects the degenerate draw).
  AtomicMeasure atomic_measure_nonzero_mean(int natoms) {
    for (;;) {
      AtomicMeasure m = atomic_measure(natoms);
      if (m.mean() != 0) return m;
    }
  }

  Word word(int length) {
    std::string s;
    for (int i = 0; i < length; ++i) s.push_back(integer(0, 1) == 0 ? '1' : '*');
    return Word(std::move(s));
  }

  /// Random mixed-alternating word of even length 2m.
  Word mixed_alternating_word(int m) {
    std::string s;
    for (int i = 0; i < m; ++i) {
      if (integer(0, 1) == 0) {
        s += "1*";
      } else {
        s += "*1";
      }
    }
    return Word(std::move(s));
  }

 private:
  static Rational make(int num, int den) {
    Rational q(num, den);
    q.canonicalize();  // the two-argument constructor does not reduce
    return q;
  }

  std::mt19937_64 eng_;
};

}  // namespace ncprob

#endif
