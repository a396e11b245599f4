#include "ncprob/series.hpp"

#include <set>

namespace ncprob {

namespace {

void check_same_order(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

NcSeries::NcSeries(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
}

Coeff NcSeries::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Coeff() : it->second;
}

void NcSeries::set_coeff(const Word& w, Coeff c) {
  if (w.empty()) throw std::invalid_argument("series coefficients are indexed by non-empty words");
  if (static_cast<int>(w.size()) > order_) return;
  if (c.is_zero()) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = std::move(c);
  }
}

void NcSeries::add_coeff(const Word& w, const Coeff& c) {
  if (w.empty()) throw std::invalid_argument("series coefficients are indexed by non-empty words");
  if (static_cast<int>(w.size()) > order_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NcSeries& NcSeries::operator+=(const NcSeries& o) {
  check_same_order(order_, o.order_, "series sum");
  for (const auto& [w, c] : o.coeffs_) add_coeff(w, c);
  return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& o) {
  check_same_order(order_, o.order_, "series difference");
  for (const auto& [w, c] : o.coeffs_) add_coeff(w, -c);
  return *this;
}

NcSeries operator-(const NcSeries& a) {
  NcSeries r(a.order_);
  for (const auto& [w, c] : a.coeffs_) r.coeffs_.emplace(w, -c);
  return r;
}

NcSeries NcSeries::scaled(const Coeff& c) const {
  NcSeries r(order_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : coeffs_) r.set_coeff(w, v * c);
  return r;
}

NcSeries nc_product(const NcSeries& f, const NcSeries& g) {
  check_same_order(f.order(), g.order(), "nc_product");
  const int N = f.order();
  NcSeries r(N);
  for (const auto& [u, cu] : f.terms()) {
    const int room = N - static_cast<int>(u.size());
    if (room < 1) continue;
    for (const auto& [v, cv] : g.terms()) {
      if (static_cast<int>(v.size()) > room) break;  // graded order
      r.add_coeff(u.concat(v), cu * cv);
    }
  }
  return r;
}

NcSeries nc_geom_inverse(const NcSeries& f) {
  const int N = f.order();
  NcSeries neg = -f;
  NcSeries power = neg;
  NcSeries out = neg;
  for (int k = 2; k <= N && !power.is_zero(); ++k) {
    power = nc_product(power, neg);
    out += power;
  }
  return out;
}

Coeff cf_block_product(const NcSeries& f, const Word& w, const SetPartition& p) {
  if (static_cast<int>(w.size()) != p.ground_size()) {
    throw std::invalid_argument("cf_block_product: word length must equal the ground-set size");
  }
  Coeff prod(1);
  for (const auto& b : p.blocks()) {
    prod *= f.coeff(restrict_word(w, b));
    if (prod.is_zero()) return prod;
  }
  return prod;
}

NcSeries substitute_shifted(const NcSeries& f, const NcSeries& M) {
  check_same_order(f.order(), M.order(), "substitute_shifted");
  const int N = f.order();
  // a_l = z^l (1 + M) for each letter l
  NcSeries sub1(N), subs(N);
  sub1.set_coeff(Word::of({Letter::One}), Coeff(1));
  subs.set_coeff(Word::of({Letter::Star}), Coeff(1));
  for (const auto& [w, c] : M.terms()) {
    if (static_cast<int>(w.size()) + 1 > N) break;
    sub1.add_coeff(Word::of({Letter::One}).concat(w), c);
    subs.add_coeff(Word::of({Letter::Star}).concat(w), c);
  }

  // Shared-prefix DFS over the support of f.
  std::set<std::string> prefixes;
  for (const auto& [w, c] : f.terms()) {
    for (std::size_t len = 1; len <= w.size(); ++len) prefixes.insert(w.str().substr(0, len));
  }
  NcSeries out(N);
  std::function<void(const Word&, const NcSeries&)> dfs = [&](const Word& p,
                                                              const NcSeries& acc) {
    Coeff c = f.coeff(p);
    if (!c.is_zero()) out += acc.scaled(c);
    if (static_cast<int>(p.size()) >= N) return;
    for (Letter l : {Letter::One, Letter::Star}) {
      Word q = p.concat(Word::of({l}));
      if (prefixes.count(q.str())) dfs(q, nc_product(acc, l == Letter::One ? sub1 : subs));
    }
  };
  for (Letter l : {Letter::One, Letter::Star}) {
    Word q = Word::of({l});
    if (prefixes.count(q.str())) dfs(q, l == Letter::One ? sub1 : subs);
  }
  return out;
}

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::constant(int order, Coeff c) {
  PowerSeries r(order);
  r.c_[0] = std::move(c);
  return r;
}

PowerSeries PowerSeries::identity(int order) { return monomial(order, 1, Coeff(1)); }

PowerSeries PowerSeries::monomial(int order, int degree, Coeff c) {
  PowerSeries r(order);
  r.set_coeff(degree, std::move(c));
  return r;
}

const Coeff& PowerSeries::coeff(int n) const {
  static const Coeff kZero;
  if (n < 0) throw std::invalid_argument("negative series degree");
  if (n > order_) return kZero;
  return c_[static_cast<std::size_t>(n)];
}

void PowerSeries::set_coeff(int n, Coeff c) {
  if (n < 0) throw std::invalid_argument("negative series degree");
  if (n > order_) return;
  c_[static_cast<std::size_t>(n)] = std::move(c);
}

bool PowerSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool PowerSeries::is_real() const {
  for (const auto& c : c_) {
    if (!c.is_real()) return false;
  }
  return true;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_same_order(order_, o.order_, "series sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_same_order(order_, o.order_, "series difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a.order_, b.order_, "series product");
  PowerSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      r.c_[static_cast<std::size_t>(i + j)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

PowerSeries PowerSeries::scaled(const Coeff& s) const {
  PowerSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)] * s;
  return r;
}

PowerSeries PowerSeries::scaled_argument(const Coeff& s) const {
  PowerSeries r(order_);
  Coeff pw(1);
  for (int n = 0; n <= order_; ++n) {
    r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)] * pw;
    pw *= s;
  }
  return r;
}

PowerSeries PowerSeries::shifted_up() const {
  PowerSeries r(order_);
  for (int n = order_ - 1; n >= 0; --n) r.c_[static_cast<std::size_t>(n + 1)] = c_[static_cast<std::size_t>(n)];
  return r;
}

PowerSeries PowerSeries::shifted_down() const {
  if (!zero_constant_term()) {
    throw std::invalid_argument("shifted_down requires a vanishing constant term");
  }
  PowerSeries r(order_);
  for (int n = 1; n <= order_; ++n) r.c_[static_cast<std::size_t>(n - 1)] = c_[static_cast<std::size_t>(n)];
  return r;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  check_same_order(f.order(), g.order(), "ps_compose");
  if (!g.zero_constant_term()) {
    throw std::invalid_argument("ps_compose: inner series must have zero constant term");
  }
  const int N = f.order();
  // Horner: f(g) = c0 + g (c1 + g (c2 + ...))
  PowerSeries r(N);
  for (int k = N; k >= 0; --k) {
    r = r * g;
    r.set_coeff(0, r.coeff(0) + f.coeff(k));
  }
  return r;
}

PowerSeries ps_comp_inverse(const PowerSeries& f) {
  const int N = f.order();
  if (!f.zero_constant_term() || f.coeff(1).is_zero()) {
    throw std::invalid_argument("no compositional inverse: need f = c1 z + ... with c1 != 0");
  }
  const Coeff c1inv = f.coeff(1).recip();
  PowerSeries g(N);
  g.set_coeff(1, c1inv);
  for (int n = 2; n <= N; ++n) {
    // f(g_{<n}) matches z through degree n-1; the degree-n defect is killed
    // by the linear term of f acting on g_n.
    PowerSeries h = ps_compose(f, g);
    g.set_coeff(n, -(h.coeff(n) * c1inv));
  }
  return g;
}

PowerSeries ps_reciprocal(const PowerSeries& f) {
  if (f.coeff(0).is_zero()) {
    throw std::invalid_argument("series is not invertible: zero constant term");
  }
  const int N = f.order();
  const Coeff c0inv = f.coeff(0).recip();
  PowerSeries r(N);
  r.set_coeff(0, c0inv);
  for (int n = 1; n <= N; ++n) {
    Coeff s;
    for (int k = 1; k <= n; ++k) s += f.coeff(k) * r.coeff(n - k);
    r.set_coeff(n, -(s * c0inv));
  }
  return r;
}

PowerSeries one_plus(const PowerSeries& f) {
  PowerSeries r = f;
  r.set_coeff(0, f.coeff(0) + Coeff(1));
  return r;
}

}  // namespace ncprob
