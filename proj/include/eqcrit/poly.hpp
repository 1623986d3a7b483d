#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eqcrit/error.hpp"
#include "eqcrit/ring.hpp"

namespace eqcrit {

/// Dense univariate polynomial, coefficient k at index k. Canonical form has
/// no trailing zeros; the zero polynomial has no coefficients at all.
template <class T>
class Poly {
 public:
  using traits = ring_traits<T>;
  using context_type = typename traits::context;
  using value_type = T;

  /// Degree reported for the zero polynomial.
  static constexpr std::size_t zero_degree = std::numeric_limits<std::size_t>::max();

  Poly() = default;
  explicit Poly(context_type ctx) : ctx_(std::move(ctx)) {}
  Poly(context_type ctx, std::vector<T> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& c) { return Poly(traits::context_of(c), {c}); }

  static Poly monomial(const T& c, std::size_t n) {
    std::vector<T> v(n + 1, traits::zero(traits::context_of(c)));
    v[n] = c;
    return Poly(traits::context_of(c), std::move(v));
  }

  /// The polynomial `x`.
  static Poly variable(const context_type& ctx) {
    return Poly(ctx, {traits::zero(ctx), traits::one(ctx)});
  }

  static Poly from_rationals(const context_type& ctx, std::span<const Rational> coeffs) {
    std::vector<T> v;
    v.reserve(coeffs.size());
    for (const auto& r : coeffs) v.push_back(traits::from_rational(ctx, r));
    return Poly(ctx, std::move(v));
  }

  const context_type& context() const { return ctx_; }
  const std::vector<T>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? zero_degree : c_.size() - 1; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : traits::zero(ctx_); }

  const T& lc() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  T zero_elem() const { return traits::zero(ctx_); }
  T one_elem() const { return traits::one(ctx_); }
  T scalar(const Rational& r) const { return traits::from_rational(ctx_, r); }

  /// Horner evaluation.
  template <class U>
  U operator()(const U& x) const {
    U acc = ring_traits<U>::zero(ring_traits<U>::context_of(x));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const T& s) {
    if (traits::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly out(a.ctx_);
    out.c_.reserve(a.c_.size());
    for (const auto& c : a.c_) out.c_.push_back(-c);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, traits::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.ctx_, std::move(out));
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (traits::is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << traits::str(c_[k]) << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }
  void check_same(const Poly& o) const {
    if (!(ctx_ == o.ctx_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different coefficient domains");
  }

  context_type ctx_{};
  std::vector<T> c_;
};

/// Polynomials are themselves a coefficient domain (used for K[y][x]); they are
/// not a field, so `inverse` is only defined on nonzero constants.
template <class T>
struct ring_traits<Poly<T>> {
  using context = typename ring_traits<T>::context;

  static context context_of(const Poly<T>& p) { return p.context(); }
  static Poly<T> zero(const context& c) { return Poly<T>(c); }
  static Poly<T> one(const context& c) { return Poly<T>(c, {ring_traits<T>::one(c)}); }
  static Poly<T> from_rational(const context& c, const Rational& r) {
    return Poly<T>(c, {ring_traits<T>::from_rational(c, r)});
  }
  static bool is_zero(const Poly<T>& p) { return p.is_zero(); }
  static Poly<T> inverse(const Poly<T>& p) {
    if (p.degree() != 0) throw Error(ErrorKind::ZeroDivisor, "polynomial is not a unit");
    return Poly<T>::constant(ring_traits<T>::inverse(p.lc()));
  }
  static std::string str(const Poly<T>& p) { return p.str("y"); }
  static bool is_rational(const context&) { return false; }
  static Rational to_rational(const Poly<T>&) {
    throw Error(ErrorKind::Precondition, "polynomial is not a rational scalar");
  }
};

template <class T>
struct DivMod {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// Euclidean division over a field.
template <class T>
DivMod<T> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorKind::Zero, "polynomial division by zero");
  using tr = ring_traits<T>;
  const auto& ctx = a.context();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly<T>(ctx), a};
  std::vector<T> r = a.coeffs();
  const std::size_t db = b.degree();
  std::vector<T> q(a.degree() - db + 1, tr::zero(ctx));
  const T lc_inv = tr::inverse(b.lc());
  for (std::size_t k = r.size(); k-- > db;) {
    if (tr::is_zero(r[k])) continue;
    T f = r[k] * lc_inv;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly<T>(ctx, std::move(q)), Poly<T>(ctx, std::move(r))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).quotient;
}
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).remainder;
}

/// Division that is known to be exact; throws if a remainder shows up.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::Precondition, "inexact polynomial division");
  return q;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monic of the zero polynomial");
  return p * ring_traits<T>::inverse(p.lc());
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() == 0 || p.is_zero()) return Poly<T>(p.context());
  std::vector<T> out;
  out.reserve(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) out.push_back(p.coeffs()[k] * p.scalar(Rational(k)));
  return Poly<T>(p.context(), std::move(out));
}

/// Antiderivative with zero constant term.
template <class T>
Poly<T> integrate(const Poly<T>& p) {
  std::vector<T> out{p.zero_elem()};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out.push_back(p.coeffs()[k] * p.scalar(Rational(1) / Rational(k + 1)));
  return Poly<T>(p.context(), std::move(out));
}

/// Monic gcd; gcd(0, 0) is rejected.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class T>
struct ExtendedGcd {
  Poly<T> g;  // monic
  Poly<T> s;  // s*a + t*b = g
  Poly<T> t;
};

template <class T>
ExtendedGcd<T> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
  const auto& ctx = a.context();
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0(ctx, {ring_traits<T>::one(ctx)}), s1(ctx);
  Poly<T> t0(ctx), t1(ctx, {ring_traits<T>::one(ctx)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "extended gcd(0, 0)");
  T inv = ring_traits<T>::inverse(r0.lc());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// p(q(x)).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> acc(q.context());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + Poly<T>(q.context(), {*it});
  return acc;
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned e) {
  Poly<T> out(base.context(), {base.one_elem()});
  Poly<T> b = base;
  while (e) {
    if (e & 1u) out = out * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return out;
}

/// Monic p / gcd(p, p').
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  Poly<T> d = derivative(p);
  if (d.is_zero()) return monic(p);
  return monic(exact_div(p, gcd(p, d)));
}

template <class T>
bool is_squarefree(const Poly<T>& p) {
  if (p.is_zero()) return false;
  Poly<T> d = derivative(p);
  if (d.is_zero()) return true;
  return gcd(p, d).degree() == 0;
}

/// Yun's algorithm: returns (factor, multiplicity) with each factor monic,
/// squarefree, pairwise coprime, and p = lc(p) * prod factor^multiplicity.
template <class T>
std::vector<std::pair<Poly<T>, unsigned>> squarefree_decomposition(const Poly<T>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly<T>, unsigned>> out;
  if (p.degree() == 0) return out;
  Poly<T> f = monic(p);
  Poly<T> a = gcd(f, derivative(f));
  Poly<T> b = exact_div(f, a);
  Poly<T> c = exact_div(derivative(f), a);
  Poly<T> d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly<T> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

/// Multiplicity of `root` as a zero of p (p nonzero).
template <class T>
unsigned root_multiplicity(Poly<T> p, const T& root) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity in zero polynomial");
  Poly<T> lin(p.context(), {-root, p.one_elem()});
  unsigned m = 0;
  for (;;) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

}  // namespace eqcrit
