#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqcrit/numeric.hpp"
#include "eqcrit/poly.hpp"
#include "eqcrit/rational.hpp"

namespace eqcrit {

class AlgElem;

/// A quotient algebra Q[x]/(m) with m monic and squarefree. Degree-1 moduli
/// stand for Q itself. Presets carry a table of named constants (sqrt3, omega,
/// i, ...) written in the power basis of the generator.
class FieldSpec {
 public:
  /// Defaults to Q.
  FieldSpec() : FieldSpec(qq()) {}

  static FieldSpec qq();
  static FieldSpec q_sqrt3();
  static FieldSpec q_omega();
  static FieldSpec q_zeta12();

  /// Looks up a preset by its CLI name (qq, q-sqrt3, q-omega, q-zeta12).
  static std::optional<FieldSpec> preset(const std::string& name);

  /// A user supplied modulus. Must be monic and squarefree.
  static FieldSpec custom(const Poly<Rational>& modulus);

  const std::string& name() const { return d_->name; }
  bool is_preset() const { return d_->preset; }
  std::size_t degree() const { return d_->modulus.degree(); }
  const Poly<Rational>& modulus() const { return d_->modulus; }
  bool is_rational() const { return degree() == 1; }

  /// Coordinates of a named constant, if the field contains it.
  std::optional<std::vector<Rational>> named_coords(const std::string& name) const {
    auto it = d_->named.find(name);
    if (it == d_->named.end()) return std::nullopt;
    return it->second;
  }
  const std::map<std::string, std::vector<Rational>>& named() const { return d_->named; }

  /// Complex value of the generator, for display purposes.
  std::optional<std::complex<double>> generator_embedding() const { return d_->embedding; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.d_ == b.d_ || a.d_->modulus == b.d_->modulus;
  }

 private:
  struct Data {
    std::string name;
    bool preset = false;
    Poly<Rational> modulus;
    std::map<std::string, std::vector<Rational>> named;
    std::optional<std::complex<double>> embedding;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FieldSpec make_preset(std::string name, std::vector<Rational> modulus,
                               std::map<std::string, std::vector<Rational>> named,
                               std::complex<double> embedding);

  std::shared_ptr<const Data> d_;
};

/// Element of a FieldSpec in the power basis 1, a, ..., a^(k-1).
class AlgElem {
 public:
  AlgElem() : AlgElem(FieldSpec::qq(), Rational(0)) {}
  AlgElem(FieldSpec f, const Rational& r) : f_(std::move(f)), c_(f_.degree(), Rational(0)) { c_[0] = r; }
  AlgElem(FieldSpec f, std::vector<Rational> coords) : f_(std::move(f)), c_(std::move(coords)) { normalize(); }

  static AlgElem generator(const FieldSpec& f) {
    if (f.degree() == 1) return AlgElem(f, -f.modulus().coeff(0));
    std::vector<Rational> c(f.degree(), Rational(0));
    c[1] = Rational(1);
    return AlgElem(f, std::move(c));
  }

  /// Named constant of the field; FieldTooSmall when absent.
  static AlgElem named(const FieldSpec& f, const std::string& name) {
    auto c = f.named_coords(name);
    if (!c) throw Error(ErrorKind::FieldTooSmall, "field " + f.name() + " does not contain " + name);
    return AlgElem(f, *c);
  }
  static std::optional<AlgElem> try_named(const FieldSpec& f, const std::string& name) {
    auto c = f.named_coords(name);
    if (!c) return std::nullopt;
    return AlgElem(f, *c);
  }

  const FieldSpec& field() const { return f_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rational to_rational() const {
    if (!is_rational()) throw Error(ErrorKind::Precondition, "algebraic element is not rational");
    return c_[0];
  }

  AlgElem inverse() const {
    if (is_zero()) throw Error(ErrorKind::Zero, "inverse of zero");
    if (c_.size() == 1) return AlgElem(f_, c_[0].inverse());
    auto eg = extended_gcd(lift(), f_.modulus());
    if (eg.g.degree() != 0)
      throw Error(ErrorKind::ZeroDivisor, "element shares the factor " + eg.g.str() + " with the modulus");
    return AlgElem(f_, eg.s.coeffs());
  }

  /// Coordinates as a polynomial in the generator.
  Poly<Rational> lift() const { return Poly<Rational>({}, c_); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].str();
    return s + "]";
  }

  /// Value under the display embedding of the generator.
  std::complex<double> to_complex() const {
    auto g = f_.generator_embedding().value_or(std::complex<double>(0.0, 0.0));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + c_[i].to_double();
    return acc;
  }

  AlgElem& operator+=(const AlgElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AlgElem& operator*=(const AlgElem& o) {
    check(o);
    const std::size_t k = c_.size();
    if (k == 1) {
      c_[0] *= o.c_[0];
      return *this;
    }
    std::vector<Rational> prod(2 * k - 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    normalize();
    return *this;
  }
  AlgElem& operator/=(const AlgElem& o) { return *this *= o.inverse(); }

  AlgElem& operator+=(const Rational& r) { c_[0] += r; return *this; }
  AlgElem& operator-=(const Rational& r) { c_[0] -= r; return *this; }
  AlgElem& operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
  }

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const AlgElem& b) { return a *= b; }
  friend AlgElem operator/(AlgElem a, const AlgElem& b) { return a /= b; }
  friend AlgElem operator+(AlgElem a, const Rational& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const Rational& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const Rational& b) { return a *= b; }
  friend AlgElem operator+(const Rational& b, AlgElem a) { return a += b; }
  friend AlgElem operator*(const Rational& b, AlgElem a) { return a *= b; }
  friend AlgElem operator-(const Rational& b, const AlgElem& a) { return -a + b; }
  friend AlgElem operator-(AlgElem a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator==(const AlgElem& a, const Rational& r) { return a.is_rational() && a.c_[0] == r; }

 private:
  void check(const AlgElem& o) const {
    if (!(f_ == o.f_)) throw Error(ErrorKind::FieldMismatch, "elements of different fields");
  }
  void normalize() {
    const std::size_t k = f_.degree();
    const auto& m = f_.modulus().coeffs();
    for (std::size_t i = c_.size(); i-- > k;) {
      if (c_[i].is_zero()) continue;
      Rational f = c_[i];
      for (std::size_t j = 0; j < k; ++j) c_[i - k + j] -= f * m[j];
      c_[i] = Rational(0);
    }
    c_.resize(k, Rational(0));
  }

  FieldSpec f_;
  std::vector<Rational> c_;
};

template <>
struct ring_traits<AlgElem> {
  using context = FieldSpec;

  static const FieldSpec& context_of(const AlgElem& x) { return x.field(); }
  static AlgElem zero(const FieldSpec& f) { return AlgElem(f, Rational(0)); }
  static AlgElem one(const FieldSpec& f) { return AlgElem(f, Rational(1)); }
  static AlgElem from_rational(const FieldSpec& f, const Rational& r) { return AlgElem(f, r); }
  static bool is_zero(const AlgElem& x) { return x.is_zero(); }
  static AlgElem inverse(const AlgElem& x) { return x.inverse(); }
  static std::string str(const AlgElem& x) { return x.str(); }
  static bool is_rational(const FieldSpec& f) { return f.is_rational(); }
  static Rational to_rational(const AlgElem& x) { return x.to_rational(); }
};

// ---- presets ---------------------------------------------------------------

inline FieldSpec FieldSpec::make_preset(std::string name, std::vector<Rational> modulus,
                                        std::map<std::string, std::vector<Rational>> named,
                                        std::complex<double> embedding) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->preset = true;
  d->modulus = Poly<Rational>({}, std::move(modulus));
  d->named = std::move(named);
  d->embedding = embedding;
  return FieldSpec(std::move(d));
}

inline FieldSpec FieldSpec::qq() {
  static const FieldSpec f = make_preset("qq", {Rational(0), Rational(1)}, {}, {0.0, 0.0});
  return f;
}

inline FieldSpec FieldSpec::q_sqrt3() {
  // x^2 - 3
  static const FieldSpec f = make_preset(
      "q-sqrt3", {Rational(-3), Rational(0), Rational(1)},
      {{"sqrt3", {Rational(0), Rational(1)}}}, {1.7320508075688772, 0.0});
  return f;
}

inline FieldSpec FieldSpec::q_omega() {
  // x^2 + x + 1, generator omega = e^{2 pi i / 3}
  static const FieldSpec f = make_preset(
      "q-omega", {Rational(1), Rational(1), Rational(1)},
      {{"omega", {Rational(0), Rational(1)}}}, {-0.5, 0.8660254037844386});
  return f;
}

inline FieldSpec FieldSpec::q_zeta12() {
  // x^4 - x^2 + 1, generator zeta_12 = e^{i pi / 6}:
  //   sqrt3 = 2a - a^3, i = a^3, omega = a^2 - 1
  static const FieldSpec f = make_preset(
      "q-zeta12", {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)},
      {{"sqrt3", {Rational(0), Rational(2), Rational(0), Rational(-1)}},
       {"i", {Rational(0), Rational(0), Rational(0), Rational(1)}},
       {"omega", {Rational(-1), Rational(0), Rational(1), Rational(0)}}},
      {0.8660254037844387, 0.5});
  return f;
}

inline std::optional<FieldSpec> FieldSpec::preset(const std::string& name) {
  if (name == "qq") return qq();
  if (name == "q-sqrt3") return q_sqrt3();
  if (name == "q-omega") return q_omega();
  if (name == "q-zeta12") return q_zeta12();
  return std::nullopt;
}

inline FieldSpec FieldSpec::custom(const Poly<Rational>& modulus) {
  if (modulus.is_zero() || modulus.degree() < 1)
    throw Error(ErrorKind::Precondition, "modulus must have degree >= 1");
  if (modulus.lc() != Rational(1)) throw Error(ErrorKind::Precondition, "modulus must be monic");
  if (!is_squarefree(modulus)) throw Error(ErrorKind::Precondition, "modulus must be squarefree");
  for (const char* n : {"qq", "q-sqrt3", "q-omega", "q-zeta12"}) {
    FieldSpec p = *preset(n);
    if (p.modulus() == modulus) return p;
  }
  auto d = std::make_shared<Data>();
  d->name = "custom";
  d->modulus = modulus;
  std::vector<numeric::cld> mc;
  for (const auto& c : modulus.coeffs()) mc.emplace_back(static_cast<long double>(c.to_double()), 0.0L);
  auto roots = numeric::durand_kerner(std::move(mc));
  if (!roots.empty()) d->embedding = roots.front();
  return FieldSpec(std::move(d));
}

}  // namespace eqcrit
