#pragma once

// j-invariants of branch loci, the maps beta4 = pi3 o psi4 on the j-line, and
// classification and construction of rational quartics with prescribed
// critical values.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqcrit/critical.hpp"
#include "eqcrit/field.hpp"
#include "eqcrit/poly.hpp"
#include "eqcrit/resultant.hpp"
#include "eqcrit/roots.hpp"

namespace eqcrit {

/// A point of P^1 over the domain of T. Infinity keeps the context so that
/// maps evaluated there can still produce finite field elements.
template <class T>
class ProjValue {
 public:
  ProjValue(T v) : ctx_(ring_traits<T>::context_of(v)), v_(std::move(v)) {}  // NOLINT
  static ProjValue infinity(context_t<T> ctx = {}) { return ProjValue(std::move(ctx)); }

  bool is_infinity() const { return !v_.has_value(); }
  const T& value() const {
    if (!v_) throw Error(ErrorKind::Precondition, "value of the point at infinity");
    return *v_;
  }
  const context_t<T>& context() const { return ctx_; }
  std::string str() const { return v_ ? ring_traits<T>::str(*v_) : "inf"; }

  friend bool operator==(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    return *a.v_ == *b.v_;
  }

 private:
  explicit ProjValue(context_t<T> ctx) : ctx_(std::move(ctx)) {}
  context_t<T> ctx_;
  std::optional<T> v_;
};

/// N(x)/D(x) with rational coefficients, N and D coprime, acting on P^1.
struct RationalMap {
  Poly<Rational> num, den;

  template <class T>
  ProjValue<T> operator()(const ProjValue<T>& x) const {
    const auto& ctx = x.context();
    if (x.is_infinity()) {
      if (num.degree() > den.degree()) return ProjValue<T>::infinity(ctx);
      if (num.degree() < den.degree()) return ProjValue<T>(ring_traits<T>::zero(ctx));
      return ProjValue<T>(ring_traits<T>::from_rational(ctx, num.lc() / den.lc()));
    }
    const T d = den(x.value());
    const T n = num(x.value());
    if (is_zero(d)) {
      if (is_zero(n)) throw Error(ErrorKind::Precondition, "indeterminate rational map value");
      return ProjValue<T>::infinity(ctx);
    }
    return ProjValue<T>(n * inverse(d));
  }
  template <class T>
  ProjValue<T> operator()(const T& x) const {
    return (*this)(ProjValue<T>(x));
  }

  /// this o inner, homogenized so that it is correct at every point of P^1.
  RationalMap compose(const RationalMap& inner) const {
    const std::size_t n = std::max(num.degree(), den.degree());
    auto homog = [&](const Poly<Rational>& p) {
      Poly<Rational> acc;
      for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        acc += p.coeffs()[k] * pow(inner.num, k) * pow(inner.den, n - k);
      return acc;
    };
    Poly<Rational> a = homog(num), b = homog(den);
    Poly<Rational> g = gcd(a, b);
    return {a / g, b / g};
  }

  /// Equality as rational functions.
  friend bool operator==(const RationalMap& f, const RationalMap& g) {
    return f.num * g.den == g.num * f.den;
  }
};

namespace maps {

namespace detail {
inline Poly<Rational> X() { return Poly<Rational>::variable({}); }
inline Poly<Rational> K(const Rational& c) { return Poly<Rational>({}, {c}); }
}  // namespace detail

/// 2^-18 j (j - 1536)^3 / (j - 1728).
inline RationalMap beta4() {
  using namespace detail;
  return {X() * pow(X() - K(1536), 3) * Rational(1, 262144), X() - K(1728)};
}
/// j/64 - 27.
inline RationalMap psi4() {
  using namespace detail;
  return {X() * Rational(1, 64) - K(27), K(1)};
}
/// (u + 3)^3 (u + 27) / u.
inline RationalMap pi3() {
  using namespace detail;
  return {pow(X() + K(3), 3) * (X() + K(27)), X()};
}
/// (t + 2)/(t - 1), an involution.
inline RationalMap gamma() {
  using namespace detail;
  return {X() + K(2), X() - K(1)};
}
/// 27 / (t^3 - 1).
inline RationalMap x1() {
  using namespace detail;
  return {K(27), pow(X(), 3) - K(1)};
}
/// 3 (t - 1)^3 / (t^2 + t + 1).
inline RationalMap x2() {
  using namespace detail;
  return {pow(X() - K(1), 3) * Rational(3), X() * X() + X() + K(1)};
}
/// 1728 t^3 / (t^3 - 1).
inline RationalMap j1() {
  using namespace detail;
  return {pow(X(), 3) * Rational(1728), pow(X(), 3) - K(1)};
}
/// 1728 + 192 (t - 1)^3 / (t^2 + t + 1).
inline RationalMap j2() {
  using namespace detail;
  Poly<Rational> q = X() * X() + X() + K(1);
  return {q * Rational(1728) + pow(X() - K(1), 3) * Rational(192), q};
}
/// 27 (t (t^3 + 8) / (t^3 - 1))^3.
inline RationalMap jt() {
  using namespace detail;
  return {pow(X() * (pow(X(), 3) + K(8)), 3) * Rational(27), pow(pow(X(), 3) - K(1), 3)};
}

/// Lookup by CLI name.
inline std::optional<RationalMap> by_name(const std::string& name) {
  if (name == "beta4") return beta4();
  if (name == "psi4") return psi4();
  if (name == "pi3") return pi3();
  if (name == "gamma") return gamma();
  if (name == "x1") return x1();
  if (name == "x2") return x2();
  if (name == "j1") return j1();
  if (name == "j2") return j2();
  if (name == "jt") return jt();
  return std::nullopt;
}

}  // namespace maps

template <class T>
ProjValue<T> beta4(const ProjValue<T>& j) { return maps::beta4()(j); }
template <class T>
ProjValue<T> psi4(const ProjValue<T>& j) { return maps::psi4()(j); }
template <class T>
ProjValue<T> pi3(const ProjValue<T>& u) { return maps::pi3()(u); }

template <class T>
struct ShortWeierstrass {
  T A, B;

  T discriminant() const {
    return lift_like(A, Rational(-16)) * (lift_like(A, Rational(4)) * A * A * A + lift_like(A, Rational(27)) * B * B);
  }
  /// -1728 (4A)^3 / Delta, infinity when singular.
  ProjValue<T> j() const {
    const T d = discriminant();
    if (is_zero(d)) return ProjValue<T>::infinity(ring_traits<T>::context_of(A));
    const T four_a = lift_like(A, Rational(4)) * A;
    return ProjValue<T>(lift_like(A, Rational(-1728)) * four_a * four_a * four_a * inverse(d));
  }

  friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

/// p(y - shift) = y^3 + A y + B for a monic cubic p; shift = a2/3.
template <class T>
struct DepressedCubic {
  T A, B, shift;
};

template <class T>
DepressedCubic<T> depress(const Poly<T>& p) {
  if (p.is_zero() || p.degree() != 3) throw Error(ErrorKind::DegreeMismatch, "expected a cubic");
  if (!(p.lc() == p.one_elem())) throw Error(ErrorKind::Precondition, "expected a monic cubic");
  const T a2 = p.coeff(2), a1 = p.coeff(1), a0 = p.coeff(0);
  const T s = a2 * p.scalar(Rational(1, 3));
  const T A = a1 - a2 * s;
  const T B = a0 - a1 * s + p.scalar(Rational(2)) * s * s * s;
  return {A, B, s};
}

/// j-invariant of the quadruple {roots of p, infinity}.
template <class T>
ProjValue<T> j_of_cubic(const Poly<T>& p) {
  const auto d = depress(p);
  return ShortWeierstrass<T>{d.A, d.B}.j();
}

/// 3x^4 + 6Ax^2 + 12Bx - A^2.
template <class T>
Poly<T> weierstrass_integral(const ShortWeierstrass<T>& E) {
  const auto ctx = ring_traits<T>::context_of(E.A);
  auto q = [&](long r) { return ring_traits<T>::from_rational(ctx, Rational(r)); };
  return Poly<T>(ctx, {-(E.A * E.A), q(12) * E.B, q(6) * E.A, q(0), q(3)});
}

/// 2^20 A^3 (A^3 - 54B^2)^3 / (B^2 Delta^3); infinity when B = 0 or Delta = 0,
/// matching beta4 at j = 1728 and j = infinity.
template <class T>
ProjValue<T> jcv_of_curve(const ShortWeierstrass<T>& E) {
  const auto ctx = ring_traits<T>::context_of(E.A);
  const T d = E.discriminant();
  if (is_zero(E.B) || is_zero(d)) return ProjValue<T>::infinity(ctx);
  const T a3 = E.A * E.A * E.A;
  const T m = a3 - lift_like(E.A, Rational(54)) * E.B * E.B;
  const T num = lift_like(E.A, Rational(1 << 20)) * a3 * m * m * m;
  return ProjValue<T>(num * inverse(E.B * E.B * d * d * d));
}

/// E_j : y^2 = x^3 + 3j/(1728-j) x + 2j/(1728-j).
template <class T>
ShortWeierstrass<T> curve_with_j(const T& j) {
  if (is_zero(j) || j == lift_like(j, Rational(1728)))
    throw Error(ErrorKind::EllipticJ, "curve_with_j needs j not in {0, 1728}");
  const T k = j * inverse(lift_like(j, Rational(1728)) - j);
  ShortWeierstrass<T> E{lift_like(j, Rational(3)) * k, lift_like(j, Rational(2)) * k};
  if (!(E.j() == ProjValue<T>(j))) throw Error(ErrorKind::VerificationFailed, "curve_with_j round trip");
  return E;
}

/// alpha with (A1, B1) = (alpha^2 A0, alpha^3 B0); x -> alpha x carries the
/// 2-torsion abscissae of E0 onto those of E1.
template <class T>
T twist_scale(const ShortWeierstrass<T>& E0, const ShortWeierstrass<T>& E1) {
  if (is_zero(E0.A) || is_zero(E0.B) || is_zero(E1.A) || is_zero(E1.B))
    throw Error(ErrorKind::EllipticJ, "twist_scale needs A, B nonzero (j not in {0, 1728})");
  if (!(E0.j() == E1.j())) throw Error(ErrorKind::JMismatch, "curves have different j-invariants");
  const T alpha = E0.A * E1.B * inverse(E1.A * E0.B);
  if (!(alpha * alpha * E0.A == E1.A) || !(alpha * alpha * alpha * E0.B == E1.B))
    throw Error(ErrorKind::VerificationFailed, "twist scale does not satisfy alpha^2 = A1/A0, alpha^3 = B1/B0");
  return alpha;
}

// ---- fibers of beta4 over Q --------------------------------------------------

/// j (j - 1536)^3 - 2^18 v (j - 1728).
inline Poly<Rational> fiber_polynomial(const Rational& v) {
  const auto X = Poly<Rational>::variable({});
  const Poly<Rational> c1536({}, {Rational(-1536), Rational(1)});
  const Poly<Rational> c1728({}, {Rational(-1728), Rational(1)});
  return X * pow(c1536, 3) - c1728 * (v * Rational(262144));
}

/// Discriminant in j of the fiber polynomial, as a polynomial in v.
inline Poly<Rational> fiber_discriminant() {
  using P = Poly<Rational>;
  const P v = P::variable({});
  auto k = [](long c) { return P({}, {Rational(c)}); };
  // j^4 - 4608 j^3 + 7077888 j^2 + (-3623878656 - 2^18 v) j + 2^18 * 1728 v
  std::vector<P> c{v * Rational(262144L * 1728L), k(-3623878656L) - v * Rational(262144), k(7077888), k(-4608), k(1)};
  return discriminant(Poly<P>({}, std::move(c)));
}

struct FiberFactor {
  Poly<Rational> factor;  // monic, no rational roots
  unsigned multiplicity = 1;
};

struct Fiber {
  ProjValue<Rational> v = ProjValue<Rational>::infinity();
  Poly<Rational> polynomial;  // whose finite roots are the fiber
  std::vector<RationalRoot> rational;
  std::vector<FiberFactor> irrational;
  unsigned infinity_multiplicity = 0;

  unsigned total_multiplicity() const {
    unsigned n = infinity_multiplicity;
    for (const auto& r : rational) n += r.multiplicity;
    for (const auto& f : irrational) n += static_cast<unsigned>(f.factor.degree()) * f.multiplicity;
    return n;
  }
};

inline Fiber fiber_beta4(const ProjValue<Rational>& v) {
  Fiber out;
  out.v = v;
  if (v.is_infinity()) {
    // beta4 has a simple pole at 1728 and a triple one at infinity.
    out.polynomial = Poly<Rational>({}, {Rational(-1728), Rational(1)});
    out.rational.push_back({Rational(1728), 1});
    out.infinity_multiplicity = 3;
    return out;
  }
  out.polynomial = fiber_polynomial(v.value());
  out.rational = rational_roots_with_multiplicity(out.polynomial);
  for (auto [factor, mult] : squarefree_decomposition(out.polynomial)) {
    for (const auto& r : out.rational)
      if (factor(r.value).is_zero()) factor = exact_div(factor, Poly<Rational>({}, {-r.value, Rational(1)}));
    if (factor.degree() > 0) out.irrational.push_back({monic(factor), mult});
  }
  return out;
}

// ---- CJ(Q) membership and classification ----------------------------------

/// All rational u with pi3(u) = v, ascending. For v = infinity this is {0}.
inline std::vector<Rational> cj_witnesses(const ProjValue<Rational>& v) {
  if (v.is_infinity()) return {Rational(0)};
  const auto& m = maps::pi3();
  std::vector<Rational> out;
  for (const auto& r : rational_roots_with_multiplicity(m.num - m.den * v.value())) out.push_back(r.value);
  return out;
}

inline std::optional<Rational> cj_membership(const ProjValue<Rational>& v) {
  auto w = cj_witnesses(v);
  if (w.empty()) return std::nullopt;
  return w.front();
}

template <class T>
struct BranchTriple {
  T y1, y2, y3;

  /// (y - y1)(y - y2)(y - y3); NotDistinct unless pairwise distinct.
  Poly<T> cubic() const {
    if (y1 == y2 || y1 == y3 || y2 == y3) throw Error(ErrorKind::NotDistinct, "critical values must be distinct");
    const auto ctx = ring_traits<T>::context_of(y1);
    auto lin = [&](const T& y) { return Poly<T>(ctx, {-y, ring_traits<T>::one(ctx)}); };
    return lin(y1) * lin(y2) * lin(y3);
  }
};

enum class Existence { Exists, DoesNotExist, OutOfTheoremScope };

constexpr std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::Exists: return "exists";
    case Existence::DoesNotExist: return "does-not-exist";
    case Existence::OutOfTheoremScope: return "out-of-scope";
  }
  return "?";
}

struct Classification {
  ProjValue<Rational> j = ProjValue<Rational>::infinity();
  Existence status = Existence::DoesNotExist;
  std::optional<Rational> witness_u;
};

/// Classification for a target given as a monic squarefree cubic over Q (the
/// critical values need not be rational individually).
inline Classification classify_cubic(const Poly<Rational>& q) {
  if (!is_squarefree(q)) throw Error(ErrorKind::NotDistinct, "target cubic has a repeated root");
  Classification c;
  c.j = j_of_cubic(q);
  const Rational& j = c.j.value();
  if (j.is_zero() || j == Rational(1728)) {
    c.status = Existence::OutOfTheoremScope;
    return c;
  }
  c.witness_u = cj_membership(c.j);
  c.status = c.witness_u ? Existence::Exists : Existence::DoesNotExist;
  return c;
}

inline Classification classify_critical_values(const BranchTriple<Rational>& t) { return classify_cubic(t.cubic()); }

// ---- lifting ------------------------------------------------------------------

/// quartic = scale * weierstrass_integral(curve) + shift.
struct Lift {
  Rational j0;
  ShortWeierstrass<Rational> curve;
  Rational scale, shift;
  Poly<Rational> quartic;
};

struct LiftAttempt {
  Rational j0;
  std::optional<Lift> lift;
  std::optional<std::string> obstruction;
};

namespace detail {

inline std::optional<Rational> rational_cube_root(const Rational& r) {
  Integer n = r.num(), d = r.den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
  return Rational(rn, rd);
}

/// Post-composes f0 so that its critical values become the roots of q. alpha
/// is the scale between the depressed cvpoly of f0 and the depressed q.
inline Lift assemble_lift(const Rational& j0, const ShortWeierstrass<Rational>& E, const Poly<Rational>& q,
                          const Rational& alpha) {
  const Poly<Rational> f0 = weierstrass_integral(E);
  const auto d0 = depress(cvpoly(f0).poly);
  const auto d1 = depress(q);
  Lift L{j0, E, alpha, alpha * d0.shift - d1.shift, {}};
  L.quartic = post_compose(L.scale, L.shift, f0);
  if (!(cvpoly(L.quartic).poly == q))
    throw Error(ErrorKind::VerificationFailed, "lifted quartic does not have the target critical values");
  return L;
}

}  // namespace detail

/// One lift attempt per rational point j0 of the beta4-fiber over j(q).
inline std::vector<LiftAttempt> lift_all_cubic(const Poly<Rational>& q) {
  if (!is_squarefree(q)) throw Error(ErrorKind::NotDistinct, "target cubic has a repeated root");
  const auto target = depress(q);
  const ProjValue<Rational> v = j_of_cubic(q);
  std::vector<LiftAttempt> out;
  for (const auto& r : fiber_beta4(v).rational) {
    LiftAttempt at{r.value, std::nullopt, std::nullopt};
    if (r.value.is_zero()) {
      // y^2 = x^3 + B': its integral 3x^4 + 12B'x has cvpoly y^3 + 729 B'^4,
      // so alpha = 1/(9B') always works.
      ShortWeierstrass<Rational> E{Rational(0), target.B};
      at.lift = detail::assemble_lift(r.value, E, q, Rational(1) / (Rational(9) * target.B));
    } else if (target.A.is_zero()) {
      // j0 = 1536 over an elliptic target: the scale is a cube root.
      ShortWeierstrass<Rational> E = curve_with_j(r.value);
      const auto d0 = depress(cvpoly(weierstrass_integral(E)).poly);
      if (auto alpha = detail::rational_cube_root(target.B / d0.B))
        at.lift = detail::assemble_lift(r.value, E, q, *alpha);
      else
        at.obstruction = "scale " + (target.B / d0.B).str() + " is not a rational cube";
    } else {
      ShortWeierstrass<Rational> E = curve_with_j(r.value);
      const auto d0 = depress(cvpoly(weierstrass_integral(E)).poly);
      const Rational alpha = twist_scale(ShortWeierstrass<Rational>{d0.A, d0.B}, {target.A, target.B});
      at.lift = detail::assemble_lift(r.value, E, q, alpha);
    }
    out.push_back(std::move(at));
  }
  return out;
}

/// A rational quartic whose critical values are the roots of q.
inline Lift lift_quartic_cubic(const Poly<Rational>& q) {
  const auto attempts = lift_all_cubic(q);
  for (const auto& a : attempts)
    if (a.lift) return *a.lift;
  const ProjValue<Rational> v = j_of_cubic(q);
  if (v.value() == Rational(1728))
    throw Error(ErrorKind::EllipticTargetObstruction,
                "critical j-invariant 1728: the fiber points 1152 +- 384 sqrt3 are irrational");
  if (!attempts.empty())
    throw Error(ErrorKind::EllipticTargetObstruction, "elliptic target: " + *attempts.front().obstruction);
  throw Error(ErrorKind::NoRationalFiberPoint, "no rational point in the beta4-fiber over " + v.str());
}

inline std::vector<LiftAttempt> lift_all(const BranchTriple<Rational>& t) { return lift_all_cubic(t.cubic()); }
inline Lift lift_quartic(const BranchTriple<Rational>& t) { return lift_quartic_cubic(t.cubic()); }

}  // namespace eqcrit
