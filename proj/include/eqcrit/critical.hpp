#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqcrit/field.hpp"
#include "eqcrit/poly.hpp"
#include "eqcrit/resultant.hpp"
#include "eqcrit/roots.hpp"

namespace eqcrit {

/// Monic degree-(d-1) polynomial in y whose roots, with multiplicity, are the
/// finite critical values of a degree-d source polynomial.
template <class T>
struct CVPoly {
  Poly<T> poly;
  std::size_t source_degree = 0;

  friend bool operator==(const CVPoly&, const CVPoly&) = default;
};

template <class T>
Poly<Rational> to_rational_poly(const Poly<T>& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(ring_traits<T>::to_rational(x));
  return Poly<Rational>({}, std::move(c));
}

template <class T>
Poly<T> from_rational_poly(const context_t<T>& ctx, const Poly<Rational>& p) {
  return Poly<T>::from_rationals(ctx, p.coeffs());
}

/// Critical-value polynomial via Res_x(f'(x), f(x) - y), made monic.
template <class T>
CVPoly<T> cvpoly(const Poly<T>& f, std::size_t d) {
  if (d < 2 || f.is_zero() || f.degree() != d)
    throw Error(ErrorKind::DegreeMismatch, "cvpoly expects a polynomial of degree exactly " + std::to_string(d));
  const auto& ctx = f.context();
  using Inner = Poly<T>;
  std::vector<Inner> dp, fy;
  const Poly<T> df = derivative(f);
  for (const auto& c : df.coeffs()) dp.push_back(Inner(ctx, {c}));
  for (const auto& c : f.coeffs()) fy.push_back(Inner(ctx, {c}));
  fy[0] = fy[0] - Inner::variable(ctx);
  Poly<T> res = resultant(Poly<Inner>(ctx, std::move(dp)), Poly<Inner>(ctx, std::move(fy)));
  return {monic(res), d};
}

template <class T>
CVPoly<T> cvpoly(const Poly<T>& f) {
  if (f.is_zero()) throw Error(ErrorKind::DegreeMismatch, "cvpoly of the zero polynomial");
  return cvpoly(f, f.degree());
}

namespace detail {

/// Elementary symmetric functions e_0..e_n of the points.
template <class T>
std::vector<T> elementary_symmetric(std::span<const T> xs) {
  const T one = ring_traits<T>::one(ring_traits<T>::context_of(xs.front()));
  std::vector<T> e{one};
  for (const auto& x : xs) {
    e.push_back(one - one);
    for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] = e[i] + e[i - 1] * x;
  }
  return e;
}

}  // namespace detail

/// Critical points -> critical values of the normalized degree-d polynomial
/// with those critical points, d = points.size() + 1:
///   y_j = sum_{i=0}^{d-1} (-1)^i d/(d-i) e_i x_j^(d-i).
template <class T>
std::vector<T> theta(std::span<const T> points) {
  if (points.empty()) throw Error(ErrorKind::Precondition, "theta needs at least one critical point");
  const std::size_t d = points.size() + 1;
  const auto e = detail::elementary_symmetric(points);
  std::vector<T> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    T y = lift_like(x, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      Rational w = Rational(d) / Rational(d - i);
      if (i % 2) w = -w;
      y = y + e[i] * power(x, static_cast<unsigned>(d - i)) * lift_like(x, w);
    }
    out.push_back(std::move(y));
  }
  return out;
}

/// Normalized (monic, zero constant term) polynomial whose derivative is
/// d * prod (x - x_i).
template <class T>
Poly<T> poly_from_critical_points(std::span<const T> points) {
  if (points.empty()) throw Error(ErrorKind::Precondition, "need at least one critical point");
  const auto& ctx = ring_traits<T>::context_of(points.front());
  const std::size_t d = points.size() + 1;
  Poly<T> prod(ctx, {ring_traits<T>::from_rational(ctx, Rational(d))});
  for (const auto& x : points) prod = prod * Poly<T>(ctx, {-x, ring_traits<T>::one(ctx)});
  return integrate(prod);
}

template <class T>
bool is_morse(const Poly<T>& f) {
  return is_squarefree(cvpoly(f).poly);
}

template <class T>
bool equicritical(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() || g.is_zero() || f.degree() != g.degree())
    throw Error(ErrorKind::DegreeMismatch, "equicriticality compares polynomials of equal degree");
  return cvpoly(f) == cvpoly(g);
}

/// f(a x + b).
template <class T>
Poly<T> apply_affine(const Poly<T>& f, const T& a, const T& b) {
  if (is_zero(a)) throw Error(ErrorKind::ZeroScale, "affine precomposition with a = 0");
  return compose(f, Poly<T>(f.context(), {b, a}));
}

/// c f + e.
template <class T>
Poly<T> post_compose(const T& c, const T& e, const Poly<T>& f) {
  if (is_zero(c)) throw Error(ErrorKind::ZeroScale, "affine postcomposition with c = 0");
  return f * c + Poly<T>(f.context(), {e});
}

enum class Equivalence { Equivalent, Inequivalent, Undecided };

constexpr std::string_view to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::Inequivalent: return "inequivalent";
    case Equivalence::Undecided: return "undecided";
  }
  return "?";
}

template <class T>
struct EquivalenceVerdict {
  Equivalence status = Equivalence::Undecided;
  std::optional<std::pair<T, T>> witness;  // (a, b) with f = g(a x + b)
  std::optional<Poly<T>> obstruction;      // gcd polynomial in a, when undecided
};

/// Decides whether f = g(a x + b) for some a, b in the field of f and g.
///
/// The x^3 equation fixes b = (f3/a^3 - g3) / (4 g4). Substituting into the
/// remaining coefficient equations and clearing the denominator 4 g4 a^3 gives
/// polynomials in a alone; their common roots (with a^4 g4 = f4) are the only
/// candidates for a.
template <class T>
EquivalenceVerdict<T> affine_equivalent(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() || g.is_zero() || f.degree() != g.degree())
    throw Error(ErrorKind::DegreeMismatch, "affine equivalence compares polynomials of equal degree");
  if (f.degree() != 4) throw Error(ErrorKind::NotQuartic, "affine equivalence is implemented for quartics");
  if (!(f.context() == g.context())) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  const auto& ctx = f.context();
  using P = Poly<T>;
  auto cst = [&](const T& c) { return P(ctx, {c}); };
  const P a = P::variable(ctx);
  const P a3 = pow(a, 3);
  const P num = cst(f.coeff(3)) - cst(g.coeff(3)) * a3;
  const P den = cst(g.coeff(4) * f.scalar(Rational(4))) * a3;

  static constexpr long binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  std::optional<P> common;
  for (std::size_t k = 0; k <= 4; ++k) {
    P ek(ctx);
    for (std::size_t n = k; n <= 4; ++n)
      ek += cst(g.coeff(n) * f.scalar(Rational(binom[n][k]))) * pow(a, static_cast<unsigned>(k)) *
            pow(num, static_cast<unsigned>(n - k)) * pow(den, static_cast<unsigned>(4 - n));
    ek -= cst(f.coeff(k)) * pow(den, static_cast<unsigned>(4 - k));
    if (ek.is_zero()) continue;
    common = common ? gcd(*common, ek) : monic(ek);
  }

  EquivalenceVerdict<T> v;
  if (!common || common->degree() == 0) {
    v.status = Equivalence::Inequivalent;
    return v;
  }

  std::vector<T> candidates;
  if (common->degree() == 1) {
    candidates.push_back(-common->coeff(0));
  } else if (ring_traits<T>::is_rational(ctx)) {
    for (const auto& r : rational_roots_with_multiplicity(to_rational_poly(*common)))
      candidates.push_back(ring_traits<T>::from_rational(ctx, r.value));
  } else {
    v.status = Equivalence::Undecided;
    v.obstruction = *common;
    return v;
  }

  for (const auto& ca : candidates) {
    if (is_zero(ca)) continue;
    T b = num(ca) * inverse(den(ca));
    if (apply_affine(g, ca, b) == f) {
      v.status = Equivalence::Equivalent;
      v.witness = std::make_pair(ca, b);
      return v;
    }
  }
  v.status = Equivalence::Inequivalent;
  return v;
}

}  // namespace eqcrit
