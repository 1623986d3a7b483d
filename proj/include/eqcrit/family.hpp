#pragma once

// The basis of inequivalent equicritical quartic pairs: the generic
// t-family, its construction from twisted Weierstrass integrals, and the
// special pairs over the j_CV = 0, 1728, infinity fibers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqcrit/critical.hpp"
#include "eqcrit/field.hpp"
#include "eqcrit/moduli.hpp"

namespace eqcrit {

enum class PairCase {
  Generic,
  T0,
  T1,
  Tm2,
  TInfinity,
  Rho,
  RhoBar,
  OmegaRho,
  Omega2Rho,
  OmegaRhoBar,
  Omega2RhoBar,
  M2Omega,
  M2Omega2,
  CuspOmega,
};

constexpr std::string_view to_string(PairCase c) {
  switch (c) {
    case PairCase::Generic: return "generic";
    case PairCase::T0: return "t0";
    case PairCase::T1: return "t1";
    case PairCase::Tm2: return "t-2";
    case PairCase::TInfinity: return "t-inf";
    case PairCase::Rho: return "rho";
    case PairCase::RhoBar: return "rho-bar";
    case PairCase::OmegaRho: return "omega-rho";
    case PairCase::Omega2Rho: return "omega2-rho";
    case PairCase::OmegaRhoBar: return "omega-rho-bar";
    case PairCase::Omega2RhoBar: return "omega2-rho-bar";
    case PairCase::M2Omega: return "-2omega";
    case PairCase::M2Omega2: return "-2omega2";
    case PairCase::CuspOmega: return "cusp-omega";
  }
  return "?";
}

/// x^4 - 6t^3 x^2 - 8t^3 x.
template <class T>
Poly<T> f_t(const T& t) {
  const auto& ctx = ring_traits<T>::context_of(t);
  auto k = [&](long r) { return ring_traits<T>::from_rational(ctx, Rational(r)); };
  const T t3 = t * t * t;
  return Poly<T>(ctx, {k(0), k(-8) * t3, k(-6) * t3, k(0), k(1)});
}

/// With v = t^4 (t-1)^3 / (t+2):
///   -(t-1)^3 v / (3 (t+2)^3) x^4 + 2v x^2 + (8/3) v x - 8 t^4 (t^2 + t + 1).
template <class T>
Poly<T> g_t(const T& t) {
  const auto& ctx = ring_traits<T>::context_of(t);
  auto k = [&](const Rational& r) { return ring_traits<T>::from_rational(ctx, r); };
  const T tm1 = t - k(1), tp2 = t + k(2);
  if (is_zero(tm1) || is_zero(tp2)) throw Error(ErrorKind::PoleAtT, "g_t is undefined at t = 1 and t = -2");
  const T t4 = t * t * t * t;
  const T tm1_3 = tm1 * tm1 * tm1;
  const T tp2_inv = inverse(tp2);
  const T v = t4 * tm1_3 * tp2_inv;
  const T c4 = -(tm1_3 * v * k(Rational(1, 3)) * tp2_inv * tp2_inv * tp2_inv);
  const T q = t * t + t + k(1);
  const T c0 = k(-8) * t4 * q;

  // Same coefficients in the normalized-pipeline form.
  const T c4_alt = -(t4 * tm1_3 * tm1_3 * k(Rational(1, 3)) * tp2_inv * tp2_inv * tp2_inv * tp2_inv);
  const T c0_alt = t4 * tp2 * tp2 - k(12) * t4 * q + k(3) * t4 * t * t;
  if (!(c4 == c4_alt) || !(c0 == c0_alt)) throw Error(ErrorKind::VerificationFailed, "g_t closed forms disagree");

  return Poly<T>(ctx, {c0, k(Rational(8, 3)) * v, k(2) * v, k(0), c4});
}

/// The second member of c_0: -x^4/48 - x^2/4 + x/6 - 1/2.
template <class T>
Poly<T> g_zero(const context_t<T>& ctx) {
  const Rational c[] = {Rational(-1, 2), Rational(1, 6), Rational(-1, 4), Rational(0), Rational(-1, 48)};
  return Poly<T>::from_rationals(ctx, c);
}

struct EquicriticalPair {
  Poly<AlgElem> f, g;
  ProjValue<AlgElem> t = ProjValue<AlgElem>::infinity();
  PairCase kind = PairCase::Generic;
  FieldSpec field;
  Poly<AlgElem> cv;  // common cvpoly
  bool equicritical_exact = false;
  bool inequivalent = false;
};

namespace detail {

inline bool is_root(const AlgElem& t, std::initializer_list<long> coeffs) {
  AlgElem acc(t.field(), Rational(0));
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) acc = acc * t + Rational(*it);
  return acc.is_zero();
}

/// Constants (sqrt3, omega, i) used to build the special pairs: the field's
/// named elements when present, otherwise values derived from t itself.
struct SpecialConstants {
  std::optional<AlgElem> sqrt3, omega, i;
};

inline SpecialConstants constants_of(const FieldSpec& f) {
  return {AlgElem::try_named(f, "sqrt3"), AlgElem::try_named(f, "omega"), AlgElem::try_named(f, "i")};
}

}  // namespace detail

/// Case of the parameter t in the field of t (membership tests are exact).
inline PairCase case_of(const ProjValue<AlgElem>& tp) {
  if (tp.is_infinity()) return PairCase::TInfinity;
  const AlgElem& t = tp.value();
  const FieldSpec& f = t.field();
  const auto k = detail::constants_of(f);
  if (t.is_zero()) return PairCase::T0;
  if (t == Rational(1)) return PairCase::T1;
  if (t == Rational(-2)) return PairCase::Tm2;
  if (detail::is_root(t, {1, 1, 1})) return PairCase::CuspOmega;
  if (detail::is_root(t, {4, -2, 1})) {
    // t = -2 omega or -2 omega^2
    if (k.omega && !(t == *k.omega * Rational(-2))) return PairCase::M2Omega2;
    return PairCase::M2Omega;
  }
  if (detail::is_root(t, {-2, -2, 1})) {
    // t = 1 +- sqrt3
    if (k.sqrt3 && !(t == *k.sqrt3 + Rational(1))) return PairCase::RhoBar;
    return PairCase::Rho;
  }
  if (detail::is_root(t, {-8, 0, 0, -20, 0, 0, 1})) {
    // t^3 = 10 +- 6 sqrt3, so t = omega^k rho or omega^k rho-bar with k = 1, 2.
    if (!k.sqrt3 || !k.omega) return PairCase::OmegaRho;
    const AlgElem rho = *k.sqrt3 + Rational(1), rho_bar = Rational(1) - *k.sqrt3;
    const AlgElem w = *k.omega, w2 = w * w;
    if (t == w * rho) return PairCase::OmegaRho;
    if (t == w2 * rho) return PairCase::Omega2Rho;
    if (t == w * rho_bar) return PairCase::OmegaRhoBar;
    return PairCase::Omega2RhoBar;
  }
  return PairCase::Generic;
}

/// Verifies (f, g) exactly and packages it; a failing check aborts.
inline EquicriticalPair certify(Poly<AlgElem> f, Poly<AlgElem> g, const ProjValue<AlgElem>& t, PairCase kind,
                                const FieldSpec& field) {
  EquicriticalPair p{std::move(f), std::move(g), t, kind, field, {}, false, false};
  const auto cf = cvpoly(p.f), cg = cvpoly(p.g);
  p.equicritical_exact = cf == cg;
  const auto verdict = affine_equivalent(p.f, p.g);
  p.inequivalent = verdict.status == Equivalence::Inequivalent;
  if (!p.equicritical_exact)
    throw Error(ErrorKind::VerificationFailed, "pair at t = " + t.str() + " is not equicritical");
  if (!p.inequivalent)
    throw Error(ErrorKind::VerificationFailed,
                "pair at t = " + t.str() + " is not certified inequivalent (" + std::string(to_string(verdict.status)) + ")");
  p.cv = cf.poly;
  return p;
}

/// The generic pair rebuilt from the two Weierstrass integrals:
/// f^t for E_t = (-3t^3, -2t^3), g^t for the curve at gamma(t), g^t moved by
/// lambda_t(z) = -t^4 (t-1)^6 / (3 (t+2)^4) z - 36 t^4 (t^2 + t + 1), then
/// both normalized by z -> z/3 + 3t^6.
inline EquicriticalPair pipeline_pair(const AlgElem& t) {
  const FieldSpec& F = t.field();
  auto k = [&](const Rational& r) { return AlgElem(F, r); };
  const AlgElem tm1 = t - Rational(1), tp2 = t + Rational(2);
  if (tm1.is_zero() || tp2.is_zero()) throw Error(ErrorKind::PoleAtT, "pipeline undefined at t = 1 and t = -2");
  if (case_of(t) != PairCase::Generic)
    throw Error(ErrorKind::ExcludedT, "t = " + t.str() + " is outside the generic range");

  const AlgElem s = tp2 / tm1;
  const AlgElem t3 = t * t * t, s3 = s * s * s;
  const ShortWeierstrass<AlgElem> Et{t3 * Rational(-3), t3 * Rational(-2)};
  const ShortWeierstrass<AlgElem> Es{s3 * Rational(-3), s3 * Rational(-2)};
  if (!(Et.j() == maps::j1()(t)) || !(Es.j() == maps::j2()(t)))
    throw Error(ErrorKind::VerificationFailed, "curve j-invariants do not match j1(t), j2(t)");

  const AlgElem t4 = t3 * t, t6 = t3 * t3;
  const AlgElem tm1_6 = tm1 * tm1 * tm1 * tm1 * tm1 * tm1;
  const AlgElem tp2_4 = tp2 * tp2 * tp2 * tp2;
  const AlgElem c = -(t4 * tm1_6) / (tp2_4 * Rational(3));
  const AlgElem e = t4 * (t * t + t + Rational(1)) * Rational(-36);
  const AlgElem third = k(Rational(1, 3)), shift = t6 * Rational(3);

  Poly<AlgElem> f = post_compose(third, shift, weierstrass_integral(Et));
  Poly<AlgElem> g = post_compose(third, shift, post_compose(c, e, weierstrass_integral(Es)));
  return certify(std::move(f), std::move(g), t, PairCase::Generic, F);
}

/// The pair attached to t (possibly infinity) over `field`.
inline EquicriticalPair pair(const ProjValue<AlgElem>& t, const FieldSpec& field) {
  if (!t.is_infinity() && !(t.value().field() == field))
    throw Error(ErrorKind::FieldMismatch, "t is not an element of " + field.name());
  using P = Poly<AlgElem>;
  const PairCase kind = case_of(t);
  auto q = [&](const Rational& r) { return AlgElem(field, r); };
  auto from = [&](std::initializer_list<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    return P::from_rationals(field, r);
  };
  auto fin = [&](P f, P g) { return certify(std::move(f), std::move(g), t, kind, field); };
  auto rev = [&](P f, P g) { return certify(std::move(g), std::move(f), t, kind, field); };

  const P f0 = from({0, -1, 0, 0, 1});
  const P g0 = g_zero<AlgElem>(field);
  const P f1 = from({0, 0, 9, 6, 1});
  const P g1 = from({0, 0, 0, -6, -3});
  const auto consts = detail::constants_of(field);

  switch (kind) {
    case PairCase::Generic:
      return fin(f_t(t.value()), g_t(t.value()));
    case PairCase::T0: return fin(f0, g0);
    case PairCase::Tm2: return rev(f0, g0);
    case PairCase::T1: return fin(f1, g1);
    case PairCase::TInfinity: return rev(f1, g1);
    case PairCase::CuspOmega:
      throw Error(ErrorKind::NoPair, "t = " + t.str() + " is a cusp: no inequivalent equicritical pair");
    case PairCase::M2Omega:
    case PairCase::M2Omega2: {
      // c_{-2w} = (g0, w g0), c_{-2w^2} its reverse.
      const AlgElem w = consts.omega ? *consts.omega : t.value() * Rational(-1, 2);
      if (kind == PairCase::M2Omega) return fin(g0, g0 * w);
      return rev(g0, g0 * w);
    }
    case PairCase::Rho:
    case PairCase::RhoBar: {
      // c = (f_r, -f_r + 2C) with C = -720 s - 1248, s = r - 1 in {sqrt3, -sqrt3}.
      const AlgElem s = t.value() - Rational(1);
      const AlgElem C = s * Rational(-720) - Rational(1248);
      const P fr = f_t(t.value());
      return fin(fr, post_compose(q(-1), C * Rational(2), fr));
    }
    case PairCase::OmegaRho:
    case PairCase::Omega2Rho:
    case PairCase::OmegaRhoBar:
    case PairCase::Omega2RhoBar: {
      AlgElem s(field, Rational(0)), w(field, Rational(0));
      if (consts.sqrt3 && consts.omega) {
        s = *consts.sqrt3;
        w = *consts.omega;
      } else {
        // No named constants: read t as omega * rho.
        const AlgElem& tv = t.value();
        s = (tv * tv * tv - Rational(10)) * Rational(1, 6);
        w = tv / (s + Rational(1));
      }
      // i sqrt3 = 2 omega + 1 ties i to the chosen sqrt3 and omega.
      const AlgElem i = consts.i && consts.sqrt3 ? *consts.i : (w * Rational(2) + Rational(1)) / s;
      if (!(i * s == w * Rational(2) + Rational(1)))
        throw Error(ErrorKind::VerificationFailed, "named constants violate i sqrt3 = 2 omega + 1");
      const AlgElem rho = s + Rational(1), rho_bar = Rational(1) - s;
      const AlgElem C = s * Rational(-720) - Rational(1248);
      const AlgElem Cbar = s * Rational(720) - Rational(1248);
      const AlgElem R = s * Rational(209) + Rational(362);
      const AlgElem iR = i * R;
      const P fr = f_t(rho), frb = f_t(rho_bar);
      const bool first = kind == PairCase::OmegaRho || kind == PairCase::OmegaRhoBar;
      // z -> iR(z - Cbar) carries C_{f_rhobar} onto C_{f_rho} - C, so the
      // second member is iR(+-(f_rhobar - Cbar)) + C.
      const P g = first ? post_compose(iR, C - iR * Cbar, frb) : post_compose(-iR, C + iR * Cbar, frb);
      if (kind == PairCase::OmegaRho || kind == PairCase::Omega2Rho) return fin(fr, g);
      return rev(fr, g);
    }
  }
  throw Error(ErrorKind::Precondition, "unhandled parameter case");
}

// ---- sweeps -------------------------------------------------------------------

struct SweepRow {
  ProjValue<AlgElem> t = ProjValue<AlgElem>::infinity();
  std::optional<PairCase> kind;
  ProjValue<AlgElem> j1 = ProjValue<AlgElem>::infinity();
  ProjValue<AlgElem> j2 = ProjValue<AlgElem>::infinity();
  ProjValue<AlgElem> jt = ProjValue<AlgElem>::infinity();
  std::optional<EquicriticalPair> pair;
  bool identities_hold = false;
  bool has_pole = false;  // some map has a pole at t
  std::string note;
};

inline SweepRow sweep_row(const ProjValue<AlgElem>& t, const FieldSpec& field) {
  SweepRow r;
  r.t = t;
  r.j1 = maps::j1()(t);
  r.j2 = maps::j2()(t);
  r.jt = maps::jt()(t);
  const auto x1 = maps::x1()(t), x2 = maps::x2()(t);
  r.has_pole = r.j1.is_infinity() || r.j2.is_infinity() || r.jt.is_infinity() || x1.is_infinity() ||
               x2.is_infinity() || t.is_infinity();
  r.identities_hold = maps::pi3()(x1) == r.jt && maps::pi3()(x2) == r.jt && maps::beta4()(r.j1) == r.jt &&
                      maps::beta4()(r.j2) == r.jt && x2 == maps::x1()(maps::gamma()(t));
  try {
    r.kind = case_of(t);
    r.pair = pair(t, field);
  } catch (const Error& e) {
    r.note = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

inline std::vector<SweepRow> sweep(const std::vector<ProjValue<AlgElem>>& ts, const FieldSpec& field) {
  std::vector<SweepRow> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(sweep_row(t, field));
  return out;
}

}  // namespace eqcrit
