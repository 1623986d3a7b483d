#pragma once

// Quadratic Weyl sums W_f(a, p^2) for integral quartics, the stationary-phase
// reduction to critical points in F_p, and the pair check for the scaled
// equicritical family.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "eqcrit/family.hpp"
#include "eqcrit/rational.hpp"

namespace eqcrit {

using i64 = std::int64_t;

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 mod(i64 x, i64 m) {
  x %= m;
  return x < 0 ? x + m : x;
}

/// Integer polynomial reduced mod p or p^2.
struct FpPoly {
  i64 p = 0;
  i64 modulus = 0;            // p or p^2
  std::vector<i64> coeffs;    // in [0, modulus), index = degree, trimmed

  /// Reduces an integral polynomial; denominators must be units mod p.
  static FpPoly reduce(const Poly<Rational>& f, i64 p, unsigned power) {
    if (power != 1 && power != 2) throw Error(ErrorKind::Precondition, "only p and p^2 are supported");
    FpPoly out;
    out.p = p;
    out.modulus = power == 1 ? p : p * p;
    const Integer m(static_cast<long>(out.modulus));
    for (const auto& c : f.coeffs()) {
      Integer den_inv;
      Integer den = c.den();
      if (!mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
        throw Error(ErrorKind::Precondition, "coefficient " + c.str() + " is not p-integral");
      Integer r = c.num() * den_inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      out.coeffs.push_back(r.get_si());
    }
    out.trim();
    return out;
  }

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const { return coeffs.empty(); }
  i64 lc() const { return coeffs.empty() ? 0 : coeffs.back(); }

  i64 operator()(i64 x) const {
    x = mod(x, modulus);
    i64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % modulus;
    return acc;
  }

  FpPoly derivative() const {
    FpPoly d{p, modulus, {}};
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(mod(coeffs[k] * static_cast<i64>(k), modulus));
    d.trim();
    return d;
  }

  /// The same polynomial reduced to the coarser modulus p.
  FpPoly mod_p() const {
    FpPoly r{p, p, {}};
    for (i64 c : coeffs) r.coeffs.push_back(c % p);
    r.trim();
    return r;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
};

namespace detail {

inline std::complex<double> e_frac(i64 num, i64 den) {
  const double th = 2.0 * std::numbers::pi * static_cast<double>(mod(num, den)) / static_cast<double>(den);
  return {std::cos(th), std::sin(th)};
}

inline void require_coprime(i64 a, i64 p) {
  if (mod(a, p) == 0) throw Error(ErrorKind::NotCoprime, "a must be coprime to p");
}

inline void require_unit_lc(const FpPoly& f) {
  if (f.is_zero() || f.lc() % f.p == 0)
    throw Error(ErrorKind::DegenerateLeadingCoefficient, "leading coefficient is divisible by p");
}

}  // namespace detail

/// (1/p) sum_{x mod p^2} e(a f(x) / p^2).
inline std::complex<double> weyl_direct(const FpPoly& f, i64 a) {
  if (f.modulus != f.p * f.p) throw Error(ErrorKind::Precondition, "direct sum needs the reduction mod p^2");
  detail::require_coprime(a, f.p);
  const i64 q = f.modulus;
  const i64 am = mod(a, q);
  std::complex<double> acc(0.0, 0.0);
  for (i64 x = 0; x < q; ++x) acc += detail::e_frac(am * f(x) % q, q);
  return acc / static_cast<double>(f.p);
}

/// Sum over the distinct v in F_p with f'(v) = 0 of e(a f(v) / p^2), f(v)
/// taken mod p^2 at the representative v in [0, p). Equal to weyl_direct
/// because f(v + p w) = f(v) + p w f'(v) mod p^2.
inline std::complex<double> weyl_reduced(const FpPoly& f, i64 a) {
  if (f.modulus != f.p * f.p) throw Error(ErrorKind::Precondition, "reduced sum needs the reduction mod p^2");
  detail::require_coprime(a, f.p);
  detail::require_unit_lc(f);
  const FpPoly d = f.derivative().mod_p();
  const i64 q = f.modulus;
  std::complex<double> acc(0.0, 0.0);
  for (i64 v = 0; v < f.p; ++v)
    if (d(v) == 0) acc += detail::e_frac(mod(a, q) * f(v) % q, q);
  return acc;
}

struct CritValuesModP {
  std::vector<i64> values;  // f(v) mod p, one entry per root of f' counted with multiplicity, sorted
  std::size_t found = 0;    // number of roots of f' in F_p with multiplicity
  std::size_t expected = 0; // deg f'
};

inline CritValuesModP crit_values_mod_p(const FpPoly& f) {
  const FpPoly fp = f.mod_p();
  detail::require_unit_lc(fp);
  FpPoly d = fp.derivative();
  CritValuesModP out;
  out.expected = d.degree();
  const i64 p = f.p;
  for (i64 v = 0; v < p && !d.is_zero() && d.degree() > 0; ++v) {
    // Deflate (x - v) out of d as often as it divides.
    for (;;) {
      if (d.degree() == 0 || d(v) != 0) break;
      std::vector<i64> q(d.coeffs.size() - 1);
      i64 carry = 0;
      for (std::size_t k = d.coeffs.size(); k-- > 1;) {
        carry = mod(d.coeffs[k] + carry * v, p);
        q[k - 1] = carry;
      }
      d.coeffs = std::move(q);
      d.trim();
      out.values.push_back(fp(v));
      ++out.found;
    }
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

struct WeylGuards {
  bool t_regular = true;      // t not in {1, -2}
  bool p_prime = true;
  bool p_gt_3 = true;
  bool p_in_range = true;     // p <= 10^4, exhaustive scans
  bool a_coprime = true;
  bool p_nmid_t_tm1 = true;   // the stated hypothesis p does not divide t(t-1)
  bool p_nmid_3_tp2 = true;   // added: leading coefficient 3(t+2)^4 is a unit
  std::string binding;        // first failing guard, empty when all hold

  bool ok() const { return binding.empty(); }
};

inline WeylGuards weyl_guards(i64 t, i64 p, i64 a) {
  WeylGuards g;
  g.t_regular = t != 1 && t != -2;
  g.p_prime = is_prime(p);
  g.p_gt_3 = p > 3;
  g.p_in_range = p <= 10000;
  g.a_coprime = p > 0 && mod(a, p) != 0;
  g.p_nmid_t_tm1 = p > 0 && mod(t, p) != 0 && mod(t - 1, p) != 0;
  g.p_nmid_3_tp2 = p > 0 && mod(3 * (t + 2), p) != 0;
  if (!g.t_regular) g.binding = "t_regular";
  else if (!g.p_prime) g.binding = "p_prime";
  else if (!g.p_gt_3) g.binding = "p_gt_3";
  else if (!g.p_in_range) g.binding = "p_in_range";
  else if (!g.a_coprime) g.binding = "a_coprime";
  else if (!g.p_nmid_t_tm1) g.binding = "p_nmid_t_tm1";
  else if (!g.p_nmid_3_tp2) g.binding = "p_nmid_3_tp2";
  return g;
}

inline double weyl_tolerance(i64 p) { return p <= 500 ? 1e-9 : 1e-7; }

struct WeylOptions {
  bool direct = true;
  bool reduced = true;
};

struct WeylReport {
  i64 p = 0, a = 0, t = 0;
  std::optional<std::complex<double>> direct_f, direct_g, reduced_f, reduced_g;
  std::size_t crit_points_f = 0, crit_points_g = 0, crit_expected = 3;
  bool exact_multiset_equal = false;
  double tolerance = 0;
  WeylGuards guards;

  /// |W_F - W_G| from whichever sums were computed.
  double pair_gap() const {
    if (direct_f && direct_g) return std::abs(*direct_f - *direct_g);
    if (reduced_f && reduced_g) return std::abs(*reduced_f - *reduced_g);
    return 0.0;
  }
  /// max |direct - reduced| over both members (0 unless both were computed).
  double reduction_gap() const {
    double g = 0.0;
    if (direct_f && reduced_f) g = std::max(g, std::abs(*direct_f - *reduced_f));
    if (direct_g && reduced_g) g = std::max(g, std::abs(*direct_g - *reduced_g));
    return g;
  }
};

/// F = 3(t+2)^4 f_t and G = 3(t+2)^4 g_t, both integral.
inline std::pair<Poly<Rational>, Poly<Rational>> scaled_integral_pair(i64 t) {
  const Rational tr(t);
  const Rational s = Rational(3) * pow(tr + Rational(2), 4);
  Poly<Rational> F = f_t(tr) * s, G = g_t(tr) * s;
  for (const auto* P : {&F, &G})
    for (const auto& c : P->coeffs())
      if (!c.is_integer()) throw Error(ErrorKind::VerificationFailed, "scaled pair is not integral");
  return {F, G};
}

inline WeylReport fd_pair_check(i64 t, i64 p, i64 a, WeylOptions opt = {}) {
  WeylReport r;
  r.p = p;
  r.a = a;
  r.t = t;
  r.guards = weyl_guards(t, p, a);
  const std::string& b = r.guards.binding;
  if (b == "t_regular") throw Error(ErrorKind::PoleAtT, "g_t has a pole at t = " + std::to_string(t));
  if (b == "p_prime") throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (b == "p_gt_3") throw Error(ErrorKind::Precondition, "p must exceed 3");
  if (b == "p_in_range") throw Error(ErrorKind::Precondition, "p must be at most 10^4");
  if (b == "a_coprime") throw Error(ErrorKind::NotCoprime, "a must be coprime to p");
  if (b == "p_nmid_t_tm1") throw Error(ErrorKind::Precondition, "p divides t(t-1)");
  if (b == "p_nmid_3_tp2")
    throw Error(ErrorKind::DegenerateLeadingCoefficient, "p divides 3(t+2), the leading coefficient degenerates");

  const auto [F, G] = scaled_integral_pair(t);
  const FpPoly F2 = FpPoly::reduce(F, p, 2), G2 = FpPoly::reduce(G, p, 2);
  r.tolerance = weyl_tolerance(p);
  if (opt.direct) {
    r.direct_f = weyl_direct(F2, a);
    r.direct_g = weyl_direct(G2, a);
  }
  if (opt.reduced) {
    r.reduced_f = weyl_reduced(F2, a);
    r.reduced_g = weyl_reduced(G2, a);
  }
  auto cf = crit_values_mod_p(F2), cg = crit_values_mod_p(G2);
  r.crit_points_f = cf.found;
  r.crit_points_g = cg.found;
  r.crit_expected = cf.expected;
  auto scaled = [&](std::vector<i64> v) {
    for (auto& x : v) x = mod(mod(a, p) * x, p);
    std::sort(v.begin(), v.end());
    return v;
  };
  r.exact_multiset_equal = scaled(cf.values) == scaled(cg.values);
  return r;
}

}  // namespace eqcrit
