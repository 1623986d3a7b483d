#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "eqcrit/field.hpp"
#include "eqcrit/numeric.hpp"
#include "eqcrit/poly.hpp"

namespace eqcrit {

struct RationalRoot {
  Rational value;
  unsigned multiplicity = 1;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

namespace detail {

/// Sturm chain s0 = p, s1 = p', s_{k+1} = -rem(s_{k-1}, s_k).
inline std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& p) {
  std::vector<Poly<Rational>> chain{p, derivative(p)};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly<Rational> r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<Poly<Rational>>& chain, const Rational& x) {
  int prev = 0, count = 0;
  for (const auto& s : chain) {
    int sg = s(x).sign();
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

/// Cauchy bound: every root satisfies |r| < bound.
inline Rational root_bound(const Poly<Rational>& p) {
  Rational m(0);
  for (std::size_t k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeffs()[k] / p.lc()));
  return m + 1;
}

/// Disjoint open intervals (lo, hi), each containing exactly one real root of
/// the squarefree polynomial `s`; roots that happen to land on a split point
/// are reported exactly in `exact`.
inline void isolate_real_roots(const Poly<Rational>& s, std::vector<std::pair<Rational, Rational>>& intervals,
                               std::vector<Rational>& exact) {
  const auto chain = sturm_chain(s);
  const Rational b = root_bound(s);
  struct Item {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Item> stack{{-b, b, sign_variations(chain, -b), sign_variations(chain, b)}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const int count = it.vlo - it.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      intervals.emplace_back(it.lo, it.hi);
      continue;
    }
    Rational mid = (it.lo + it.hi) / 2;
    if (s(mid).is_zero()) {
      exact.push_back(mid);
      // Move the split off the root; it will be rediscovered inside (lo, mid').
      Rational step = (it.hi - it.lo) / 4;
      do {
        step /= 2;
      } while (s(mid + step).is_zero());
      mid += step;
    }
    const int vm = sign_variations(chain, mid);
    stack.push_back({it.lo, mid, it.vlo, vm});
    stack.push_back({mid, it.hi, vm, it.vhi});
  }
}

/// Primitive integer multiple of p with positive leading coefficient.
inline Poly<Rational> primitive_integer(const Poly<Rational>& p) {
  if (p.is_zero()) return p;
  Integer l(1), g(0);
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.num() * (l / c.den());
    g = gcd(g, v);
    out.emplace_back(v);
  }
  if (p.lc().sign() < 0) g = -g;
  for (auto& c : out) c /= Rational(g);
  return Poly<Rational>({}, std::move(out));
}

}  // namespace detail

/// Distinct rational roots with multiplicity, ascending.
///
/// Rational roots of a primitive integer polynomial have denominators dividing
/// the leading coefficient a_n, so two candidates differ by at least 1/a_n^2.
/// Each real root is isolated by a Sturm chain, its interval is bisected below
/// that spacing, and the simplest rational inside is tested exactly. No
/// integer factoring is needed, which keeps this usable on large coefficients.
inline std::vector<RationalRoot> rational_roots_with_multiplicity(const Poly<Rational>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational roots of the zero polynomial");
  std::vector<RationalRoot> out;
  if (p.degree() == 0) return out;
  const Poly<Rational> s = detail::primitive_integer(squarefree_part(p));
  const Rational an = s.lc();
  const Rational spacing = Rational(1) / (an * an);

  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> found;
  detail::isolate_real_roots(s, intervals, found);
  for (auto [lo, hi] : intervals) {
    int slo = s(lo).sign();
    for (;;) {
      Rational cand = simplest_between(lo, hi);
      if (s(cand).is_zero()) {
        found.push_back(cand);
        break;
      }
      if (hi - lo < spacing) break;
      Rational mid = (lo + hi) / 2;
      int sm = s(mid).sign();
      if (sm == 0) {
        found.push_back(mid);
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& r : found) out.push_back({r, root_multiplicity(p, r)});
  return out;
}

/// Rational roots as a multiset (each repeated per multiplicity), ascending.
inline std::vector<Rational> rational_roots(const Poly<Rational>& p) {
  std::vector<Rational> out;
  for (const auto& r : rational_roots_with_multiplicity(p))
    for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

/// Real roots of p (distinct, ascending), refined exactly to relative width
/// ~1e-17 and rounded to double.
inline std::vector<double> real_roots_approx(const Poly<Rational>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real roots of the zero polynomial");
  std::vector<double> out;
  if (p.degree() == 0) return out;
  const Poly<Rational> s = detail::primitive_integer(squarefree_part(p));
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> exact;
  detail::isolate_real_roots(s, intervals, exact);
  std::vector<Rational> roots = exact;
  const Rational rel = Rational(Integer(1), Integer("100000000000000000", 10));
  for (auto [lo, hi] : intervals) {
    if (std::any_of(exact.begin(), exact.end(), [&](const Rational& e) { return lo < e && e < hi; })) continue;
    int slo = s(lo).sign();
    for (;;) {
      Rational mid = (lo + hi) / 2;
      Rational scale = std::max(abs(mid), Rational(1));
      if (hi - lo < rel * scale) {
        roots.push_back(mid);
        break;
      }
      int sm = s(mid).sign();
      if (sm == 0) {
        roots.push_back(mid);
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots) out.push_back(r.to_double());
  return out;
}

/// Complex roots with multiplicity for display: exact-refined real roots plus
/// Durand-Kerner for the nonreal ones. Sorted by (real, imag).
inline std::vector<std::complex<double>> complex_roots_display(const Poly<Rational>& p) {
  std::vector<std::complex<double>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    auto reals = real_roots_approx(factor);
    std::vector<std::complex<double>> roots;
    for (double r : reals) roots.emplace_back(r, 0.0);
    if (reals.size() < factor.degree()) {
      std::vector<numeric::cld> c;
      for (const auto& q : factor.coeffs()) c.emplace_back(static_cast<long double>(q.to_double()), 0.0L);
      auto all = numeric::durand_kerner(std::move(c));
      std::sort(all.begin(), all.end(),
                [](const auto& a, const auto& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
      for (std::size_t k = reals.size(); k < all.size(); ++k) roots.push_back(all[k]);
    }
    for (unsigned m = 0; m < mult; ++m) out.insert(out.end(), roots.begin(), roots.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

/// Display roots of a polynomial over a number field, through the generator's
/// complex embedding.
inline std::vector<std::complex<double>> complex_roots_display(const Poly<AlgElem>& p) {
  if (p.context().is_rational()) {
    std::vector<Rational> c;
    for (const auto& a : p.coeffs()) c.push_back(a.to_rational());
    return complex_roots_display(Poly<Rational>({}, std::move(c)));
  }
  std::vector<numeric::cld> c;
  for (const auto& a : p.coeffs()) {
    auto z = a.to_complex();
    c.emplace_back(z.real(), z.imag());
  }
  auto out = numeric::durand_kerner(std::move(c));
  // Embedded coefficients carry rounding noise; snap it off the real axis.
  for (auto& z : out)
    if (std::abs(z.imag()) < 1e-12 * std::max(1.0, std::abs(z))) z = {z.real(), 0.0};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace eqcrit
