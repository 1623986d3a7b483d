#pragma once

#include <random>
#include <vector>

#include "eqcrit/field.hpp"
#include "eqcrit/poly.hpp"

namespace eqcrit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240607);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long bound = 50) {
  return Rational(rand_int(-bound, bound), rand_int(1, bound));
}

inline Rational rand_nonzero(long bound = 50) {
  for (;;) {
    Rational r = rand_rational(bound);
    if (!r.is_zero()) return r;
  }
}

inline Poly<Rational> rand_poly(std::size_t deg, long bound = 20) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < deg; ++k) c.push_back(rand_rational(bound));
  c.push_back(rand_nonzero(bound));
  return Poly<Rational>({}, std::move(c));
}

inline AlgElem rand_elem(const FieldSpec& f, long bound = 20) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < f.degree(); ++k) c.push_back(rand_rational(bound));
  return AlgElem(f, std::move(c));
}

inline Poly<AlgElem> rand_poly(const FieldSpec& f, std::size_t deg, long bound = 10) {
  std::vector<AlgElem> c;
  for (std::size_t k = 0; k <= deg; ++k) c.push_back(rand_elem(f, bound));
  while (c.back().is_zero()) c.back() = rand_elem(f, bound);
  return Poly<AlgElem>(f, std::move(c));
}

/// lc * prod (x - r).
inline Poly<Rational> from_roots(const std::vector<Rational>& roots, const Rational& lc = Rational(1)) {
  Poly<Rational> p({}, {lc});
  for (const auto& r : roots) p = p * Poly<Rational>({}, {-r, Rational(1)});
  return p;
}

}  // namespace eqcrit::testing
