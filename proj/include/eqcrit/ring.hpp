#pragma once

#include <string>

#include "eqcrit/rational.hpp"

namespace eqcrit {

/// Customization point describing a coefficient domain. Specializations provide
///   context           - whatever is needed to build constants (empty for Q)
///   context_of(x)     - the context an element lives in
///   zero/one/from_rational(ctx, ...)
///   is_zero(x), inverse(x), str(x)
///   is_rational(ctx)  - the domain is Q itself
///   to_rational(x)    - only valid when is_rational(context_of(x))
template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  struct context {
    friend bool operator==(const context&, const context&) = default;
  };

  static context context_of(const Rational&) { return {}; }
  static Rational zero(const context&) { return Rational(0); }
  static Rational one(const context&) { return Rational(1); }
  static Rational from_rational(const context&, const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational inverse(const Rational& x) { return x.inverse(); }
  static std::string str(const Rational& x) { return x.str(); }
  static bool is_rational(const context&) { return true; }
  static Rational to_rational(const Rational& x) { return x; }
};

template <class T>
using context_t = typename ring_traits<T>::context;

/// `r` embedded in the domain of `like`.
template <class T>
T lift_like(const T& like, const Rational& r) {
  return ring_traits<T>::from_rational(ring_traits<T>::context_of(like), r);
}

template <class T>
bool is_zero(const T& x) {
  return ring_traits<T>::is_zero(x);
}

template <class T>
T inverse(const T& x) {
  return ring_traits<T>::inverse(x);
}

template <class T>
T power(T base, unsigned e) {
  T out = ring_traits<T>::one(ring_traits<T>::context_of(base));
  while (e) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

}  // namespace eqcrit
