#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <utility>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "eqcrit/error.hpp"

namespace eqcrit {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>)
      v_ = static_cast<long>(n);
    else
      v_ = static_cast<unsigned long>(n);
  }
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::Zero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (whitespace not allowed). Result is canonicalized.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
    auto valid_int = [](std::string_view d) {
      std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
      if (i >= d.size()) return false;
      for (; i < d.size(); ++i)
        if (d[i] < '0' || d[i] > '9') return false;
      return true;
    };
    auto strip_plus = [](std::string_view d) { return (!d.empty() && d[0] == '+') ? d.substr(1) : d; };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_int(num)) throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(s) + "'");
    Integer n(std::string(strip_plus(num)), 10);
    Integer d(1);
    if (slash != std::string_view::npos) {
      std::string_view den = s.substr(slash + 1);
      if (!valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(s) + "'");
      d = Integer(std::string(den), 10);
    }
    return Rational(n, d);
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Canonical "p/q" form; the denominator is omitted when it is 1.
  std::string str() const { return v_.get_str(10); }
  double to_double() const { return v_.get_d(); }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorKind::Zero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::Zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned e) {
  Rational out(1);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

/// The rational of least denominator in the closed interval [lo, hi].
inline Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  Integer fl = lo.floor();
  Rational flr(fl);
  if (flr == lo) return lo;
  if (flr + 1 <= hi) return flr + 1;
  return flr + simplest_between((hi - flr).inverse(), (lo - flr).inverse()).inverse();
}

}  // namespace eqcrit
