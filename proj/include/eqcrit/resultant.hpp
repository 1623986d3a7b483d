#pragma once

#include <cstddef>
#include <vector>

#include "eqcrit/poly.hpp"

namespace eqcrit {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n).
template <class T>
Matrix<T> sylvester_matrix(const Poly<T>& p, const Poly<T>& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sylvester matrix of zero polynomial");
  const std::size_t m = p.degree(), n = q.degree(), s = m + n;
  Matrix<T> M(s, std::vector<T>(s, p.zero_elem()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + k] = p.coeffs()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + k] = q.coeffs()[n - k];
  return M;
}

/// Determinant by Bareiss fraction-free elimination (the intermediate
/// divisions are exact). `one` supplies the unit of the domain for the
/// empty matrix.
template <class T>
T determinant(Matrix<T> M, const T& one) {
  const std::size_t n = M.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(M[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(M[r][k])) ++r;
      if (r == n) return one - one;
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    const T prev_inv = inverse(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) * prev_inv;
      M[i][k] = one - one;
    }
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

/// Res_x(p, q) over a field, as the Sylvester determinant.
template <class T>
T resultant(const Poly<T>& p, const Poly<T>& q) {
  return determinant(sylvester_matrix(p, q), p.one_elem());
}

namespace detail {

template <class T>
Poly<T> eval_inner(const Poly<Poly<T>>& p, const T& y) {
  std::vector<T> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c(y));
  return Poly<T>(p.context(), std::move(out));
}

template <class T>
std::size_t max_inner_degree(const Poly<Poly<T>>& p) {
  std::size_t d = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) d = std::max(d, c.degree());
  return d;
}

/// Newton interpolation through (xs[i], ys[i]); returns monomial coefficients.
template <class T>
Poly<T> interpolate(const std::vector<T>& xs, std::vector<T> ys, const context_t<T>& ctx) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) * inverse(xs[i] - xs[i - level]);
  Poly<T> acc(ctx);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * Poly<T>(ctx, {-xs[i], ring_traits<T>::one(ctx)});
    acc += Poly<T>(ctx, {ys[i]});
  }
  return acc;
}

}  // namespace detail

/// Res_x(p, q) for p, q in K[y][x], computed by evaluating y at rational points
/// where neither leading coefficient in x vanishes, taking scalar Sylvester
/// determinants and interpolating.
template <class T>
Poly<T> resultant(const Poly<Poly<T>>& p, const Poly<Poly<T>>& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  const auto& ctx = p.context();
  using tr = ring_traits<T>;
  const std::size_t bound = p.degree() * detail::max_inner_degree(q) + q.degree() * detail::max_inner_degree(p);
  std::vector<T> xs, ys;
  long next = 0;
  while (xs.size() < bound + 1) {
    T y = tr::from_rational(ctx, Rational(next++));
    if (is_zero(p.lc()(y)) || is_zero(q.lc()(y))) continue;
    ys.push_back(resultant(detail::eval_inner(p, y), detail::eval_inner(q, y)));
    xs.push_back(std::move(y));
  }
  return detail::interpolate(xs, std::move(ys), ctx);
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
template <class T>
T discriminant(const Poly<T>& p) {
  if (p.is_zero() || p.degree() < 1) throw Error(ErrorKind::Precondition, "discriminant needs degree >= 1");
  const std::size_t n = p.degree();
  T r = resultant(p, derivative(p)) * inverse(p.lc());
  return ((n * (n - 1) / 2) % 2) ? -r : r;
}

/// Discriminant in x of p in K[y][x], as a polynomial in y.
template <class T>
Poly<T> discriminant(const Poly<Poly<T>>& p) {
  if (p.is_zero() || p.degree() < 1) throw Error(ErrorKind::Precondition, "discriminant needs degree >= 1");
  const std::size_t n = p.degree();
  Poly<T> r = exact_div(resultant(p, derivative(p)), p.lc());
  return ((n * (n - 1) / 2) % 2) ? -r : r;
}

}  // namespace eqcrit
