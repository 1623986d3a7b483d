#pragma once

// Floating-point helpers. Used only to render algebraic quantities for human
// inspection; no exact computation depends on anything here.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace eqcrit::numeric {

using cld = std::complex<long double>;

/// All complex roots (with multiplicity) of sum coeffs[k] x^k by Durand-Kerner.
inline std::vector<std::complex<double>> durand_kerner(std::vector<cld> coeffs, int max_iter = 2000) {
  while (!coeffs.empty() && coeffs.back() == cld(0)) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  const std::size_t n = coeffs.size() - 1;
  const cld lc = coeffs.back();
  for (auto& c : coeffs) c /= lc;
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeffs[k]));
  radius = 1 + radius;
  std::vector<cld> z(n);
  const cld seed(0.4L, 0.9L);
  cld w(1);
  for (std::size_t k = 0; k < n; ++k) {
    w *= seed;
    z[k] = w * (radius / std::abs(w)) * 0.5L;
  }
  auto eval = [&](cld x) {
    cld acc(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };
  for (int it = 0; it < max_iter; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cld den(1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (den == cld(0)) den = cld(1e-30L);
      cld step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (moved < 1e-18L) break;
  }
  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

}  // namespace eqcrit::numeric
