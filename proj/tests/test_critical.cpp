#include <gtest/gtest.h>

#include "eqcrit/critical.hpp"
#include "eqcrit/numeric.hpp"
#include "support.hpp"

using namespace eqcrit;
using namespace eqcrit::testing;

using PQ = Poly<Rational>;

TEST(Cvpoly, SmallExamples) {
  // x^4 - 2x: every critical value y has y^3 = -27/16.
  EXPECT_EQ(cvpoly(PQ({}, {Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)})).poly,
            PQ({}, {Rational(27, 16), Rational(0), Rational(0), Rational(1)}));
  // x^2 has the single critical value 0.
  EXPECT_EQ(cvpoly(PQ({}, {Rational(0), Rational(0), Rational(1)})).poly, PQ({}, {Rational(0), Rational(1)}));
  // x^4 - x^2: critical points 0, +-1/sqrt2, values 0, -1/4, -1/4.
  EXPECT_EQ(cvpoly(PQ({}, {Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)})).poly,
            from_roots({Rational(0), Rational(-1, 4), Rational(-1, 4)}));
}

TEST(Cvpoly, DegreeMismatch) {
  try {
    cvpoly(rand_poly(3), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
}

// Numeric oracle: roots of f', pushed through f, against the roots of cvpoly.
TEST(Cvpoly, NumericOracle) {
  for (int n = 0; n < 100; ++n) {
    const PQ f = rand_poly(static_cast<std::size_t>(rand_int(2, 5)), 6);
    const PQ cv = cvpoly(f).poly;
    ASSERT_EQ(cv.degree(), f.degree() - 1);
    std::vector<numeric::cld> dc;
    const PQ df = derivative(f);
    for (const auto& c : df.coeffs()) dc.emplace_back(static_cast<long double>(c.to_double()), 0.0L);
    for (auto x : numeric::durand_kerner(dc)) {
      std::complex<double> y(0), v(0), scale(0);
      for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) y = y * x + it->to_double();
      for (auto it = cv.coeffs().rbegin(); it != cv.coeffs().rend(); ++it) {
        v = v * y + it->to_double();
        scale = scale * std::abs(y) + std::abs(it->to_double());
      }
      EXPECT_LT(std::abs(v), 1e-5 * std::abs(scale) + 1e-9) << f;
    }
  }
}

// cvpoly(c f(ax+b) + e)(y) = monic of cvpoly(f)((y - e)/c).
TEST(Cvpoly, AffineCovariance) {
  for (int n = 0; n < 100; ++n) {
    const PQ f = rand_poly(4, 9);
    const Rational a = rand_nonzero(7), b = rand_rational(7), c = rand_nonzero(7), e = rand_rational(7);
    const PQ g = post_compose(c, e, apply_affine(f, a, b));
    const PQ shifted = compose(cvpoly(f).poly, PQ({}, {-e / c, c.inverse()}));
    EXPECT_EQ(cvpoly(g).poly, monic(shifted));
  }
}

TEST(Cvpoly, CovarianceOverZeta12) {
  const auto z = FieldSpec::q_zeta12();
  using P = Poly<AlgElem>;
  for (int n = 0; n < 100; ++n) {
    const P f = rand_poly(z, 4, 3);
    AlgElem a = rand_elem(z, 3), c = rand_elem(z, 3);
    if (a.is_zero() || c.is_zero()) continue;
    const AlgElem b = rand_elem(z, 3), e = rand_elem(z, 3);
    const P g = post_compose(c, e, apply_affine(f, a, b));
    EXPECT_EQ(cvpoly(g).poly, monic(compose(cvpoly(f).poly, P(z, {-e / c, c.inverse()}))));
  }
}

// The normalized integral of d * prod (x - x_i) has critical values theta(x).
TEST(Theta, IntegralConsistency) {
  for (int n = 0; n < 100; ++n) {
    std::vector<Rational> pts;
    const auto k = static_cast<std::size_t>(rand_int(1, 4));
    for (std::size_t i = 0; i < k; ++i) pts.push_back(rand_rational(9));
    const PQ f = poly_from_critical_points(std::span<const Rational>(pts));
    EXPECT_EQ(f.lc(), Rational(1));
    EXPECT_TRUE(f(Rational(0)).is_zero());
    const auto ys = theta(std::span<const Rational>(pts));
    for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(ys[i], f(pts[i]));
    EXPECT_EQ(cvpoly(f).poly, from_roots(ys));
  }
}

TEST(Morse, Examples) {
  EXPECT_TRUE(is_morse(PQ({}, {Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)})));
  EXPECT_FALSE(is_morse(PQ({}, {Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)})));
}

TEST(AffineEquivalence, RecoversWitness) {
  for (int n = 0; n < 100; ++n) {
    const PQ g = rand_poly(4, 9);
    const Rational a = rand_nonzero(7), b = rand_rational(7);
    const PQ f = apply_affine(g, a, b);
    const auto v = affine_equivalent(f, g);
    ASSERT_EQ(v.status, Equivalence::Equivalent);
    EXPECT_EQ(apply_affine(g, v.witness->first, v.witness->second), f);
  }
}

TEST(AffineEquivalence, SimpleVerdicts) {
  // x^4 - x and its reflection are equivalent; x^4 - x against x^4 + x^2/2 is not.
  const PQ f({}, {Rational(0), Rational(-1), Rational(0), Rational(0), Rational(1)});
  EXPECT_EQ(affine_equivalent(f, apply_affine(f, Rational(-1), Rational(0))).status, Equivalence::Equivalent);
  const PQ h({}, {Rational(0), Rational(0), Rational(1, 2), Rational(0), Rational(1)});
  EXPECT_EQ(affine_equivalent(f, h).status, Equivalence::Inequivalent);
}

TEST(AffineEquivalence, OverZeta12) {
  const auto z = FieldSpec::q_zeta12();
  for (int n = 0; n < 20; ++n) {
    const auto g = rand_poly(z, 4, 3);
    AlgElem a = rand_elem(z, 3);
    if (a.is_zero()) continue;
    const auto f = apply_affine(g, a, rand_elem(z, 3));
    const auto v = affine_equivalent(f, g);
    ASSERT_NE(v.status, Equivalence::Inequivalent);
    if (v.status == Equivalence::Equivalent) {
      EXPECT_EQ(apply_affine(g, v.witness->first, v.witness->second), f);
    }
  }
}
