#include <gtest/gtest.h>

#include <numbers>

#include "eqcrit/weyl.hpp"
#include "support.hpp"

using namespace eqcrit;
using namespace eqcrit::testing;

namespace {

// (1/p) sum_{x mod p^2} e(a F(x) / p^2), evaluating F exactly with GMP.
std::complex<double> brute_weyl(const Poly<Rational>& F, long p, long a) {
  const long m = p * p;
  std::complex<double> s(0);
  for (long x = 0; x < m; ++x) {
    const Rational v = F(Rational(x)) * Rational(a);
    Integer n = v.num(), d = v.den(), inv, r;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), Integer(m).get_mpz_t());
    r = n * inv;
    mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(m));
    const double th = 2 * std::numbers::pi * static_cast<double>(r.get_si()) / static_cast<double>(m);
    s += std::complex<double>(std::cos(th), std::sin(th));
  }
  return s / static_cast<double>(p);
}

}  // namespace

TEST(Weyl, PrimalityAgainstSieve) {
  std::vector<bool> composite(2001, false);
  for (long i = 2; i * i <= 2000; ++i)
    if (!composite[i])
      for (long j = i * i; j <= 2000; j += i) composite[j] = true;
  for (long n = 0; n <= 2000; ++n) EXPECT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
}

TEST(Weyl, ReductionHandlesDenominators) {
  const Poly<Rational> f({}, {Rational(1, 2), Rational(-3), Rational(2, 3)});
  const auto r = FpPoly::reduce(f, 7, 2);
  EXPECT_EQ(r.modulus, 49);
  EXPECT_EQ(r.coeffs[0] * 2 % 49, 1);
  EXPECT_EQ(r.coeffs[1], 46);
  EXPECT_EQ(r.coeffs[2] * 3 % 49, 2);
  try {
    FpPoly::reduce(Poly<Rational>({}, {Rational(1, 7)}), 7, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Weyl, DirectSumMatchesBruteForce) {
  for (long t : {2L, 3L, 5L, 42L}) {
    const auto [F, G] = scaled_integral_pair(t);
    for (long p : {5L, 7L, 11L, 13L}) {
      if (!weyl_guards(t, p, 1).ok()) continue;
      for (long a : {1L, 2L, p - 1}) {
        EXPECT_LT(std::abs(weyl_direct(FpPoly::reduce(F, p, 2), a) - brute_weyl(F, p, a)), 1e-9);
        EXPECT_LT(std::abs(weyl_direct(FpPoly::reduce(G, p, 2), a) - brute_weyl(G, p, a)), 1e-9);
      }
    }
  }
}

TEST(Weyl, ScaledPairIsIntegral) {
  for (long t = -30; t <= 30; ++t) {
    if (t == 0 || t == 1 || t == -2) continue;
    const auto [F, G] = scaled_integral_pair(t);
    EXPECT_EQ(F.lc(), Rational(3) * pow(Rational(t + 2), 4));
    EXPECT_TRUE(equicritical(F, G)) << t;
  }
}

TEST(Weyl, GuardOrder) {
  EXPECT_EQ(weyl_guards(1, 9, 0).binding, "t_regular");
  EXPECT_EQ(weyl_guards(5, 9, 0).binding, "p_prime");
  EXPECT_EQ(weyl_guards(5, 3, 1).binding, "p_gt_3");
  EXPECT_EQ(weyl_guards(5, 10007, 1).binding, "p_in_range");
  EXPECT_EQ(weyl_guards(5, 7, 14).binding, "a_coprime");
  EXPECT_EQ(weyl_guards(7, 7, 1).binding, "p_nmid_t_tm1");
  EXPECT_EQ(weyl_guards(8, 7, 1).binding, "p_nmid_t_tm1");
  EXPECT_EQ(weyl_guards(42, 11, 7).binding, "p_nmid_3_tp2");
  EXPECT_TRUE(weyl_guards(42, 101, 7).ok());
}

TEST(Weyl, GuardErrors) {
  const std::pair<std::array<long, 3>, ErrorKind> cases[] = {
      {{1, 7, 1}, ErrorKind::PoleAtT},   {{5, 9, 1}, ErrorKind::NotPrime},
      {{5, 7, 7}, ErrorKind::NotCoprime}, {{42, 11, 7}, ErrorKind::DegenerateLeadingCoefficient},
      {{7, 7, 1}, ErrorKind::Precondition}};
  for (const auto& [args, kind] : cases) {
    try {
      fd_pair_check(args[0], args[1], args[2]);
      FAIL() << args[0] << " " << args[1] << " " << args[2];
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind);
    }
  }
}

TEST(Weyl, PairCheckT42) {
  const auto r = fd_pair_check(42, 101, 7);
  EXPECT_LT(r.pair_gap(), r.tolerance);
  EXPECT_LT(r.reduction_gap(), r.tolerance);
  // f_42' = 4x^3 - 889056x - 592704 has a single root mod 101.
  std::size_t roots = 0;
  for (long x = 0; x < 101; ++x)
    if (((4 * x * x * x - 889056 * x - 592704) % 101 + 101) % 101 == 0) ++roots;
  EXPECT_EQ(roots, 1u);
  EXPECT_EQ(r.crit_points_f, roots);
  EXPECT_EQ(r.crit_points_g, roots);
}

TEST(Weyl, RandomSamples) {
  int checked = 0;
  for (int n = 0; n < 200 && checked < 60; ++n) {
    const long p = std::array<long, 5>{5, 7, 11, 13, 31}[static_cast<std::size_t>(rand_int(0, 4))];
    const long t = rand_int(-200, 200), a = rand_int(1, 5 * p);
    if (!weyl_guards(t, p, a).ok()) continue;
    ++checked;
    const auto r = fd_pair_check(t, p, a);
    EXPECT_LT(r.pair_gap(), r.tolerance) << t << " " << p << " " << a;
    EXPECT_LT(r.reduction_gap(), r.tolerance) << t << " " << p << " " << a;
    if (r.crit_points_f == 3 && r.crit_points_g == 3) {
      EXPECT_TRUE(r.exact_multiset_equal);
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Weyl, OptionsSkipSums) {
  const auto d = fd_pair_check(42, 101, 7, {true, false});
  EXPECT_TRUE(d.direct_f && !d.reduced_f);
  const auto r = fd_pair_check(42, 101, 7, {false, true});
  EXPECT_TRUE(!r.direct_f && r.reduced_f);
  EXPECT_EQ(weyl_tolerance(499), 1e-9);
  EXPECT_EQ(weyl_tolerance(1009), 1e-7);
}

TEST(Weyl, MonomialAndEmptyCriticalSet) {
  const Poly<Rational> x4({}, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
  const auto f = FpPoly::reduce(x4, 5, 2);
  EXPECT_LT(std::abs(weyl_direct(f, 1) - std::complex<double>(1, 0)), 1e-9);
  EXPECT_LT(std::abs(weyl_reduced(f, 1) - std::complex<double>(1, 0)), 1e-9);
  // f' = 3x^2 + 3 has no root mod 7 (-1 is not a square), so both sums vanish.
  const Poly<Rational> g({}, {Rational(0), Rational(3), Rational(0), Rational(1)});
  const auto g7 = FpPoly::reduce(g, 7, 2);
  EXPECT_LT(std::abs(weyl_direct(g7, 3)), 1e-9);
  EXPECT_LT(std::abs(weyl_reduced(g7, 3)), 1e-9);
}
