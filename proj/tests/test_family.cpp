#include <gtest/gtest.h>

#include <set>

#include "eqcrit/family.hpp"
#include "support.hpp"

using namespace eqcrit;
using namespace eqcrit::testing;

using P = Poly<AlgElem>;
using PV = ProjValue<AlgElem>;

namespace {

const FieldSpec QQ = FieldSpec::qq();

AlgElem q(const Rational& r, const FieldSpec& f = QQ) { return AlgElem(f, r); }

std::vector<std::string> coeff_strings(const P& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_rational().str());
  return out;
}

Rational rand_generic_t() {
  for (;;) {
    const Rational t = rand_rational(1000);
    if (t != Rational(0) && t != Rational(1) && t != Rational(-2)) return t;
  }
}

}  // namespace

TEST(Family, GoldenT42) {
  const auto p = pair(q(42), QQ);
  EXPECT_EQ(p.kind, PairCase::Generic);
  EXPECT_EQ(coeff_strings(p.f), (std::vector<std::string>{"0", "-592704", "-444528", "0", "1"}));
  EXPECT_EQ(coeff_strings(p.g), (std::vector<std::string>{"-44982677376", "142974133344/11", "107230600008/11", "0",
                                                          "-307935007631307/234256"}));
  EXPECT_EQ(p.cv.coeff(2), q(98802571392));
  EXPECT_EQ(Rational(98802571392), Rational(3) * Rational(32934190464));
  EXPECT_TRUE(p.equicritical_exact);
  EXPECT_TRUE(p.inequivalent);
  bool found = false;
  for (auto z : complex_roots_display(p.cv)) found = found || std::abs(z - std::complex<double>(197568.1975316542, 0)) < 1e-6;
  EXPECT_TRUE(found);
}

TEST(Family, GenericPairsVerify) {
  for (int n = 0; n < 40; ++n) {
    const auto p = pair(q(rand_generic_t()), QQ);
    EXPECT_EQ(cvpoly(p.f).poly, cvpoly(p.g).poly);
    EXPECT_EQ(affine_equivalent(p.f, p.g).status, Equivalence::Inequivalent);
  }
}

TEST(Family, PipelineMatchesClosedForm) {
  for (int n = 0; n < 100; ++n) {
    const AlgElem t = q(rand_generic_t());
    const auto a = pipeline_pair(t);
    EXPECT_EQ(a.f, f_t(t));
    EXPECT_EQ(a.g, g_t(t));
  }
  EXPECT_EQ(pipeline_pair(q(3)).g, g_t(q(3)));
}

TEST(Family, PipelineRefusesSpecialT) {
  for (long t : {0L, 1L, -2L}) {
    try {
      pipeline_pair(q(t));
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ExcludedT || e.kind() == ErrorKind::PoleAtT) << t;
    }
  }
}

TEST(Family, GPoles) {
  for (long t : {1L, -2L}) {
    try {
      g_t(Rational(t));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleAtT);
    }
  }
}

TEST(Family, ModularIdentities) {
  for (int n = 0; n < 100; ++n) {
    const PV t = q(rand_rational(200));
    const PV jt = maps::jt()(t);
    EXPECT_EQ(maps::pi3()(maps::x1()(t)), jt);
    EXPECT_EQ(maps::pi3()(maps::x2()(t)), jt);
    EXPECT_EQ(maps::beta4()(maps::j1()(t)), jt);
    EXPECT_EQ(maps::beta4()(maps::j2()(t)), jt);
    EXPECT_EQ(maps::gamma()(maps::gamma()(t)), t);
    EXPECT_EQ(maps::x2()(t), maps::x1()(maps::gamma()(t)));
  }
}

// The j-invariants of the curves behind f_t and g_t are j1(t) and j2(t).
TEST(Family, CriticalJOfMembers) {
  for (int n = 0; n < 30; ++n) {
    const Rational t = rand_generic_t();
    const auto jt = maps::jt()(ProjValue<Rational>(t));
    EXPECT_EQ(j_of_cubic(cvpoly(f_t(t)).poly), jt);
    EXPECT_EQ(j_of_cubic(cvpoly(g_t(t)).poly), jt);
  }
}

// Twelve parameters over jt(t); over Q(omega) they give the four fiber points of beta4.
TEST(Family, QuadrupleOverOmega) {
  const auto k = FieldSpec::q_omega();
  const AlgElem w = AlgElem::named(k, "omega");
  for (int n = 0; n < 10; ++n) {
    const PV t = AlgElem(k, rand_generic_t());
    const PV jt = maps::jt()(t);
    std::vector<PV> params;
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i)
        for (int e = 0; e < 3; ++e) {
          PV s = j ? maps::gamma()(t) : t;
          s = PV(s.value() * power(w, static_cast<unsigned>(e)));
          params.push_back(i ? maps::gamma()(s) : s);
        }
    std::vector<PV> js;
    for (const auto& s : params) {
      EXPECT_EQ(maps::jt()(s), jt);
      const PV j = maps::j1()(s);
      EXPECT_EQ(maps::beta4()(j), jt);
      if (std::find(js.begin(), js.end(), j) == js.end()) js.push_back(j);
    }
    EXPECT_EQ(js.size(), 4u);
    std::size_t rational = 0;
    for (const auto& j : js) rational += j.value().is_rational();
    EXPECT_EQ(rational, 2u);
  }
}

TEST(Special, RationalCases) {
  const auto c0 = pair(q(0), QQ);
  EXPECT_EQ(c0.kind, PairCase::T0);
  EXPECT_EQ(c0.g.coeff(2), q(Rational(-1, 4)));
  const auto cm2 = pair(q(-2), QQ);
  EXPECT_EQ(cm2.f, c0.g);
  EXPECT_EQ(cm2.g, c0.f);

  const auto c1 = pair(q(1), QQ);
  EXPECT_EQ(c1.kind, PairCase::T1);
  EXPECT_EQ(c1.cv, P::from_rationals(QQ, std::vector<Rational>{Rational(0), Rational(0), Rational(-81, 16), Rational(1)}));
  const auto cinf = pair(PV::infinity(QQ), QQ);
  EXPECT_EQ(cinf.kind, PairCase::TInfinity);
  EXPECT_EQ(cinf.f, c1.g);

  for (const auto* p : {&c0, &cm2, &c1, &cinf}) {
    EXPECT_EQ(cvpoly(p->f).poly, cvpoly(p->g).poly);
    EXPECT_EQ(affine_equivalent(p->f, p->g).status, Equivalence::Inequivalent);
  }
}

TEST(Special, RhoOverSqrt3) {
  const auto k = FieldSpec::q_sqrt3();
  const AlgElem s = AlgElem::named(k, "sqrt3");
  const AlgElem C = s * Rational(-720) - Rational(1248);
  const auto cr = pair(s + Rational(1), k);
  EXPECT_EQ(cr.kind, PairCase::Rho);
  EXPECT_TRUE(cr.cv(C).is_zero());
  // cvpoly(f_rho) = (y - C) ((y - C)^2 - upsilon^2), upsilon^2 = 72^2 (362 sqrt3 + 627).
  const AlgElem ups2 = (s * Rational(362) + Rational(627)) * Rational(72 * 72);
  const P shifted = compose(cr.cv, P(k, {C, AlgElem(k, Rational(1))}));
  EXPECT_EQ(shifted, P(k, {AlgElem(k, Rational(0)), -ups2, AlgElem(k, Rational(0)), AlgElem(k, Rational(1))}));

  const auto crb = pair(Rational(1) - s, k);
  EXPECT_EQ(crb.kind, PairCase::RhoBar);
  for (const auto* p : {&cr, &crb}) {
    EXPECT_EQ(cvpoly(p->f).poly, cvpoly(p->g).poly);
    EXPECT_EQ(affine_equivalent(p->f, p->g).status, Equivalence::Inequivalent);
  }
  try {
    AlgElem::named(QQ, "sqrt3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooSmall);
  }
}

TEST(Special, MinusTwoOmega) {
  const auto k = FieldSpec::q_omega();
  const AlgElem w = AlgElem::named(k, "omega");
  const auto a = pair(w * Rational(-2), k), b = pair(w * w * Rational(-2), k);
  EXPECT_EQ(a.kind, PairCase::M2Omega);
  EXPECT_EQ(b.kind, PairCase::M2Omega2);
  EXPECT_EQ(a.f, b.g);
  EXPECT_EQ(a.g, g_zero<AlgElem>(k) * w);
  for (const auto* p : {&a, &b}) {
    EXPECT_EQ(cvpoly(p->f).poly, cvpoly(p->g).poly);
    EXPECT_EQ(affine_equivalent(p->f, p->g).status, Equivalence::Inequivalent);
  }
}

TEST(Special, CuspsHaveNoPair) {
  for (const auto& k : {FieldSpec::q_omega(), FieldSpec::q_zeta12()}) {
    const AlgElem w = AlgElem::named(k, "omega");
    for (const AlgElem& t : {w, w * w}) {
      try {
        pair(t, k);
        FAIL();
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoPair);
      }
    }
  }
}

TEST(Special, OmegaRhoFamily) {
  const auto k = FieldSpec::q_zeta12();
  const AlgElem s = AlgElem::named(k, "sqrt3"), w = AlgElem::named(k, "omega");
  const AlgElem rho = s + Rational(1), rho_bar = Rational(1) - s;
  const std::pair<AlgElem, PairCase> cases[] = {{w * rho, PairCase::OmegaRho},
                                                {w * w * rho, PairCase::Omega2Rho},
                                                {w * rho_bar, PairCase::OmegaRhoBar},
                                                {w * w * rho_bar, PairCase::Omega2RhoBar}};
  for (const auto& [t, kind] : cases) {
    const auto p = pair(t, k);
    EXPECT_EQ(p.kind, kind);
    EXPECT_EQ(cvpoly(p.f).poly, cvpoly(p.g).poly);
    EXPECT_EQ(affine_equivalent(p.f, p.g).status, Equivalence::Inequivalent);
  }
}

// z -> iR(z - Cbar) sends the critical values of f_rhobar to those of f_rho
// shifted by -C; adding C back gives an exact transport.
TEST(Special, OmegaRhoTransport) {
  const auto k = FieldSpec::q_zeta12();
  const AlgElem s = AlgElem::named(k, "sqrt3"), i = AlgElem::named(k, "i");
  const AlgElem C = s * Rational(-720) - Rational(1248), Cbar = s * Rational(720) - Rational(1248);
  const AlgElem iR = i * (s * Rational(209) + Rational(362));
  const P fr = f_t(s + Rational(1)), frb = f_t(Rational(1) - s);
  const P cv_r = cvpoly(fr).poly;
  EXPECT_EQ(cvpoly(post_compose(iR, C - iR * Cbar, frb)).poly, cv_r);
  const P shifted = compose(cv_r, P(k, {C, AlgElem(k, Rational(1))}));
  EXPECT_EQ(cvpoly(post_compose(iR, -(iR * Cbar), frb)).poly, shifted);
  EXPECT_NE(shifted, cv_r);
}

TEST(Special, FieldTooSmallForSpecialTokens) {
  // rho lives outside Q: asking for it over Q fails before dispatch.
  try {
    AlgElem::named(FieldSpec::q_omega(), "sqrt3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooSmall);
  }
}

TEST(Sweep, RowsAndIdentities) {
  std::vector<PV> ts;
  for (long t = -4; t <= 6; ++t) ts.emplace_back(q(t));
  ts.push_back(PV::infinity(QQ));
  const auto rows = sweep(ts, QQ);
  ASSERT_EQ(rows.size(), ts.size());
  for (const auto& r : rows) {
    EXPECT_TRUE(r.identities_hold) << r.t.str();
    ASSERT_TRUE(r.pair) << r.t.str() << " " << r.note;
    EXPECT_TRUE(r.pair->equicritical_exact);
  }
  EXPECT_TRUE(rows[5].has_pole);  // t = 1
}
