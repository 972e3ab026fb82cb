#include <gtest/gtest.h>

#include "chaoslab/errors.hpp"
#include "chaoslab/witness.hpp"
#include "support.hpp"

namespace chaoslab {
namespace {

using test_support::random_angle;
using test_support::random_radius;
using test_support::random_unit_rational;
using test_support::random_word;

const SystemHandle& kShift = SystemHandle::full_shift();
const SystemHandle& kTent = SystemHandle::tent();
const SystemHandle& kLogistic = SystemHandle::logistic();

Point random_point(const SystemHandle& sys, std::mt19937_64& gen) {
  switch (sys.id) {
    case SystemId::kFullShift: return random_word(gen);
    case SystemId::kTent: return random_unit_rational(gen);
    case SystemId::kLogistic: return random_angle(gen);
  }
  return {};
}

WitnessCertificate trace_certificate() {
  return asymptotic_witness(kShift, EPWord::zeros(), Rational(1, 4), Rational(1));
}

TEST(AsymptoticWitness, FullShiftTrace) {
  const WitnessCertificate c = trace_certificate();
  EXPECT_EQ(c.p, Point(EPWord::zeros()));
  EXPECT_EQ(c.q, Point(EPWord::parse(":00001111")));
  EXPECT_EQ(c.k, 4u);
  EXPECT_EQ(c.L, 8u);
  EXPECT_EQ(c.period_p, 1u);
  EXPECT_EQ(c.period_q, 8u);
  EXPECT_EQ(c.epsilon_used, Rational(1, 5));
  EXPECT_EQ(c.rho_used, Rational(1, 80));
  // d(0^inf, (11110000)^inf) = (15/8)(256/255).
  EXPECT_EQ(c.separation_at_k.exact_value(), Rational(15, 8) * Rational(256, 255));
  EXPECT_EQ(c.separation_at_k.exact_value(), Rational(32, 17));
  EXPECT_TRUE(verify_certificate(kShift, c, 1000).passed());
}

TEST(AsymptoticWitness, TentExample) {
  const Rational x(2, 3);
  const Rational r(1, 100);
  const WitnessCertificate c = asymptotic_witness(kTent, x, r, Rational(1, 2));
  for (const Point* pt : {&c.p, &c.q}) {
    const auto& v = std::get<Rational>(*pt);
    EXPECT_GT(v, x - r);
    EXPECT_LT(v, x + r);
  }
  EXPECT_GT(c.separation_at_k.exact_value(), Rational(1, 2));
  EXPECT_EQ(test_support::tent_by_steps(std::get<Rational>(c.p), c.period_p), std::get<Rational>(c.p));
  EXPECT_EQ(test_support::tent_by_steps(std::get<Rational>(c.q), c.period_q), std::get<Rational>(c.q));
  const VerificationReport rep = verify_certificate(kTent, c, 1000);
  EXPECT_TRUE(rep.passed());
}

TEST(AsymptoticWitness, LogisticExample) {
  const WitnessCertificate c =
      asymptotic_witness(kLogistic, AnglePoint(Rational(1, 3)), Rational(1, 1000), Rational(1, 2));
  EXPECT_TRUE(c.separation_at_k.certainly_greater(Rational(1, 2)));
  EXPECT_LE(c.separation_at_k.enclosure_value().width(), 1e-12);
  EXPECT_TRUE(verify_certificate(kLogistic, c, 200).passed());
}

TEST(AsymptoticWitness, RejectsBadArguments) {
  EXPECT_THROW(asymptotic_witness(kShift, EPWord::zeros(), Rational(1, 4), Rational(2)),
               UnsupportedDelta);
  EXPECT_THROW(asymptotic_witness(kTent, Rational(1, 3), Rational(0), Rational(1, 2)),
               InvalidInput);
  EXPECT_THROW(asymptotic_witness(kTent, EPWord::zeros(), Rational(1, 4), Rational(1, 2)),
               InvalidInput);
}

TEST(VerifyCertificate, DetectsTampering) {
  const WitnessCertificate good = trace_certificate();

  WitnessCertificate same_points = good;
  same_points.q = EPWord::zeros();
  same_points.period_q = 1;
  const auto r1 = verify_certificate(kShift, same_points, 1000);
  EXPECT_FALSE(r1.passed());
  EXPECT_FALSE(r1.find("separation")->passed);

  WitnessCertificate greedy = good;
  greedy.delta = Rational(2);
  const auto r2 = verify_certificate(kShift, greedy, 1000);
  EXPECT_FALSE(r2.find("separation")->passed);

  WitnessCertificate not_periodic = good;
  not_periodic.q = EPWord::canonicalize({0, 0, 0, 0}, {1});
  EXPECT_FALSE(verify_certificate(kShift, not_periodic, 10).find("q_periodic")->passed);

  WitnessCertificate small_ball = good;
  small_ball.radius = Rational(1, 1000);
  EXPECT_FALSE(verify_certificate(kShift, small_ball, 10).find("q_in_ball")->passed);

  WitnessCertificate bad_l = good;
  bad_l.L = 7;
  EXPECT_FALSE(verify_certificate(kShift, bad_l, 10).passed());

  EXPECT_FALSE(verify_certificate(kTent, good, 10).passed());
}

TEST(VerifyCertificate, RecurrenceIsLiteralEquality) {
  const WitnessCertificate c = trace_certificate();
  for (std::size_t m = 0; m <= 50; ++m) {
    const std::size_t n = c.k + m * c.L;
    EXPECT_EQ(distance(kShift, iterate(kShift, c.p, n), iterate(kShift, c.q, n)),
              c.separation_at_k);
  }
}

TEST(SeparationSeries, Examples) {
  const auto zeros = separation_series(kShift, EPWord::zeros(), EPWord::zeros(), 10);
  ASSERT_EQ(zeros.size(), 11u);
  for (const auto& [n, d] : zeros) EXPECT_EQ(d.exact_value(), Rational(0));

  const auto s = separation_series(kShift, EPWord::zeros(), EPWord::parse(":00001111"), 12);
  ASSERT_EQ(s.size(), 13u);
  for (const auto& [n, d] : s) {
    EXPECT_EQ(d.exact_value() == Rational(32, 17), n == 4 || n == 12) << n;
  }

  const auto swap = separation_series(kTent, Rational(2, 5), Rational(4, 5), 4);
  ASSERT_EQ(swap.size(), 5u);
  for (const auto& [n, d] : swap) EXPECT_EQ(d.exact_value(), Rational(2, 5));

  EXPECT_THROW(separation_series(kTent, Rational(0), Rational(1), 0), InvalidInput);
}

TEST(AsymptoticWitness, SoundnessMarginChainAndRobustness) {
  std::mt19937_64 gen(51);
  for (const SystemHandle* s : {&kShift, &kTent, &kLogistic}) {
    const Rational delta = s->certified_delta;
    for (int i = 0; i < 30; ++i) {
      const Point x = random_point(*s, gen);
      const Rational r = random_radius(gen, 16);
      const WitnessCertificate c = asymptotic_witness(*s, x, r, delta);
      ASSERT_TRUE(verify_certificate(*s, c, 100).passed()) << s->name();

      // s - 2 eps > delta + 2 eps > delta with s = delta + 5 eps.
      const Rational eps = c.epsilon_used;
      const Rational sens = delta + Rational(5) * eps;
      ASSERT_GT(eps, Rational(0));
      ASSERT_GE(c.separation_at_k.lower(), sens - Rational(2) * eps);
      ASSERT_GT(sens - Rational(2) * eps, delta + Rational(2) * eps);

      const WitnessCertificate half = asymptotic_witness(*s, x, r / Rational(2), delta);
      ASSERT_TRUE(verify_certificate(*s, half, 20).passed());
    }
  }
}

}  // namespace
}  // namespace chaoslab
