#include <gtest/gtest.h>

#include <algorithm>

#include "chaoslab/errors.hpp"
#include "chaoslab/interval_maps.hpp"
#include "support.hpp"

namespace chaoslab {
namespace {

using test_support::random_unit_rational;
using test_support::tent_by_steps;
using test_support::tent_root_count_on_grid;

TEST(TentStep, Examples) {
  EXPECT_EQ(tent_step(Rational(0)), Rational(0));
  EXPECT_EQ(tent_step(Rational(2, 3)), Rational(2, 3));
  EXPECT_EQ(tent_step(Rational(2, 5)), Rational(4, 5));
  EXPECT_EQ(tent_step(Rational(4, 5)), Rational(2, 5));
  EXPECT_EQ(tent_step(Rational(1, 2)), Rational(1));
  EXPECT_EQ(tent_step(Rational(1)), Rational(0));
}

TEST(TentStep, DomainErrors) {
  EXPECT_THROW(tent_step(Rational(-1, 2)), DomainError);
  EXPECT_THROW(tent_step(Rational(3, 2)), DomainError);
  EXPECT_THROW(tent_itinerary(Rational(2), 3), DomainError);
  EXPECT_THROW(tent_iterate(Rational(-1), 3), DomainError);
}

TEST(TentStep, TwoLipschitz) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = random_unit_rational(gen);
    const Rational y = random_unit_rational(gen);
    ASSERT_LE(abs(tent_step(x) - tent_step(y)), Rational(2) * abs(x - y));
  }
}

TEST(TentIterate, ClosedFormMatchesStepping) {
  std::mt19937_64 gen(22);
  for (int i = 0; i < 300; ++i) {
    const Rational x = random_unit_rational(gen, 5000);
    const auto n = static_cast<std::size_t>(uniform_upto(gen, 40));
    ASSERT_EQ(tent_iterate(x, n), tent_by_steps(x, n)) << x << " n=" << n;
  }
  EXPECT_EQ(tent_iterate(Rational(2, 5), 2), Rational(2, 5));
  EXPECT_EQ(tent_iterate(Rational(1, 2), 1), Rational(1));
}

TEST(TentItinerary, Examples) {
  EXPECT_EQ(tent_itinerary(Rational(0), 3), (Bits{0, 0, 0}));
  EXPECT_EQ(tent_itinerary(Rational(2, 3), 3), (Bits{1, 1, 1}));
  EXPECT_EQ(tent_itinerary(Rational(2, 5), 4), (Bits{0, 1, 0, 1}));
  // Tie at 1/2 codes 0.
  EXPECT_EQ(tent_itinerary(Rational(1, 2), 3), (Bits{0, 1, 0}));
}

TEST(TentBranch, PreimagesStayInTheCylinder) {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 200; ++i) {
    const Bits word = test_support::random_bits(gen, 1, 16);
    const AffineBranch f = tent_branch(word);
    for (const Rational t : {Rational(1, 7), Rational(3, 4), Rational(1, 3)}) {
      const Rational y = f.preimage(t);
      ASSERT_EQ(tent_itinerary(y, word.size()), word);
      ASSERT_EQ(tent_by_steps(y, word.size()), t);
    }
  }
}

TEST(TentPeriodicPoints, SmallPeriods) {
  EXPECT_EQ(tent_periodic_points(1), (std::vector<Rational>{Rational(0), Rational(2, 3)}));
  EXPECT_EQ(tent_periodic_points(2), (std::vector<Rational>{Rational(0), Rational(2, 5),
                                                            Rational(2, 3), Rational(4, 5)}));
  const auto three = tent_periodic_points(3);
  EXPECT_EQ(three.size(), 8u);
  EXPECT_TRUE(std::binary_search(three.begin(), three.end(), Rational(2, 9)));
  EXPECT_EQ(tent_step(Rational(2, 9)), Rational(4, 9));
  EXPECT_EQ(tent_step(Rational(4, 9)), Rational(8, 9));
  EXPECT_EQ(tent_step(Rational(8, 9)), Rational(2, 9));
}

TEST(TentPeriodicPoints, CountsAndFixedPointsAgainstGridRoots) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto points = tent_periodic_points(n);
    ASSERT_EQ(points.size(), std::size_t{1} << n) << "n=" << n;
    for (const auto& p : points) ASSERT_EQ(tent_by_steps(p, n), p);
    ASSERT_EQ(tent_root_count_on_grid(n), points.size()) << "n=" << n;
  }
}

TEST(TentPeriodicPoints, RangeChecked) {
  EXPECT_THROW(tent_periodic_points(0), InvalidInput);
  EXPECT_THROW(tent_periodic_points(21), InvalidInput);
}

TEST(NearestTentPeriodic, Examples) {
  EXPECT_EQ(nearest_tent_periodic(Rational(2, 3), Rational(1, 100)), Rational(2, 3));

  const Rational p = nearest_tent_periodic(Rational(1, 7), Rational(1, 2));
  EXPECT_LT(abs(Rational(1, 7) - p), Rational(1, 2));
  EXPECT_TRUE(tent_period(p).has_value());

  // 1/3 -> 2/3 -> 2/3: itinerary 0,1,1,1,1. Among the period-5 points the
  // one with that itinerary (brute-force search) is 10/31.
  const Bits word = tent_itinerary(Rational(1, 3), 5);
  EXPECT_EQ(word, (Bits{0, 1, 1, 1, 1}));
  std::vector<Rational> matching;
  for (const auto& q : tent_periodic_points(5)) {
    if (tent_itinerary(q, 5) == word) matching.push_back(q);
  }
  ASSERT_EQ(matching.size(), 1u);
  EXPECT_EQ(matching.front(), Rational(10, 31));
  const Rational third = nearest_tent_periodic(Rational(1, 3), Rational(1, 16));
  EXPECT_EQ(third, Rational(10, 31));
  EXPECT_LT(abs(Rational(1, 3) - third), Rational(1, 16));
}

TEST(NearestTentPeriodic, RandomCenters) {
  std::mt19937_64 gen(24);
  for (int i = 0; i < 300; ++i) {
    const Rational x = random_unit_rational(gen);
    const Rational eps = Rational::pow2(-static_cast<long>(uniform_in(gen, 1, 40)));
    const Rational p = nearest_tent_periodic(x, eps);
    ASSERT_LT(abs(x - p), eps);
    const auto period = tent_period(p);
    ASSERT_TRUE(period.has_value());
    ASSERT_EQ(tent_by_steps(p, *period), p);
  }
  EXPECT_THROW(nearest_tent_periodic(Rational(1, 3), Rational(0)), InvalidInput);
}

TEST(TentPeriod, MatchesDirectIteration) {
  for (long den = 1; den <= 60; ++den) {
    for (long num = 0; num <= den; ++num) {
      const Rational x(num, den);
      std::optional<std::size_t> brute;
      Rational y = x;
      for (std::size_t n = 1; n <= 200; ++n) {
        y = tent_step(y);
        if (y == x) {
          brute = n;
          break;
        }
      }
      ASSERT_EQ(tent_period(x), brute) << x;
    }
  }
}

}  // namespace
}  // namespace chaoslab
