#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bgrover/errors.hpp"
#include "bgrover/search.hpp"

namespace bgrover {
namespace {

constexpr double kPi = std::numbers::pi;

const DictionarySpec kSignedArray{{1, -1, 1}, 2, IndexPrep::uniform()};

SearchOptions uniform_options(int j) {
  SearchOptions o;
  o.iterations = j;
  return o;
}

SearchOptions binomial_options(double omega, int j) {
  SearchOptions o;
  o.mode = SearchMode::kBinomial;
  o.omega = omega;
  o.iterations = j;
  return o;
}

std::uint64_t total(const std::map<std::string, std::uint64_t>& histogram) {
  std::uint64_t sum = 0;
  for (const auto& [label, count] : histogram) sum += count;
  return sum;
}

double sin3_squared(double a) { return std::pow(3 * a - 4 * a * a * a, 2); }

TEST(SetSearch, Uniform) {
  const RunReport r = set_search(4, BasisPattern::parse("1101"), uniform_options(1));
  EXPECT_NEAR(r.target_probability, 121.0 / 256, 1e-12);
  EXPECT_EQ(total(r.histogram), r.shots);
  EXPECT_EQ(r.shots, 1024u);
  EXPECT_FALSE(r.omega.has_value());
}

TEST(SetSearch, BinomialBeatsUniform) {
  const BasisPattern target = BasisPattern::parse("1101");
  const RunReport r = set_search(4, target, binomial_options(omega_max(4, 3), 1));
  EXPECT_NEAR(omega_max(4, 3), 2 * kPi / 3, 1e-15);
  EXPECT_NEAR(r.target_probability, sin3_squared(3 * std::sqrt(3.0) / 16), 1e-12);
  EXPECT_NEAR(r.target_probability, 0.7010221481323242, 1e-12);
  EXPECT_GT(r.target_probability, set_search(4, target, uniform_options(1)).target_probability);
  EXPECT_EQ(total(r.histogram), r.shots);
}

TEST(SetSearch, AllZeroTargetCeilPlan) {
  const GroverPlan p = plan(4, 0);
  const RunReport r = set_search(4, BasisPattern::parse("0000"), binomial_options(p.omega(), p.j_ideal));
  EXPECT_EQ(p.j_ideal, 1);
  EXPECT_NEAR(r.target_probability, 1.0, 1e-9);
}

TEST(SetSearch, Errors) {
  SearchOptions o;
  o.mode = SearchMode::kBinomial;
  EXPECT_THROW(set_search(4, BasisPattern::parse("1101"), o), RangeError);
  EXPECT_THROW(set_search(3, BasisPattern::parse("1101"), uniform_options(1)), RangeError);
  EXPECT_THROW(set_search(4, BasisPattern::parse("1101"), uniform_options(-1)), RangeError);
}

TEST(SetSearch, SeedDeterminism) {
  const BasisPattern target = BasisPattern::parse("1101");
  SearchOptions o = uniform_options(1);
  o.seed = 11;
  EXPECT_EQ(set_search(4, target, o), set_search(4, target, o));
  SearchOptions other = o;
  other.seed = 12;
  EXPECT_NE(set_search(4, target, o).histogram, set_search(4, target, other).histogram);
}

TEST(ArrayRetrieve, Uniform) {
  const RunReport r = array_retrieve(kSignedArray, BasisPattern::parse("110"), uniform_options(1));
  EXPECT_NEAR(r.target_probability, sin3_squared(1 / std::sqrt(8.0)), 1e-12);
  EXPECT_NEAR(r.target_probability, 25.0 / 32, 1e-12);
  ASSERT_TRUE(r.decoded_value.has_value());
  EXPECT_EQ(*r.decoded_value, 0);
  EXPECT_EQ(total(r.histogram), r.shots);
  for (const auto& [label, count] : r.histogram) EXPECT_EQ(label.size(), 5u);
}

TEST(ArrayRetrieve, Binomial) {
  const double w = omega_max(3, 2);
  EXPECT_NEAR(w, 2 * std::atan(std::sqrt(2.0)), 1e-15);
  const double a = (2.0 / 3) / std::sqrt(3.0);
  EXPECT_NEAR(a, 0.3849, 1e-4);
  const RunReport r = array_retrieve(kSignedArray, BasisPattern::parse("110"), binomial_options(w, 1));
  EXPECT_NEAR(r.target_probability, sin3_squared(a), 1e-12);
  EXPECT_NEAR(r.target_probability, 0.85861, 1e-5);
  EXPECT_EQ(r.decoded_value, 0);
}

TEST(ArrayRetrieve, ZeroIterationsKeepsThePrepMarginal) {
  for (BasisIndex i = 0; i < 8; ++i) {
    const BasisPattern t = BasisPattern::from_integer(i, 3);
    EXPECT_NEAR(array_retrieve(kSignedArray, t, uniform_options(0)).target_probability, 0.125, 1e-12);
    const double w = 1.2;
    EXPECT_NEAR(array_retrieve(kSignedArray, t, binomial_options(w, 0)).target_probability,
                std::pow(amplitude_a(3, hamming_weight(i), w), 2), 1e-12);
  }
}

TEST(ArrayRetrieve, DecodesEveryIndex) {
  for (BasisIndex i = 0; i < 8; ++i) {
    const RunReport r = array_retrieve(kSignedArray, BasisPattern::from_integer(i, 3), uniform_options(1));
    EXPECT_EQ(r.decoded_value, expected_subset_sum(kSignedArray.values, i, 2));
  }
}

TEST(ValueSearch, NegativeSatisfyingSetIsBruteForce) {
  const auto sat = satisfying_indices(kSignedArray.values, 2, ValuePredicate::negative());
  EXPECT_EQ(sat, (std::vector<BasisIndex>{parse_label("010"), parse_label("101")}));
  const RunReport r = array_value_search(kSignedArray, ValuePredicate::negative(), uniform_options(0));
  EXPECT_EQ(r.satisfying_indices, sat);
  EXPECT_NEAR(r.target_probability, 0.25, 1e-12);
  EXPECT_NEAR(array_value_search(kSignedArray, ValuePredicate::negative(), uniform_options(1)).target_probability,
              1.0, 1e-12);
}

TEST(ValueSearch, ZeroSumCountAtZeroIterations) {
  const auto zeros = satisfying_indices(kSignedArray.values, 2, ValuePredicate::equals(0));
  EXPECT_EQ(zeros.size(), 3u);
  const RunReport r = array_value_search(kSignedArray, ValuePredicate::equals(0), uniform_options(0));
  EXPECT_NEAR(r.target_probability, 3.0 / 8, 1e-12);
}

TEST(ValueSearch, UnsatisfiableInWindowIsReported) {
  const RunReport r = array_value_search(kSignedArray, ValuePredicate::equals(3), uniform_options(1));
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.target_probability, 0.0);
  EXPECT_TRUE(r.histogram.empty());
  EXPECT_FALSE(ValuePredicate::equals(3).satisfiable_in_window(2));
  EXPECT_TRUE(ValuePredicate::equals(-2).satisfiable_in_window(2));
}

TEST(ValueSearch, MultiTargetConsistency) {
  const std::vector<DictionarySpec> dicts = {
      kSignedArray,
      {{2, -3, 1, 4}, 3, {}},
      {{5, -1, -6, 2, 3}, 4, {}},
  };
  for (const auto& dict : dicts) {
    for (const ValuePredicate pred : {ValuePredicate::negative(), ValuePredicate::equals(1)}) {
      const auto sat = satisfying_indices(dict.values, dict.m_value, pred);
      if (sat.empty()) continue;
      std::vector<int> weights;
      for (BasisIndex i : sat) weights.push_back(hamming_weight(i));
      const int d = dict.n_index();
      for (int j = 0; j <= 3; ++j) {
        for (double w : {kPi / 2, 15 * kPi / 32, 17 * kPi / 32, 1.0}) {
          const double theta = multi_target_theta(d, weights, w);
          const double expected = std::pow(std::sin((2 * j + 1) * theta), 2);
          const SearchOptions o = w == kPi / 2 ? uniform_options(j) : binomial_options(w, j);
          EXPECT_NEAR(array_value_search(dict, pred, o).target_probability, expected, 1e-9)
              << "d=" << d << " j=" << j << " w=" << w;
        }
      }
    }
  }
}

TEST(ValueSearch, FavoringProperty) {
  const double uniform = std::pow(2.0, -5.5);
  for (int k = 0; k <= 11; ++k) {
    if (k <= 5) EXPECT_GT(amplitude_a(11, k, 15 * kPi / 32), uniform);
    if (k >= 6) EXPECT_GT(amplitude_a(11, k, 17 * kPi / 32), uniform);
  }
}

TEST(Adaptive, HundredSeedsNearlyAlwaysSucceed) {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AdaptiveSchedule s;
    s.seed = seed;
    const AdaptiveOutcome out = adaptive_search(kSignedArray, ValuePredicate::negative(), s);
    if (out.succeeded) {
      ++successes;
      ASSERT_TRUE(out.found_index.has_value());
      EXPECT_LT(expected_subset_sum(kSignedArray.values, *out.found_index, 2), 0);
      EXPECT_EQ(out.found_value, expected_subset_sum(kSignedArray.values, *out.found_index, 2));
    }
    for (const RunReport& r : out.rounds) {
      EXPECT_EQ(r.shots, 1u);
      EXPECT_EQ(total(r.histogram), 1u);
      EXPECT_LE(r.iterations, 3);
    }
  }
  EXPECT_GE(successes, 99);
}

TEST(Adaptive, Deterministic) {
  AdaptiveSchedule s;
  s.seed = 7;
  const AdaptiveOutcome a = adaptive_search(kSignedArray, ValuePredicate::negative(), s);
  const AdaptiveOutcome b = adaptive_search(kSignedArray, ValuePredicate::negative(), s);
  EXPECT_EQ(a, b);
}

TEST(Adaptive, EverythingSatisfiesSucceedsFirstRound) {
  const DictionarySpec zeros{{0, 0, 0}, 2, {}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AdaptiveSchedule s;
    s.seed = seed;
    const AdaptiveOutcome out = adaptive_search(zeros, ValuePredicate::equals(0), s);
    EXPECT_TRUE(out.succeeded);
    EXPECT_EQ(out.rounds.size(), 1u);
  }
}

TEST(Adaptive, EmptySatisfyingSetFailsAfterMaxRounds) {
  const DictionarySpec positive{{1, 1, 1}, 3, {}};
  ASSERT_TRUE(satisfying_indices(positive.values, 3, ValuePredicate::equals(-2)).empty());
  AdaptiveSchedule s;
  s.max_rounds = 20;
  const AdaptiveOutcome out = adaptive_search(positive, ValuePredicate::equals(-2), s);
  EXPECT_FALSE(out.succeeded);
  EXPECT_EQ(out.rounds.size(), 20u);
  EXPECT_FALSE(out.found_index.has_value());
}

TEST(Adaptive, ScheduleValidation) {
  AdaptiveSchedule s;
  s.growth_factor = 1.0;
  EXPECT_THROW(adaptive_search(kSignedArray, ValuePredicate::negative(), s), RangeError);
  s = {};
  s.omega_candidates = {4.0};
  EXPECT_THROW(adaptive_search(kSignedArray, ValuePredicate::negative(), s), RangeError);
  s = {};
  s.max_rounds = 0;
  EXPECT_THROW(adaptive_search(kSignedArray, ValuePredicate::negative(), s), RangeError);
}

}  // namespace
}  // namespace bgrover
