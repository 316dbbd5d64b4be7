#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "test_support.hpp"
#include "wsd/estimator.hpp"
#include "wsd/exact_counter.hpp"

using namespace wsd;

namespace {

struct MeanSe {
  double mean;
  double se;
};

template <class Fn>
MeanSe monte_carlo(std::size_t trials, Fn&& one_trial) {
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const double x = one_trial(static_cast<std::uint64_t>(i));
    sum += x;
    sum_sq += x * x;
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var = (sum_sq - n * mean * mean) / (n - 1.0);
  return {mean, std::sqrt(std::max(var, 0.0) / n)};
}

EventStream small_dynamic_stream() {
  return make_stream(gen_forest_fire(40, 0.5, 12),
                     StreamConfig{LightDeletion{0.25}, Ordering::UniformAtRandom, 3});
}

}  // namespace

TEST(Scheme, NamesRoundTrip) {
  for (const auto s : {Scheme::Wsd, Scheme::GpsA, Scheme::NaiveGps}) {
    EXPECT_EQ(parse_scheme(to_string(s)), s);
  }
  EXPECT_THROW(parse_scheme("reservoir"), std::invalid_argument);
}

TEST(Estimator, LargeBudgetIsExactAtEveryStep) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto events = testkit::random_dynamic_stream(14, 150, 0.3, seed);
    for (const auto kind : {PatternKind::Wedge, PatternKind::Triangle, PatternKind::FourClique}) {
      const auto exact = exact_trajectory(events, kind);
      for (const auto scheme : {Scheme::Wsd, Scheme::GpsA, Scheme::NaiveGps}) {
        const auto run = run_stream(events, HeuristicWeight{},
                                    RunOptions{scheme, kind, events.size(), seed, 1});
        ASSERT_EQ(run.trajectory.size(), events.size());
        for (std::size_t i = 0; i < events.size(); ++i) {
          ASSERT_DOUBLE_EQ(run.trajectory[i], static_cast<double>(exact[i]))
              << to_string(scheme) << " " << to_string(kind) << " t=" << i + 1;
        }
      }
    }
  }
}

TEST(Estimator, InverseProbabilityProduct) {
  // u=1, v=2, w=3. (1,3) weight 1 and (2,3) weight 4 are sampled; a rejected
  // rank 2 sets tau_q = 2, so p(1,3) = 0.5 and p(2,3) = 1.
  CountEstimator est(PatternKind::Triangle, WsdSampler(2, 0));
  est.sampler().insert_with_rank(Edge(1, 3), 1.0, 10.0, 1);
  est.sampler().insert_with_rank(Edge(2, 3), 4.0, 12.0, 2);
  est.sampler().insert_with_rank(Edge(7, 8), 1.0, 2.0, 3);
  ASSERT_EQ(est.sampler().tau_q(), 2.0);
  est.observe(EdgeEvent{Op::Insert, Edge(1, 2), 4});
  EXPECT_DOUBLE_EQ(est.estimate(), 2.0);
}

TEST(Estimator, HandTracedStream) {
  const auto events = testkit::events_of(
      {{'+', 1, 2}, {'+', 2, 3}, {'+', 1, 3}, {'+', 2, 4}, {'+', 1, 4}, {'-', 2, 4}});
  const double ranks[] = {5, 3, 4, 2, 6};
  const double expected_c[] = {0, 0, 1, 1, 1, -15};
  CountEstimator est(PatternKind::Triangle, WsdSampler(2, 0));
  for (std::size_t i = 0; i < events.size(); ++i) {
    est.observe(events[i]);
    if (events[i].is_insert()) {
      est.sampler().insert_with_rank(events[i].edge, 1.0, ranks[i], events[i].index);
    } else {
      EXPECT_EQ(est.sampler().remove(events[i].edge), DeleteOutcome::NotSampled);
    }
    EXPECT_DOUBLE_EQ(est.estimate(), expected_c[i]) << "after event " << i + 1;
  }
  EXPECT_EQ(est.sampler().tau_q(), 4.0);
  const auto exact = exact_trajectory(events, PatternKind::Triangle);
  EXPECT_EQ(exact[4], 2u);
  EXPECT_EQ(exact[5], 1u);
}

TEST(Estimator, EmptyStream) {
  const auto run = run_stream({}, ConstantWeight{}, RunOptions{Scheme::Wsd, PatternKind::Wedge, 4, 0, 1});
  EXPECT_EQ(run.final_estimate, 0.0);
  EXPECT_TRUE(run.trajectory.empty());
}

TEST(Estimator, SameSeedSameResult) {
  const auto events = small_dynamic_stream();
  for (const auto scheme : {Scheme::Wsd, Scheme::GpsA, Scheme::NaiveGps}) {
    const RunOptions opt{scheme, PatternKind::Triangle, 20, 77, 5};
    const auto a = run_stream(events, HeuristicWeight{}, opt);
    const auto b = run_stream(events, HeuristicWeight{}, opt);
    EXPECT_EQ(a.trajectory, b.trajectory);
    EXPECT_EQ(a.trajectory_t, b.trajectory_t);
    EXPECT_EQ(a.trajectory_t.back(), events.size());
  }
}

TEST(Estimator, DeletionsNeverRaiseTheEstimate) {
  const auto events = small_dynamic_stream();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto run = run_stream(events, ConstantWeight{},
                                RunOptions{Scheme::Wsd, PatternKind::Triangle, 15, seed, 1});
    for (std::size_t i = 1; i < events.size(); ++i) {
      if (events[i].is_insert()) {
        ASSERT_GE(run.trajectory[i], run.trajectory[i - 1]);
      } else {
        ASSERT_LE(run.trajectory[i], run.trajectory[i - 1]);
      }
    }
  }
}

TEST(Estimator, TrajectoryStrideAndCsv) {
  const auto events = testkit::events_of({{'+', 1, 2}, {'+', 2, 3}, {'+', 1, 3}, {'-', 1, 2}, {'+', 3, 4}});
  const auto run = run_stream(events, ConstantWeight{},
                              RunOptions{Scheme::Wsd, PatternKind::Triangle, 10, 0, 2});
  EXPECT_EQ(run.trajectory_t, (std::vector<EventIndex>{2, 4, 5}));
  const auto exact = exact_trajectory(events, PatternKind::Triangle);
  std::ostringstream out;
  write_trajectory_csv(out, run, &exact);
  EXPECT_EQ(out.str(), "t,estimate,exact\n2,0,0\n4,0,0\n5,0,0\n");
  const auto none = run_stream(events, ConstantWeight{},
                               RunOptions{Scheme::Wsd, PatternKind::Triangle, 10, 0, 0});
  EXPECT_TRUE(none.trajectory.empty());
  EXPECT_EQ(none.final_estimate, 0.0);
}

TEST(Estimator, LearnedPolicyMustMatchPattern) {
  const auto events = small_dynamic_stream();
  const LearnedWeight policy{PolicyParams::zeros(PatternKind::Wedge)};
  EXPECT_THROW(run_stream(events, policy, RunOptions{Scheme::Wsd, PatternKind::Triangle, 10, 0, 0}),
               PolicyError);
  EXPECT_NO_THROW(run_stream(events, policy, RunOptions{Scheme::Wsd, PatternKind::Wedge, 10, 0, 0}));
}

struct UnbiasedCase {
  Scheme scheme;
  PatternKind kind;
  bool heuristic;
};

class EstimatorUnbiased : public ::testing::TestWithParam<UnbiasedCase> {};

TEST_P(EstimatorUnbiased, MeanWithinFourStandardErrors) {
  const auto [scheme, kind, heuristic] = GetParam();
  const auto events = small_dynamic_stream();
  const double truth = static_cast<double>(exact_trajectory(events, kind).back());
  ASSERT_GT(truth, 0.0);
  std::size_t inserts = 0;
  for (const auto& ev : events) inserts += ev.is_insert() ? 1 : 0;
  const std::size_t budget = inserts * 2 / 5;
  const WeightPolicy policy = heuristic ? WeightPolicy{HeuristicWeight{}} : WeightPolicy{ConstantWeight{}};
  const auto [mean, se] = monte_carlo(3000, [&](std::uint64_t seed) {
    return run_stream(events, policy, RunOptions{scheme, kind, budget, seed, 0}).final_estimate;
  });
  EXPECT_LT(std::abs(mean - truth), 4.0 * se) << "mean " << mean << " truth " << truth << " se " << se;
}

INSTANTIATE_TEST_SUITE_P(
    Schemes, EstimatorUnbiased,
    ::testing::Values(UnbiasedCase{Scheme::Wsd, PatternKind::Wedge, false},
                      UnbiasedCase{Scheme::Wsd, PatternKind::Triangle, true},
                      UnbiasedCase{Scheme::Wsd, PatternKind::FourClique, true},
                      UnbiasedCase{Scheme::GpsA, PatternKind::Triangle, false},
                      UnbiasedCase{Scheme::GpsA, PatternKind::FourClique, true}));
