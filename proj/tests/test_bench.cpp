#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"
#include "wsd/bench.hpp"

using namespace wsd;

namespace {

const std::filesystem::path kFixtures = WSD_FIXTURES;

}  // namespace

TEST(Metrics, Are) {
  EXPECT_EQ(metric_are(100, 100), 0.0);
  EXPECT_DOUBLE_EQ(metric_are(99, 100), 1.0);
  EXPECT_DOUBLE_EQ(metric_are(150, 100), 50.0);
  EXPECT_THROW(metric_are(3, 0), UndefinedMetric);
}

TEST(Metrics, Mare) {
  const std::vector<double> truth = {0, 0, 100, 200};
  const std::vector<double> exact_copy = truth;
  const auto zero = metric_mare(exact_copy, truth);
  EXPECT_EQ(zero.mare_pct, 0.0);
  EXPECT_EQ(zero.points, 2u);
  EXPECT_EQ(zero.skipped, 2u);

  const std::vector<double> est = {5, 1, 101, 206};  // 1% and 3%
  EXPECT_DOUBLE_EQ(metric_mare(est, truth).mare_pct, 2.0);

  const std::vector<double> zeros = {0, 0};
  EXPECT_THROW(metric_mare(zeros, zeros), UndefinedMetric);
  EXPECT_THROW(metric_mare(std::span<const double>{}, std::span<const double>{}), UndefinedMetric);
  EXPECT_THROW(metric_mare(est, zeros), std::invalid_argument);
}

TEST(Experiment, GoldenFixtureRun) {
  // Recorded from the first verified run; ARE cross-checked by hand against
  // the exact count of 10.
  const auto events = read_stream(kFixtures / "small_stream.txt");
  ExperimentConfig config;
  config.pattern = PatternKind::Triangle;
  config.budget = 20;
  config.seed = 1;
  const auto report = run_experiment(events, config);
  ASSERT_EQ(report.trials.size(), 1u);
  EXPECT_EQ(report.final_exact, 10u);
  EXPECT_NEAR(report.trials[0].final_estimate, 9.002154795001271, 1e-12);
  EXPECT_NEAR(*report.trials[0].are_pct, 9.9784520499872897, 1e-10);
  EXPECT_NEAR(*report.trials[0].mare_pct, 9.988397353179435, 1e-10);
  EXPECT_NEAR(*report.mse, 0.9956950531, 1e-9);
}

TEST(Experiment, LargeBudgetHasZeroError) {
  const auto events = read_stream(kFixtures / "small_stream.txt");
  ExperimentConfig config;
  config.pattern = PatternKind::Wedge;
  config.budget = events.size();
  const auto report = run_experiment(events, config);
  EXPECT_EQ(*report.trials[0].are_pct, 0.0);
  EXPECT_EQ(*report.trials[0].mare_pct, 0.0);
  EXPECT_EQ(*report.mse, 0.0);
}

TEST(Experiment, DeterministicAndThreadIndependent) {
  const auto events = read_stream(kFixtures / "small_stream.txt");
  ExperimentConfig config;
  config.pattern = PatternKind::Triangle;
  config.scheme = Scheme::GpsA;
  config.policy = HeuristicWeight{};
  config.budget = 18;
  config.trials = 40;
  config.seed = 100;
  config.threads = 1;
  const auto serial = run_experiment(events, config);
  config.threads = 4;
  const auto parallel = run_experiment(events, config);
  ASSERT_EQ(serial.trials.size(), parallel.trials.size());
  for (std::size_t i = 0; i < serial.trials.size(); ++i) {
    EXPECT_EQ(serial.trials[i].seed, 100 + i);
    EXPECT_EQ(serial.trials[i].final_estimate, parallel.trials[i].final_estimate);
    EXPECT_EQ(serial.trials[i].mare_pct, parallel.trials[i].mare_pct);
  }
  EXPECT_EQ(serial.mean_estimate, parallel.mean_estimate);
  EXPECT_EQ(serial.sample_variance, parallel.sample_variance);
  EXPECT_EQ(serial.mean_mare_pct, parallel.mean_mare_pct);
}

TEST(Experiment, WithoutOracle) {
  const auto events = read_stream(kFixtures / "small_stream.txt");
  ExperimentConfig config;
  config.budget = 20;
  config.trials = 3;
  config.oracle = false;
  const auto report = run_experiment(events, config);
  EXPECT_FALSE(report.final_exact.has_value());
  EXPECT_FALSE(report.mse.has_value());
  EXPECT_FALSE(report.trials[0].are_pct.has_value());
  std::ostringstream csv;
  write_report_csv(csv, report);
  std::istringstream in(csv.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "trial,seed,final_estimate,final_exact,are_pct,mare_pct,events_per_sec");
  EXPECT_EQ(row.substr(0, 4), "0,0,");
  EXPECT_NE(row.find(",,,,"), std::string::npos);
}

TEST(Experiment, Validation) {
  const auto events = read_stream(kFixtures / "small_stream.txt");
  ExperimentConfig config;
  config.pattern = PatternKind::FourClique;
  config.budget = 5;
  EXPECT_THROW(run_experiment(events, config), std::invalid_argument);
  config.budget = 6;
  config.trials = 0;
  EXPECT_THROW(run_experiment(events, config), std::invalid_argument);
  config.trials = 1;
  config.policy = LearnedWeight{PolicyParams::zeros(PatternKind::Triangle)};
  EXPECT_THROW(run_experiment(events, config), std::invalid_argument);
  config.policy = LearnedWeight{PolicyParams::zeros(PatternKind::FourClique)};
  EXPECT_NO_THROW(run_experiment(events, config));
}
