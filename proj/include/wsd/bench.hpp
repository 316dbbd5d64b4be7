#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wsd/estimator.hpp"
#include "wsd/stream.hpp"

namespace wsd {

class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |estimate - truth| / truth * 100. Throws UndefinedMetric when truth is 0.
double metric_are(double estimate, double truth);

struct MareResult {
  double mare_pct = 0.0;
  std::size_t points = 0;
  std::size_t skipped = 0;  // grid points with zero truth
};

/// Mean per-point ARE over the points where truth > 0.
/// Throws UndefinedMetric if no such point exists.
MareResult metric_mare(std::span<const double> estimates, std::span<const double> truths);

struct ExperimentConfig {
  PatternKind pattern = PatternKind::Triangle;
  Scheme scheme = Scheme::Wsd;
  WeightPolicy policy = ConstantWeight{};
  std::size_t budget = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool oracle = true;
  /// 0: one worker per hardware thread.
  std::size_t threads = 0;
  /// Serial execution so per-trial wall times are comparable.
  bool timing = false;

  /// Throws std::invalid_argument on budget < |H|, zero trials, or a policy
  /// that does not match the pattern.
  void validate() const;
};

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double final_estimate = 0.0;
  std::optional<double> are_pct;
  std::optional<double> mare_pct;
  std::size_t mare_skipped = 0;
  double events_per_sec = 0.0;
};

struct Report {
  std::vector<TrialResult> trials;
  std::optional<std::uint64_t> final_exact;
  double mean_estimate = 0.0;
  double sample_variance = 0.0;  // of the final estimate over trials
  std::optional<double> mean_are_pct;
  std::optional<double> mean_mare_pct;
  /// MSE of the final estimate against the exact count.
  std::optional<double> mse;
  double seconds_per_event = 0.0;
  std::size_t events = 0;
};

/// Runs trials with seeds seed, seed+1, ... Deterministic given the config
/// (timing fields aside).
Report run_experiment(std::span<const EdgeEvent> events, const ExperimentConfig& config);

/// `trial,seed,final_estimate,final_exact,are_pct,mare_pct,events_per_sec`
void write_report_csv(std::ostream& out, const Report& report);
void write_report_summary(std::ostream& out, const Report& report);

}  // namespace wsd
