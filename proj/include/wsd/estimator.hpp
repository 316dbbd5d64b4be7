#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wsd/pattern.hpp"
#include "wsd/reservoir.hpp"
#include "wsd/weight_policy.hpp"

namespace wsd {

enum class Scheme { Wsd, GpsA, NaiveGps };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);

using AnySampler = std::variant<WsdSampler, PrioritySampler>;
AnySampler make_sampler(Scheme scheme, std::size_t capacity, std::uint64_t seed);

// Streaming subgraph count estimator. For every event it first folds the
// instances the event's edge completes against the current sample into the
// running estimate c (added on insert, subtracted on delete), each weighted by
// the product of inverse inclusion probabilities of its sampled edges; only
// then is the sampler updated.
template <class Sampler>
class CountEstimator {
 public:
  CountEstimator(PatternKind kind, Sampler sampler) : kind_(kind), sampler_(std::move(sampler)) {}

  /// Sum over instances J completed by `e` of prod_{f in J \ e} 1 / p(f),
  /// with p evaluated at the live threshold.
  double completion_sum(const Edge& e) const {
    double total = 0.0;
    for_each_completion(sampler_.adjacency(), e, kind_, [&](std::span<const Edge> others) {
      double term = 1.0;
      for (const auto& f : others) term /= sampler_.inclusion_prob(sampler_.find(f)->weight);
      total += term;
    });
    return total;
  }

  /// Estimate update for `ev`; leaves the sampler untouched.
  void observe(const EdgeEvent& ev) {
    const double contribution = completion_sum(ev.edge);
    c_ += ev.is_insert() ? contribution : -contribution;
  }

  /// Sampler update for `ev`. `weight` is used for insertions only.
  void commit(const EdgeEvent& ev, double weight) {
    if (ev.is_insert()) {
      sampler_.insert(ev.edge, weight, ev.index);
    } else {
      sampler_.remove(ev.edge);
    }
  }

  void process(const EdgeEvent& ev, double weight) {
    observe(ev);
    commit(ev, weight);
  }

  double estimate() const { return c_; }
  PatternKind pattern() const { return kind_; }
  const Sampler& sampler() const { return sampler_; }
  Sampler& sampler() { return sampler_; }

 private:
  PatternKind kind_;
  Sampler sampler_;
  double c_ = 0.0;
};

struct RunResult {
  double final_estimate = 0.0;
  std::vector<EventIndex> trajectory_t;
  std::vector<double> trajectory;
  double seconds = 0.0;
};

/// Single pass over `events`. The weight policy is asked once per insertion,
/// before the sampler changes. A trajectory point is recorded every
/// `stride` events (0 disables recording) and always at the last event.
template <class Sampler>
RunResult run_with(CountEstimator<Sampler>& estimator, std::span<const EdgeEvent> events,
                   const WeightPolicy& policy, std::size_t stride) {
  RunResult result;
  if (stride > 0) {
    const std::size_t points = events.size() / stride + 1;
    result.trajectory_t.reserve(points);
    result.trajectory.reserve(points);
  }
  const PatternKind kind = estimator.pattern();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const EdgeEvent& ev = events[i];
    estimator.observe(ev);
    const double weight =
        ev.is_insert() ? choose_weight(policy, ev.edge, estimator.sampler(), kind, ev.index) : 0.0;
    estimator.commit(ev, weight);
    if (stride > 0 && ((i + 1) % stride == 0 || i + 1 == events.size())) {
      result.trajectory_t.push_back(ev.index);
      result.trajectory.push_back(estimator.estimate());
    }
  }
  result.final_estimate = estimator.estimate();
  return result;
}

struct RunOptions {
  Scheme scheme = Scheme::Wsd;
  PatternKind pattern = PatternKind::Triangle;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t stride = 0;
};

RunResult run_stream(std::span<const EdgeEvent> events, const WeightPolicy& policy,
                     const RunOptions& options);

/// CSV `t,estimate[,exact]`. `exact` is indexed by event (t - 1) when given.
void write_trajectory_csv(std::ostream& out, const RunResult& run,
                          const std::vector<std::uint64_t>* exact = nullptr);

}  // namespace wsd
