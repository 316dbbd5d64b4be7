#include "wsd/estimator.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace wsd {

Scheme parse_scheme(const std::string& name) {
  if (name == "wsd") return Scheme::Wsd;
  if (name == "gpsa" || name == "gps-a") return Scheme::GpsA;
  if (name == "naive" || name == "naivegps" || name == "naive-gps") return Scheme::NaiveGps;
  throw std::invalid_argument("unknown scheme '" + name + "' (wsd|gpsa|naive)");
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Wsd: return "wsd";
    case Scheme::GpsA: return "gpsa";
    case Scheme::NaiveGps: return "naive";
  }
  return "?";
}

AnySampler make_sampler(Scheme scheme, std::size_t capacity, std::uint64_t seed) {
  switch (scheme) {
    case Scheme::Wsd: return WsdSampler(capacity, seed);
    case Scheme::GpsA: return PrioritySampler(capacity, seed, DeletionMode::Tag);
    case Scheme::NaiveGps: return PrioritySampler(capacity, seed, DeletionMode::Remove);
  }
  throw std::invalid_argument("unknown scheme");
}

RunResult run_stream(std::span<const EdgeEvent> events, const WeightPolicy& policy,
                     const RunOptions& options) {
  if (const auto* learned = std::get_if<LearnedWeight>(&policy)) {
    learned->params.validate();
    if (learned->params.pattern != options.pattern) {
      throw PolicyError("policy pattern does not match the counted pattern");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  RunResult result = std::visit(
      [&](auto sampler) {
        CountEstimator estimator(options.pattern, std::move(sampler));
        return run_with(estimator, events, policy, options.stride);
      },
      make_sampler(options.scheme, options.budget, options.seed));
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_trajectory_csv(std::ostream& out, const RunResult& run,
                          const std::vector<std::uint64_t>* exact) {
  out << (exact ? "t,estimate,exact\n" : "t,estimate\n") << std::setprecision(17);
  for (std::size_t i = 0; i < run.trajectory_t.size(); ++i) {
    const EventIndex t = run.trajectory_t[i];
    out << t << ',' << run.trajectory[i];
    if (exact) out << ',' << (*exact)[t - 1];
    out << '\n';
  }
}

}  // namespace wsd
