#include "wsd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <mutex>
#include <thread>

#include "wsd/exact_counter.hpp"

namespace wsd {

double metric_are(double estimate, double truth) {
  if (truth == 0.0) throw UndefinedMetric("ARE is undefined for a zero true count");
  return std::abs(estimate - truth) / truth * 100.0;
}

MareResult metric_mare(std::span<const double> estimates, std::span<const double> truths) {
  if (estimates.size() != truths.size()) {
    throw std::invalid_argument("MARE needs one truth per estimate");
  }
  MareResult r;
  double sum = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    if (truths[i] == 0.0) {
      ++r.skipped;
      continue;
    }
    sum += metric_are(estimates[i], truths[i]);
    ++r.points;
  }
  if (r.points == 0) throw UndefinedMetric("MARE grid is empty (no point with positive truth)");
  r.mare_pct = sum / static_cast<double>(r.points);
  return r;
}

void ExperimentConfig::validate() const {
  if (budget < edge_count(pattern)) {
    throw std::invalid_argument("budget M must be at least |H| = " +
                                std::to_string(edge_count(pattern)));
  }
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (const auto* learned = std::get_if<LearnedWeight>(&policy)) {
    learned->params.validate();
    if (learned->params.pattern != pattern) {
      throw std::invalid_argument("policy pattern " + to_string(learned->params.pattern) +
                                  " does not match " + to_string(pattern));
    }
  }
}

Report run_experiment(std::span<const EdgeEvent> events, const ExperimentConfig& config) {
  config.validate();
  Report report;
  report.events = events.size();

  std::vector<double> truth;
  if (config.oracle) {
    const auto exact = exact_trajectory(events, config.pattern);
    truth.assign(exact.begin(), exact.end());
    report.final_exact = exact.empty() ? 0 : exact.back();
  }

  report.trials.resize(config.trials);
  auto run_trial = [&](std::size_t i) {
    TrialResult& tr = report.trials[i];
    tr.trial = i;
    tr.seed = config.seed + i;
    RunOptions options{config.scheme, config.pattern, config.budget, tr.seed,
                       config.oracle ? std::size_t{1} : std::size_t{0}};
    const RunResult run = run_stream(events, config.policy, options);
    tr.final_estimate = run.final_estimate;
    tr.events_per_sec =
        run.seconds > 0.0 ? static_cast<double>(events.size()) / run.seconds : 0.0;
    if (config.oracle && !events.empty()) {
      if (truth.back() > 0.0) tr.are_pct = metric_are(run.final_estimate, truth.back());
      try {
        const MareResult mare = metric_mare(run.trajectory, truth);
        tr.mare_pct = mare.mare_pct;
        tr.mare_skipped = mare.skipped;
      } catch (const UndefinedMetric&) {
        tr.mare_skipped = truth.size();
      }
    }
  };

  std::size_t workers = config.threads;
  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (config.timing) workers = 1;
  workers = std::min(workers, config.trials);
  if (workers <= 1) {
    for (std::size_t i = 0; i < config.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
          try {
            run_trial(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  // Aggregation in trial order, independent of scheduling.
  const auto n = static_cast<double>(report.trials.size());
  double sum = 0.0;
  double seconds = 0.0;
  for (const auto& tr : report.trials) {
    sum += tr.final_estimate;
    if (tr.events_per_sec > 0.0) seconds += 1.0 / tr.events_per_sec;
  }
  report.mean_estimate = sum / n;
  double ss = 0.0;
  for (const auto& tr : report.trials) {
    ss += (tr.final_estimate - report.mean_estimate) * (tr.final_estimate - report.mean_estimate);
  }
  report.sample_variance = report.trials.size() > 1 ? ss / (n - 1.0) : 0.0;
  report.seconds_per_event = seconds / n;

  if (report.final_exact) {
    const auto truth_final = static_cast<double>(*report.final_exact);
    double se = 0.0;
    double are = 0.0;
    double mare = 0.0;
    std::size_t are_n = 0;
    std::size_t mare_n = 0;
    for (const auto& tr : report.trials) {
      se += (tr.final_estimate - truth_final) * (tr.final_estimate - truth_final);
      if (tr.are_pct) {
        are += *tr.are_pct;
        ++are_n;
      }
      if (tr.mare_pct) {
        mare += *tr.mare_pct;
        ++mare_n;
      }
    }
    report.mse = se / n;
    if (are_n > 0) report.mean_are_pct = are / static_cast<double>(are_n);
    if (mare_n > 0) report.mean_mare_pct = mare / static_cast<double>(mare_n);
  }
  return report;
}

void write_report_csv(std::ostream& out, const Report& report) {
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  out << "trial,seed,final_estimate,final_exact,are_pct,mare_pct,events_per_sec\n"
      << std::setprecision(17);
  for (const auto& tr : report.trials) {
    out << tr.trial << ',' << tr.seed << ',' << tr.final_estimate << ',';
    if (report.final_exact) out << *report.final_exact;
    out << ',';
    opt(tr.are_pct);
    out << ',';
    opt(tr.mare_pct);
    out << ',' << std::setprecision(6) << tr.events_per_sec << std::setprecision(17) << '\n';
  }
}

void write_report_summary(std::ostream& out, const Report& report) {
  out << std::setprecision(10);
  out << "trials            " << report.trials.size() << '\n'
      << "events            " << report.events << '\n'
      << "mean estimate     " << report.mean_estimate << '\n'
      << "sample variance   " << report.sample_variance << '\n';
  if (report.final_exact) out << "exact count       " << *report.final_exact << '\n';
  if (report.mse) out << "mse               " << *report.mse << '\n';
  if (report.mean_are_pct) out << "mean ARE (%)      " << *report.mean_are_pct << '\n';
  if (report.mean_mare_pct) out << "mean MARE (%)     " << *report.mean_mare_pct << '\n';
  out << "us per event      " << report.seconds_per_event * 1e6 << '\n';
}

}  // namespace wsd
