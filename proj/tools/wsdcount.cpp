// wsdcount: subgraph counting on fully dynamic edge streams.
//
//   wsdcount gen        generate an event stream
//   wsdcount run        repeated estimation trials with ARE/MARE
//   wsdcount exact      exact counts only
//   wsdcount env-serve  serve one MDP episode over stdin/stdout
//
// Every subcommand accepts --config <file> (TOML, or a JSON object).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsd/bench.hpp"
#include "wsd/estimator.hpp"
#include "wsd/exact_counter.hpp"
#include "wsd/rl_bridge.hpp"
#include "wsd/stream.hpp"
#include "wsd/weight_policy.hpp"

namespace {

// Reads JSON objects as CLI11 config; anything else goes to the TOML reader.
// Top-level keys are attributed to `section` (the chosen subcommand), so a
// flat file works as well as one with a [run] / {"run": {...}} section.
class ConfigJsonOrToml : public CLI::ConfigTOML {
 public:
  std::string section;

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<CLI::ConfigItem> items;
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream toml(text);
      items = CLI::ConfigTOML::from_config(toml);
    } else {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& err) {
        throw CLI::ConversionError(std::string("config: ") + err.what());
      }
      collect(doc, {}, items);
    }
    if (!section.empty()) {
      for (auto& item : items) {
        if (item.parents.empty() && item.name != "config") item.parents.push_back(section);
      }
    }
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  static void collect(const nlohmann::json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        collect(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& x : value) item.inputs.push_back(scalar(x));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

struct SourceOptions {
  std::string stream_path;
  std::string edges_path;
  std::size_t ff_n = 0;
  double ff_p = 0.5;
  std::string ordering = "natural";
  std::string scenario = "insert";
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t stream_seed = 0;

  void add_to(CLI::App* app, bool allow_stream_file) {
    if (allow_stream_file) {
      app->add_option("--stream", stream_path, "Event file (+/- u v per line)");
    }
    app->add_option("--edges", edges_path, "Raw edge list (u v per line) to build a stream from");
    app->add_option("--ff-n", ff_n, "Forest Fire vertex count");
    app->add_option("--ff-p", ff_p, "Forest Fire burning probability")->check(CLI::Range(0.0, 0.999999));
    app->add_option("--ordering", ordering, "natural|uar|rbfs")->capture_default_str();
    app->add_option("--scenario", scenario, "insert|massive|light")->capture_default_str();
    app->add_option("--alpha", alpha, "Massive deletion: batch probability per insertion")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--beta", beta, "Deletion probability (beta_m for massive, beta_l for light)")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--stream-seed", stream_seed, "Seed for generation and ordering")
        ->capture_default_str();
  }

  wsd::EventStream load() const {
    if (!stream_path.empty()) return wsd::read_stream(stream_path);
    std::vector<wsd::Edge> edges;
    if (!edges_path.empty()) {
      edges = wsd::read_edge_list(edges_path);
    } else if (ff_n >= 2) {
      edges = wsd::gen_forest_fire(ff_n, ff_p, stream_seed);
    } else {
      throw std::invalid_argument("no stream source: give --stream, --edges or --ff-n");
    }
    wsd::StreamConfig config;
    config.ordering = wsd::parse_ordering(ordering);
    config.seed = stream_seed;
    if (scenario == "insert") {
      config.scenario = wsd::InsertOnly{};
    } else if (scenario == "massive") {
      config.scenario = wsd::MassiveDeletion{alpha, beta};
    } else if (scenario == "light") {
      config.scenario = wsd::LightDeletion{beta};
    } else {
      throw std::invalid_argument("unknown scenario '" + scenario + "' (insert|massive|light)");
    }
    return wsd::make_stream(edges, config);
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

wsd::WeightPolicy make_policy(const std::string& weight, const std::string& policy_path) {
  if (!policy_path.empty()) return wsd::LearnedWeight{wsd::load_policy(policy_path)};
  if (weight == "constant") return wsd::ConstantWeight{};
  if (weight == "heuristic") return wsd::HeuristicWeight{};
  if (weight == "learned") throw std::invalid_argument("--weight learned needs --policy <file>");
  throw std::invalid_argument("unknown weight '" + weight + "' (constant|heuristic|learned)");
}

void write_snapshot(const wsd::EventStream& events, const wsd::WeightPolicy& policy,
                    const wsd::RunOptions& options, std::ostream& out) {
  std::visit(
      [&](auto sampler) {
        wsd::CountEstimator estimator(options.pattern, std::move(sampler));
        wsd::run_with(estimator, events, policy, 0);
        estimator.sampler().write_snapshot(out);
      },
      wsd::make_sampler(options.scheme, options.budget, options.seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted reservoir sampling for subgraph counting on fully dynamic graph streams"};
  app.require_subcommand(1);
  app.fallthrough();
  auto config_reader = std::make_shared<ConfigJsonOrToml>();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "gen" || arg == "run" || arg == "exact" || arg == "env-serve") {
      config_reader->section = arg;
      break;
    }
  }
  app.config_formatter(config_reader);
  app.set_config("--config", "", "TOML or JSON config file; top-level keys apply to the subcommand");

  // gen
  SourceOptions gen_source;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate an event stream");
  gen_source.add_to(gen, false);
  gen->add_option("--out,-o", gen_out, "Output event file (default: stdout)");

  // run
  SourceOptions run_source;
  std::string pattern = "triangle";
  std::string scheme = "wsd";
  std::string weight = "constant";
  std::string policy_path;
  std::size_t budget = 0;
  double budget_frac = 0.0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool no_oracle = false;
  bool timing = false;
  std::size_t threads = 0;
  std::string csv_path;
  std::string trajectory_path;
  std::string snapshot_path;
  auto* run = app.add_subcommand("run", "Run repeated estimation trials");
  run_source.add_to(run, true);
  run->add_option("--pattern", pattern, "wedge|triangle|fourclique")->capture_default_str();
  run->add_option("--scheme", scheme, "wsd|gpsa|naive")->capture_default_str();
  run->add_option("--weight", weight, "constant|heuristic|learned")->capture_default_str();
  run->add_option("--policy", policy_path, "Policy JSON file (implies --weight learned)");
  run->add_option("--budget,-M", budget, "Reservoir capacity M");
  run->add_option("--budget-frac", budget_frac, "Reservoir capacity as a fraction of insertions");
  run->add_option("--trials", trials, "Number of trials")->capture_default_str();
  run->add_option("--seed", seed, "First trial seed; trial i uses seed+i")->capture_default_str();
  run->add_flag("--no-oracle", no_oracle, "Skip exact counting (no ARE/MARE)");
  run->add_flag("--timing", timing, "Serial trials for comparable timings");
  run->add_option("--threads", threads, "Worker threads (0: all cores)");
  run->add_option("--csv", csv_path, "Per-trial CSV output");
  run->add_option("--trajectory", trajectory_path, "Trajectory CSV of the first trial");
  run->add_option("--snapshot", snapshot_path, "Final reservoir of the first trial as CSV");

  // exact
  SourceOptions exact_source;
  std::string exact_pattern = "triangle";
  std::string exact_csv;
  auto* exact = app.add_subcommand("exact", "Exact pattern count along the stream");
  exact_source.add_to(exact, true);
  exact->add_option("--pattern", exact_pattern, "wedge|triangle|fourclique")->capture_default_str();
  exact->add_option("--csv", exact_csv, "Write t,count for every event");

  // env-serve
  std::string env_stream;
  std::string env_pattern = "triangle";
  std::size_t env_budget = 0;
  std::uint64_t env_seed = 0;
  std::string env_aggregate = "max";
  std::string env_transcript;
  auto* env = app.add_subcommand("env-serve", "Serve one episode of the weight MDP on stdio");
  env->add_option("--stream", env_stream, "Event file")->required();
  env->add_option("--pattern", env_pattern, "wedge|triangle|fourclique")->capture_default_str();
  env->add_option("--budget,-M", env_budget, "Reservoir capacity M")->required();
  env->add_option("--seed", env_seed, "Sampler seed")->capture_default_str();
  env->add_option("--v-aggregate", env_aggregate, "max|avg")->capture_default_str();
  env->add_option("--transcript", env_transcript, "Also record the exchanged lines here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto events = gen_source.load();
      if (gen_out.empty()) {
        wsd::write_stream(std::cout, events);
      } else {
        wsd::write_stream(gen_out, events);
      }
      std::cerr << "# wrote " << events.size() << " events\n";
      return 0;
    }

    if (*run) {
      const auto events = run_source.load();
      wsd::ExperimentConfig config;
      config.pattern = wsd::parse_pattern(pattern);
      config.scheme = wsd::parse_scheme(scheme);
      config.policy = make_policy(weight, policy_path);
      config.trials = trials;
      config.seed = seed;
      config.oracle = !no_oracle;
      config.threads = threads;
      config.timing = timing;
      config.budget = budget;
      if (budget_frac > 0.0) {
        std::size_t inserts = 0;
        for (const auto& ev : events) inserts += ev.is_insert() ? 1 : 0;
        config.budget = static_cast<std::size_t>(budget_frac * static_cast<double>(inserts));
      }
      const wsd::Report report = wsd::run_experiment(events, config);
      wsd::write_report_summary(std::cout, report);
      if (!csv_path.empty()) {
        auto out = open_output(csv_path);
        wsd::write_report_csv(out, report);
      }
      const wsd::RunOptions first{config.scheme, config.pattern, config.budget, config.seed, 1};
      if (!trajectory_path.empty()) {
        const auto traj = wsd::run_stream(events, config.policy, first);
        auto out = open_output(trajectory_path);
        if (config.oracle) {
          const auto truth = wsd::exact_trajectory(events, config.pattern);
          wsd::write_trajectory_csv(out, traj, &truth);
        } else {
          wsd::write_trajectory_csv(out, traj);
        }
      }
      if (!snapshot_path.empty()) {
        auto out = open_output(snapshot_path);
        write_snapshot(events, config.policy, first, out);
      }
      return 0;
    }

    if (*exact) {
      const auto events = exact_source.load();
      const auto counts = wsd::exact_trajectory(events, wsd::parse_pattern(exact_pattern));
      if (!exact_csv.empty()) {
        auto out = open_output(exact_csv);
        out << "t,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i) out << i + 1 << ',' << counts[i] << '\n';
      }
      std::cout << (counts.empty() ? 0 : counts.back()) << '\n';
      return 0;
    }

    if (*env) {
      const auto events = wsd::read_stream(env_stream);
      wsd::rl::EpisodeConfig config;
      config.pattern = wsd::parse_pattern(env_pattern);
      config.budget = env_budget;
      config.seed = env_seed;
      if (env_aggregate == "max") {
        config.v_aggregate = wsd::VAggregate::Max;
      } else if (env_aggregate == "avg") {
        config.v_aggregate = wsd::VAggregate::Avg;
      } else {
        throw std::invalid_argument("--v-aggregate must be max or avg");
      }
      std::optional<std::ofstream> transcript;
      if (!env_transcript.empty()) transcript = open_output(env_transcript);
      std::cerr << "# serving " << events.size() << " events, pattern " << env_pattern
                << ", M=" << env_budget << '\n';
      const std::size_t steps = wsd::rl::serve_episode(
          events, config, std::cin, std::cout, transcript ? &*transcript : nullptr);
      std::cerr << "# episode finished after " << steps << " steps\n";
      return 0;
    }
  } catch (const wsd::rl::AgentDisconnected& err) {
    std::cerr << "# agent disconnected: " << err.what() << '\n';
    return 3;
  } catch (const wsd::rl::ProtocolError& err) {
    std::cerr << "# protocol error: " << err.what() << '\n';
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "wsdcount: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
