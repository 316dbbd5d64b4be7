#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsd/estimator.hpp"
#include "wsd/exact_counter.hpp"
#include "wsd/stream.hpp"
#include "wsd/weight_policy.hpp"

namespace wsd::rl {

/// Env -> agent. One per insertion (state set), plus a final one with
/// state null and done true. `reward` is null on the first step.
/// `epsilon` is |c - exact| at the step's evaluation time.
struct StepMessage {
  std::uint64_t k = 0;
  std::optional<StateVector> state;
  std::optional<double> reward;
  bool done = false;
  double epsilon = 0.0;
};

/// Agent -> env.
struct ActMessage {
  double weight = 1.0;
};

std::string encode(const StepMessage& msg);
std::string encode(const ActMessage& msg);
StepMessage decode_step(const std::string& line);
/// Throws ProtocolError unless the line is an act with a positive finite weight.
ActMessage decode_act(const std::string& line);

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AgentDisconnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpisodeConfig {
  PatternKind pattern = PatternKind::Triangle;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  VAggregate v_aggregate = VAggregate::Max;
};

// The sampling process as an MDP. Step k is the k-th insertion t_k: the
// estimate is updated for that event, the error eps(t_k) = |c - exact| is
// measured, and the pre-insertion state is exposed. The agent's weight is
// then applied and every following event (deletions included) is processed
// until the next insertion. The reward on step k+1 is eps(t_k) - eps(t_{k+1});
// the terminal step's reward uses the error after the last event.
class Environment {
 public:
  Environment(std::vector<EdgeEvent> events, const EpisodeConfig& config);

  StepMessage reset();
  StepMessage step(double weight);

  bool done() const { return done_; }
  double estimate() const { return estimator_.estimate(); }
  std::uint64_t exact() const { return exact_.count(); }
  const CountEstimator<WsdSampler>& estimator() const { return estimator_; }

 private:
  StepMessage advance();

  std::vector<EdgeEvent> events_;
  EpisodeConfig config_;
  CountEstimator<WsdSampler> estimator_;
  ExactCounter exact_;
  std::size_t cursor_ = 0;
  std::uint64_t k_ = 0;
  std::optional<double> last_epsilon_;
  bool started_ = false;
  bool done_ = false;
};

/// Runs one episode over newline-delimited JSON: steps are written to
/// `to_agent`, acts read from `from_agent`. Every line exchanged is also
/// appended to `transcript` when given. Returns the number of steps sent.
std::size_t serve_episode(const std::vector<EdgeEvent>& events, const EpisodeConfig& config,
                          std::istream& from_agent, std::ostream& to_agent,
                          std::ostream* transcript = nullptr);

struct Transition {
  StateVector state;
  double action = 0.0;
  double reward = 0.0;
  std::optional<StateVector> next_state;  // nullopt: terminal
};

/// Pairs a recorded transcript (alternating step/act lines, ending with the
/// terminal step) into transitions. Throws ProtocolError on a broken structure.
std::vector<Transition> replay_episode(std::istream& transcript);

}  // namespace wsd::rl
