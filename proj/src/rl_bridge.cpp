#include "wsd/rl_bridge.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace wsd::rl {
namespace {

using nlohmann::ordered_json;

ordered_json parse_line(const std::string& line) {
  try {
    return ordered_json::parse(line);
  } catch (const ordered_json::parse_error& err) {
    throw ProtocolError(std::string("malformed message: ") + err.what());
  }
}

std::string message_type(const ordered_json& doc) {
  if (!doc.is_object()) throw ProtocolError("message must be a JSON object");
  auto it = doc.find("type");
  if (it == doc.end() || !it->is_string()) throw ProtocolError("message has no 'type'");
  return it->get<std::string>();
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::string encode(const StepMessage& msg) {
  ordered_json doc;
  doc["type"] = "step";
  doc["k"] = msg.k;
  doc["state"] = msg.state ? ordered_json(*msg.state) : ordered_json(nullptr);
  doc["reward"] = msg.reward ? ordered_json(*msg.reward) : ordered_json(nullptr);
  doc["done"] = msg.done;
  doc["epsilon"] = msg.epsilon;
  return doc.dump();
}

std::string encode(const ActMessage& msg) {
  ordered_json doc;
  doc["type"] = "act";
  doc["weight"] = msg.weight;
  return doc.dump();
}

StepMessage decode_step(const std::string& line) {
  const ordered_json doc = parse_line(line);
  if (message_type(doc) != "step") throw ProtocolError("expected a step message");
  try {
    StepMessage msg;
    msg.k = doc.at("k").get<std::uint64_t>();
    if (!doc.at("state").is_null()) msg.state = doc.at("state").get<StateVector>();
    if (!doc.at("reward").is_null()) msg.reward = doc.at("reward").get<double>();
    msg.done = doc.at("done").get<bool>();
    if (doc.contains("epsilon")) msg.epsilon = doc.at("epsilon").get<double>();
    return msg;
  } catch (const ordered_json::exception& err) {
    throw ProtocolError(std::string("bad step message: ") + err.what());
  }
}

ActMessage decode_act(const std::string& line) {
  const ordered_json doc = parse_line(line);
  const std::string type = message_type(doc);
  if (type != "act") throw ProtocolError("expected an act message, got '" + type + "'");
  auto it = doc.find("weight");
  if (it == doc.end() || !it->is_number()) throw ProtocolError("act message needs a numeric 'weight'");
  const double weight = it->get<double>();
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ProtocolError("act weight must be positive and finite");
  }
  return ActMessage{weight};
}

// ---------------------------------------------------------------------------

Environment::Environment(std::vector<EdgeEvent> events, const EpisodeConfig& config)
    : events_(std::move(events)),
      config_(config),
      estimator_(config.pattern, WsdSampler(config.budget, config.seed)),
      exact_(config.pattern) {}

StepMessage Environment::reset() {
  if (started_) throw std::logic_error("environment already started");
  started_ = true;
  return advance();
}

StepMessage Environment::step(double weight) {
  if (!started_ || done_) throw std::logic_error("no pending insertion");
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ProtocolError("weight must be positive and finite");
  }
  estimator_.commit(events_[cursor_], weight);
  ++cursor_;
  return advance();
}

StepMessage Environment::advance() {
  while (cursor_ < events_.size()) {
    const EdgeEvent& ev = events_[cursor_];
    estimator_.observe(ev);
    exact_.apply(ev);
    if (!ev.is_insert()) {
      estimator_.commit(ev, 0.0);
      ++cursor_;
      continue;
    }
    StepMessage msg;
    msg.k = ++k_;
    msg.epsilon = std::abs(estimator_.estimate() - static_cast<double>(exact_.count()));
    msg.state = compute_state(estimator_.sampler(), ev.edge, config_.pattern, ev.index,
                              config_.v_aggregate);
    if (last_epsilon_) msg.reward = *last_epsilon_ - msg.epsilon;
    last_epsilon_ = msg.epsilon;
    return msg;
  }
  done_ = true;
  StepMessage msg;
  msg.k = k_ + 1;
  msg.done = true;
  msg.epsilon = std::abs(estimator_.estimate() - static_cast<double>(exact_.count()));
  if (last_epsilon_) msg.reward = *last_epsilon_ - msg.epsilon;
  return msg;
}

// ---------------------------------------------------------------------------

std::size_t serve_episode(const std::vector<EdgeEvent>& events, const EpisodeConfig& config,
                          std::istream& from_agent, std::ostream& to_agent,
                          std::ostream* transcript) {
  auto send = [&](const std::string& line) {
    to_agent << line << '\n';
    to_agent.flush();
    if (transcript) *transcript << line << '\n';
  };
  auto fail = [&](const std::string& what) {
    ordered_json err;
    err["type"] = "error";
    err["message"] = what;
    send(err.dump());
  };

  Environment env(events, config);
  StepMessage msg = env.reset();
  send(encode(msg));
  std::size_t sent = 1;
  while (!msg.done) {
    std::string line;
    do {
      if (!std::getline(from_agent, line)) {
        throw AgentDisconnected("agent closed the stream before step " + std::to_string(msg.k));
      }
    } while (is_blank(line));
    ActMessage act;
    try {
      act = decode_act(line);
    } catch (const ProtocolError& err) {
      fail(err.what());
      throw;
    }
    if (transcript) *transcript << encode(act) << '\n';
    msg = env.step(act.weight);
    send(encode(msg));
    ++sent;
  }
  return sent;
}

std::vector<Transition> replay_episode(std::istream& transcript) {
  std::vector<ordered_json> messages;
  std::string line;
  while (std::getline(transcript, line)) {
    if (!is_blank(line)) messages.push_back(parse_line(line));
  }
  std::vector<Transition> transitions;
  std::size_t i = 0;
  while (i < messages.size()) {
    if (message_type(messages[i]) != "step") {
      throw ProtocolError("message " + std::to_string(i + 1) + ": expected a step");
    }
    const StepMessage step = decode_step(messages[i].dump());
    if (step.done) {
      if (i + 1 != messages.size()) throw ProtocolError("messages after the terminal step");
      if (!transitions.empty()) {
        if (!step.reward) throw ProtocolError("terminal step without reward");
        transitions.back().reward = *step.reward;
        transitions.back().next_state = std::nullopt;
      }
      return transitions;
    }
    if (!step.state) throw ProtocolError("non-terminal step without state");
    if (!transitions.empty()) {
      if (!step.reward) throw ProtocolError("step " + std::to_string(step.k) + " without reward");
      transitions.back().reward = *step.reward;
      transitions.back().next_state = step.state;
    }
    if (i + 1 >= messages.size() || message_type(messages[i + 1]) != "act") {
      throw ProtocolError("step " + std::to_string(step.k) + " is not followed by an act");
    }
    const ActMessage act = decode_act(messages[i + 1].dump());
    transitions.push_back(Transition{*step.state, act.weight, 0.0, std::nullopt});
    i += 2;
  }
  if (!transitions.empty()) throw ProtocolError("transcript ends without a terminal step");
  return transitions;
}

}  // namespace wsd::rl
