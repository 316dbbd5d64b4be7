#include "wsd/weight_policy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wsd {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw PolicyError(std::string("policy is missing field '") + field + "'");
  return *it;
}

std::vector<double> require_array(const json& obj, const char* field) {
  const json& value = require(obj, field);
  if (!value.is_array()) throw PolicyError(std::string("policy field '") + field + "' must be an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (const auto& x : value) {
    if (!x.is_number()) throw PolicyError(std::string("policy field '") + field + "' holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

PolicyParams PolicyParams::zeros(PatternKind kind) {
  const std::size_t dim = state_dim(kind);
  PolicyParams p;
  p.pattern = kind;
  p.W.assign(dim, 0.0);
  p.feat_mean.assign(dim, 0.0);
  p.feat_std.assign(dim, 1.0);
  return p;
}

void PolicyParams::validate() const {
  const std::size_t expected = state_dim(pattern);
  if (W.size() != expected) {
    throw PolicyError("policy dim " + std::to_string(W.size()) + " does not match pattern " +
                      to_string(pattern) + " (expected " + std::to_string(expected) + ")");
  }
  if (feat_mean.size() != expected || feat_std.size() != expected) {
    throw PolicyError("feat_mean/feat_std must have length " + std::to_string(expected));
  }
  for (const double s : feat_std) {
    if (!(s > 0.0)) throw PolicyError("feat_std entries must be strictly positive");
  }
}

double policy_output(const PolicyParams& params, std::span<const double> state) {
  if (state.size() != params.dim()) throw PolicyError("state dimension mismatch");
  double z = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    z += params.W[i] * ((state[i] - params.feat_mean[i]) / params.feat_std[i]);
  }
  z += params.b;
  return std::max(z, 0.0) + 1.0;
}

PolicyParams parse_policy(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw PolicyError("malformed policy JSON at byte " + std::to_string(err.byte) + ": " +
                      err.what());
  }
  if (!doc.is_object()) throw PolicyError("policy must be a JSON object");

  PolicyParams p;
  const json& pattern = require(doc, "pattern");
  if (!pattern.is_string()) throw PolicyError("policy field 'pattern' must be a string");
  try {
    p.pattern = parse_pattern(pattern.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw PolicyError(err.what());
  }
  const json& dim = require(doc, "dim");
  if (!dim.is_number_integer()) throw PolicyError("policy field 'dim' must be an integer");
  p.W = require_array(doc, "W");
  const json& b = require(doc, "b");
  if (!b.is_number()) throw PolicyError("policy field 'b' must be a number");
  p.b = b.get<double>();
  p.feat_mean = require_array(doc, "feat_mean");
  p.feat_std = require_array(doc, "feat_std");
  const json& agg = require(doc, "v_aggregate");
  if (agg == "max") {
    p.v_aggregate = VAggregate::Max;
  } else if (agg == "avg") {
    p.v_aggregate = VAggregate::Avg;
  } else {
    throw PolicyError("policy field 'v_aggregate' must be \"max\" or \"avg\"");
  }
  if (dim.get<std::int64_t>() != static_cast<std::int64_t>(p.W.size())) {
    throw PolicyError("policy 'dim' disagrees with the length of 'W'");
  }
  p.validate();
  return p;
}

PolicyParams load_policy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PolicyError("cannot open policy file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_policy(buffer.str());
}

std::string dump_policy(const PolicyParams& params) {
  params.validate();
  json doc = {
      {"pattern", to_string(params.pattern)},
      {"dim", params.dim()},
      {"W", params.W},
      {"b", params.b},
      {"feat_mean", params.feat_mean},
      {"feat_std", params.feat_std},
      {"v_aggregate", params.v_aggregate == VAggregate::Max ? "max" : "avg"},
  };
  return doc.dump(2) + "\n";
}

void save_policy(const PolicyParams& params, const std::filesystem::path& path) {
  const std::string text = dump_policy(params);
  std::ofstream out(path);
  if (!out) throw PolicyError("cannot write policy file " + path.string());
  out << text;
}

std::string describe(const WeightPolicy& policy) {
  if (std::holds_alternative<ConstantWeight>(policy)) return "constant";
  if (std::holds_alternative<HeuristicWeight>(policy)) return "heuristic";
  return "learned";
}

}  // namespace wsd
