#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wsd/adjacency.hpp"
#include "wsd/pattern.hpp"

namespace wsd {

/// [|H_k|, |N_k(u)|, |N_k(v)|, v_1, ..., v_|H|]
using StateVector = std::vector<double>;

/// How per-position arrival indices are folded over the completed instances.
enum class VAggregate { Max, Avg };

constexpr std::size_t state_dim(PatternKind kind) { return edge_count(kind) + 3; }

/// Computes the MDP state of inserting `e` at event `t` against the sampled
/// graph `adj`. Must be called before the sampler sees `e`.
/// `index_of(edge)` returns the insertion index of a sampled edge.
template <class IndexOf>
StateVector compute_state(const Adjacency& adj, const Edge& e, PatternKind kind, EventIndex t,
                          IndexOf&& index_of, VAggregate aggregate = VAggregate::Max) {
  const std::size_t h = edge_count(kind);
  StateVector s(state_dim(kind), 0.0);
  std::vector<double> positions(h, 0.0);
  std::array<EventIndex, 5> order{};
  std::size_t instances = 0;
  for_each_completion(adj, e, kind, [&](std::span<const Edge> others) {
    for (std::size_t j = 0; j < others.size(); ++j) order[j] = index_of(others[j]);
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(others.size()));
    for (std::size_t j = 0; j < others.size(); ++j) {
      const auto idx = static_cast<double>(order[j]);
      positions[j] = aggregate == VAggregate::Max ? std::max(positions[j], idx)
                                                  : positions[j] + idx;
    }
    ++instances;
  });
  s[0] = static_cast<double>(instances);
  s[1] = static_cast<double>(adj.degree(e.u));
  s[2] = static_cast<double>(adj.degree(e.v));
  if (instances == 0) return s;
  for (std::size_t j = 0; j + 1 < h; ++j) {
    s[3 + j] = aggregate == VAggregate::Max ? positions[j]
                                            : positions[j] / static_cast<double>(instances);
  }
  s[3 + h - 1] = static_cast<double>(t);
  return s;
}

/// Sampler overload: uses the sampler's live adjacency and stored indices.
template <class Sampler>
StateVector compute_state(const Sampler& sampler, const Edge& e, PatternKind kind, EventIndex t,
                          VAggregate aggregate = VAggregate::Max) {
  return compute_state(
      sampler.adjacency(), e, kind, t,
      [&](const Edge& o) { return sampler.find(o)->insert_index; }, aggregate);
}

class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the linear actor: weight = ReLU(W . (s - mean) / std + b) + 1.
struct PolicyParams {
  PatternKind pattern = PatternKind::Triangle;
  std::vector<double> W;
  double b = 0.0;
  std::vector<double> feat_mean;
  std::vector<double> feat_std;
  VAggregate v_aggregate = VAggregate::Max;

  std::size_t dim() const { return W.size(); }

  /// All-zero weights with identity feature scaling.
  static PolicyParams zeros(PatternKind kind);

  /// Throws PolicyError on a dimension mismatch or non-positive feat_std.
  void validate() const;

  friend bool operator==(const PolicyParams&, const PolicyParams&) = default;
};

/// Raw actor output for a state. Always >= 1.
double policy_output(const PolicyParams& params, std::span<const double> state);

/// 9 * |H(e)| + 1
inline double heuristic_weight(std::size_t completions) {
  return 9.0 * static_cast<double>(completions) + 1.0;
}

// JSON policy file:
// {"pattern": "wedge|triangle|fourclique", "dim": int, "W": [...], "b": float,
//  "feat_mean": [...], "feat_std": [...], "v_aggregate": "max"|"avg"}
PolicyParams parse_policy(std::string_view json);
PolicyParams load_policy(const std::filesystem::path& path);
std::string dump_policy(const PolicyParams& params);
void save_policy(const PolicyParams& params, const std::filesystem::path& path);

struct ConstantWeight {};
struct HeuristicWeight {};
struct LearnedWeight {
  PolicyParams params;
};
using WeightPolicy = std::variant<ConstantWeight, HeuristicWeight, LearnedWeight>;

std::string describe(const WeightPolicy& policy);

template <class Sampler>
double weight_constant(const Edge&, const Sampler&) {
  return 1.0;
}

template <class Sampler>
double weight_heuristic(const Edge& e, const Sampler& sampler, PatternKind kind) {
  return heuristic_weight(count_completions(sampler.adjacency(), e, kind));
}

template <class Sampler>
double weight_learned(const Edge& e, const Sampler& sampler, PatternKind kind,
                      const PolicyParams& params, EventIndex t) {
  if (params.pattern != kind || params.dim() != state_dim(kind)) {
    throw PolicyError("policy dimension " + std::to_string(params.dim()) +
                      " does not match pattern " + to_string(kind));
  }
  return policy_output(params, compute_state(sampler, e, kind, t, params.v_aggregate));
}

/// Weight for inserting `e` at event `t`, consulted before the sampler changes.
template <class Sampler>
double choose_weight(const WeightPolicy& policy, const Edge& e, const Sampler& sampler,
                     PatternKind kind, EventIndex t) {
  if (std::holds_alternative<ConstantWeight>(policy)) return weight_constant(e, sampler);
  if (std::holds_alternative<HeuristicWeight>(policy)) return weight_heuristic(e, sampler, kind);
  return weight_learned(e, sampler, kind, std::get<LearnedWeight>(policy).params, t);
}

}  // namespace wsd
