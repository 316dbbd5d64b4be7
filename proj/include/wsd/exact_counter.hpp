#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsd/adjacency.hpp"
#include "wsd/pattern.hpp"
#include "wsd/stream.hpp"

namespace wsd {

// Exact pattern count on the full dynamic graph. Each event changes the count
// by the number of instances containing the event's edge.
class ExactCounter {
 public:
  explicit ExactCounter(PatternKind kind) : kind_(kind) {}

  /// Applies the event and returns the signed change of the count.
  /// Throws FeasibilityError for an infeasible event.
  std::int64_t apply(const EdgeEvent& ev);

  std::uint64_t count() const { return count_; }
  PatternKind pattern() const { return kind_; }
  const Adjacency& graph() const { return graph_; }

 private:
  PatternKind kind_;
  Adjacency graph_;
  std::uint64_t count_ = 0;
};

/// Exact count after every event: element i is |J^(t)| for t = i + 1.
std::vector<std::uint64_t> exact_trajectory(std::span<const EdgeEvent> events, PatternKind kind);

}  // namespace wsd
