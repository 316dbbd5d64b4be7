#include "wsd/exact_counter.hpp"

namespace wsd {

std::int64_t ExactCounter::apply(const EdgeEvent& ev) {
  const bool present = graph_.contains(ev.edge);
  if (ev.is_insert() == present) {
    throw FeasibilityError(ev.index, ev.is_insert() ? "insert of edge already present"
                                                    : "delete of absent edge");
  }
  // Delta is computed against the graph before the update.
  const auto delta = static_cast<std::int64_t>(count_completions(graph_, ev.edge, kind_));
  if (ev.is_insert()) {
    graph_.add(ev.edge);
    count_ += static_cast<std::uint64_t>(delta);
    return delta;
  }
  graph_.remove(ev.edge);
  count_ -= static_cast<std::uint64_t>(delta);
  return -delta;
}

std::vector<std::uint64_t> exact_trajectory(std::span<const EdgeEvent> events, PatternKind kind) {
  ExactCounter counter(kind);
  std::vector<std::uint64_t> counts;
  counts.reserve(events.size());
  for (const auto& ev : events) {
    counter.apply(ev);
    counts.push_back(counter.count());
  }
  return counts;
}

}  // namespace wsd
