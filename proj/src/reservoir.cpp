#include "wsd/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace wsd {
namespace {

void check_weight(double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("edge weight must be positive and finite");
  }
}

void check_capacity(std::size_t capacity) {
  if (capacity == 0) throw std::invalid_argument("reservoir capacity must be positive");
}

[[noreturn]] void duplicate(const Edge& e) {
  throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") is already in the reservoir");
}

std::vector<SampledEdge> sorted_entries(const IndexedMinHeap<EventIndex, SampledEdge>& heap) {
  std::vector<SampledEdge> entries;
  entries.reserve(heap.size());
  for (const auto& node : heap.nodes()) entries.push_back(node.item);
  std::sort(entries.begin(), entries.end(), [](const SampledEdge& a, const SampledEdge& b) {
    return a.insert_index < b.insert_index;
  });
  return entries;
}

}  // namespace

double inclusion_probability(double weight, double threshold) {
  check_weight(weight);
  if (threshold <= 0.0) return 1.0;
  return std::min(1.0, weight / threshold);
}

// ---------------------------------------------------------------------------

WsdSampler::WsdSampler(std::size_t capacity, std::uint64_t seed)
    : capacity_(capacity), rng_(seed) {
  check_capacity(capacity);
}

InsertResult WsdSampler::insert(const Edge& e, double weight, EventIndex t) {
  check_weight(weight);
  return insert_with_rank(e, weight, weight / rng_.uniform_open_closed(), t);
}

InsertResult WsdSampler::insert_with_rank(const Edge& e, double weight, double rank,
                                          EventIndex t) {
  check_weight(weight);
  if (by_edge_.contains(e)) duplicate(e);
  const SampledEdge candidate{e, weight, rank, t};
  InsertResult result{Admission::Rejected, rank, std::nullopt};

  if (heap_.size() < capacity_) {
    // Case 1: thresholds held.
    if (rank > tau_p_) {
      admit(candidate);
      result.outcome = Admission::AdmittedNonFull;
    }
    return result;
  }

  // Case 2
  tau_p_ = heap_.top().item.rank;
  if (rank > tau_p_) {
    SampledEdge evicted = heap_.pop().item;
    by_edge_.erase(evicted.edge);
    adjacency_.remove(evicted.edge);
    admit(candidate);
    tau_q_ = tau_p_;
    result.outcome = Admission::AdmittedEvict;
    result.evicted = evicted;
  } else if (rank > tau_q_) {
    tau_q_ = rank;
  }
  return result;
}

DeleteOutcome WsdSampler::remove(const Edge& e) {
  auto it = by_edge_.find(e);
  if (it == by_edge_.end()) return DeleteOutcome::NotSampled;
  heap_.erase(it->second);
  by_edge_.erase(it);
  adjacency_.remove(e);
  return DeleteOutcome::Removed;
}

const SampledEdge* WsdSampler::find(const Edge& e) const {
  auto it = by_edge_.find(e);
  return it == by_edge_.end() ? nullptr : heap_.find(it->second);
}

void WsdSampler::admit(const SampledEdge& s) {
  heap_.push(s.insert_index, s);
  by_edge_.emplace(s.edge, s.insert_index);
  adjacency_.add(s.edge);
}

void WsdSampler::write_snapshot(std::ostream& out) const {
  out << std::setprecision(17) << "# tau_p=" << tau_p_ << ",tau_q=" << tau_q_ << '\n'
      << "u,v,weight,rank,insert_index\n";
  for (const auto& s : sorted_entries(heap_)) {
    out << s.edge.u << ',' << s.edge.v << ',' << s.weight << ',' << s.rank << ','
        << s.insert_index << '\n';
  }
}

// ---------------------------------------------------------------------------

PrioritySampler::PrioritySampler(std::size_t capacity, std::uint64_t seed, DeletionMode mode)
    : capacity_(capacity), rng_(seed), mode_(mode) {
  check_capacity(capacity);
}

InsertResult PrioritySampler::insert(const Edge& e, double weight, EventIndex t) {
  check_weight(weight);
  return insert_with_rank(e, weight, weight / rng_.uniform_open_closed(), t);
}

InsertResult PrioritySampler::insert_with_rank(const Edge& e, double weight, double rank,
                                               EventIndex t) {
  check_weight(weight);
  if (by_edge_.contains(e)) duplicate(e);
  const SampledEdge candidate{e, weight, rank, t};
  InsertResult result{Admission::Rejected, rank, std::nullopt};

  auto admit = [&] {
    heap_.push(t, candidate);
    by_edge_.emplace(e, t);
    adjacency_.add(e);
  };

  if (heap_.size() < capacity_) {
    admit();
    result.outcome = Admission::AdmittedNonFull;
    return result;
  }
  const SampledEdge& lowest = heap_.top().item;
  if (candidate < lowest) {
    r_threshold_ = std::max(r_threshold_, rank);
    return result;
  }
  SampledEdge evicted = heap_.pop().item;
  r_threshold_ = std::max(r_threshold_, evicted.rank);
  drop(evicted);
  admit();
  result.outcome = Admission::AdmittedEvict;
  result.evicted = evicted;
  return result;
}

DeleteOutcome PrioritySampler::remove(const Edge& e) {
  auto it = by_edge_.find(e);
  if (it == by_edge_.end()) return DeleteOutcome::NotSampled;
  const EventIndex key = it->second;
  by_edge_.erase(it);
  adjacency_.remove(e);
  if (mode_ == DeletionMode::Tag) {
    tagged_.insert(key);
    return DeleteOutcome::Tagged;
  }
  heap_.erase(key);
  return DeleteOutcome::Removed;
}

const SampledEdge* PrioritySampler::find(const Edge& e) const {
  auto it = by_edge_.find(e);
  return it == by_edge_.end() ? nullptr : heap_.find(it->second);
}

void PrioritySampler::drop(const SampledEdge& s) {
  if (tagged_.erase(s.insert_index) > 0) return;
  by_edge_.erase(s.edge);
  adjacency_.remove(s.edge);
}

void PrioritySampler::write_snapshot(std::ostream& out) const {
  out << std::setprecision(17) << "# r_threshold=" << r_threshold_ << '\n'
      << "u,v,weight,rank,insert_index,tagged\n";
  for (const auto& s : sorted_entries(heap_)) {
    out << s.edge.u << ',' << s.edge.v << ',' << s.weight << ',' << s.rank << ','
        << s.insert_index << ',' << (tagged_.contains(s.insert_index) ? 1 : 0) << '\n';
  }
}

}  // namespace wsd
