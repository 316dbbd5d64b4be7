#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "wsd/adjacency.hpp"
#include "wsd/indexed_heap.hpp"
#include "wsd/rng.hpp"
#include "wsd/types.hpp"

namespace wsd {

/// A reservoir entry. rank = weight / u with u in (0,1], so rank >= weight.
struct SampledEdge {
  Edge edge;
  double weight = 1.0;
  double rank = 0.0;
  EventIndex insert_index = 0;

  /// Min-heap order: lower rank first, ties evict the older insertion.
  friend bool operator<(const SampledEdge& a, const SampledEdge& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.insert_index < b.insert_index;
  }
};

enum class Admission { AdmittedNonFull, AdmittedEvict, Rejected };

struct InsertResult {
  Admission outcome = Admission::Rejected;
  double rank = 0.0;
  std::optional<SampledEdge> evicted;
};

enum class DeleteOutcome { Removed, Tagged, NotSampled };

/// P[w/u > tau_q] = min{1, w / tau_q}; 1 while tau_q is 0.
/// Throws std::invalid_argument for non-positive or non-finite w.
double inclusion_probability(double weight, double threshold);

// Weighted sampling with deletions. tau_p gates admission, tau_q anchors the
// inclusion probability of every edge currently alive.
class WsdSampler {
 public:
  WsdSampler(std::size_t capacity, std::uint64_t seed);

  /// Draws u in (0,1] and sets rank = weight / u.
  InsertResult insert(const Edge& e, double weight, EventIndex t);
  /// Same admission logic with the rank supplied by the caller.
  InsertResult insert_with_rank(const Edge& e, double weight, double rank, EventIndex t);
  /// Thresholds are left untouched.
  DeleteOutcome remove(const Edge& e);

  double inclusion_prob(double weight) const { return inclusion_probability(weight, tau_q_); }
  const SampledEdge* find(const Edge& e) const;
  bool contains(const Edge& e) const { return by_edge_.contains(e); }
  const Adjacency& adjacency() const { return adjacency_; }

  double tau_p() const { return tau_p_; }
  double tau_q() const { return tau_q_; }
  std::size_t size() const { return heap_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return heap_.size() >= capacity_; }

  /// CSV `u,v,weight,rank,insert_index` under a `# tau_p=..,tau_q=..` line.
  void write_snapshot(std::ostream& out) const;

 private:
  void admit(const SampledEdge& s);

  std::size_t capacity_;
  Rng rng_;
  IndexedMinHeap<EventIndex, SampledEdge> heap_;
  std::unordered_map<Edge, EventIndex, EdgeHash> by_edge_;
  Adjacency adjacency_;
  double tau_p_ = 0.0;
  double tau_q_ = 0.0;
};

enum class DeletionMode {
  Tag,     // GPS-A: keep the entry, hide it from estimation
  Remove,  // naive GPS: drop it and free the slot (biased)
};

// Priority sampling (GPS). With DeletionMode::Tag it is GPS-A; with Remove it
// is the naive adaptation that frees space without any threshold discipline.
// On insertion-only streams both behave exactly like GPS.
class PrioritySampler {
 public:
  PrioritySampler(std::size_t capacity, std::uint64_t seed, DeletionMode mode);

  InsertResult insert(const Edge& e, double weight, EventIndex t);
  InsertResult insert_with_rank(const Edge& e, double weight, double rank, EventIndex t);
  DeleteOutcome remove(const Edge& e);

  double inclusion_prob(double weight) const {
    return inclusion_probability(weight, r_threshold_);
  }
  /// Untagged entries only.
  const SampledEdge* find(const Edge& e) const;
  bool contains(const Edge& e) const { return by_edge_.contains(e); }
  /// Untagged entries only.
  const Adjacency& adjacency() const { return adjacency_; }

  /// Running (M+1)-th largest rank seen: the max rank ever discarded.
  double r_threshold() const { return r_threshold_; }
  std::size_t size() const { return heap_.size(); }
  std::size_t tagged_count() const { return tagged_.size(); }
  std::size_t capacity() const { return capacity_; }
  DeletionMode mode() const { return mode_; }

  /// CSV `u,v,weight,rank,insert_index,tagged` under a `# r_threshold=..` line.
  void write_snapshot(std::ostream& out) const;

 private:
  void drop(const SampledEdge& s);

  std::size_t capacity_;
  Rng rng_;
  DeletionMode mode_;
  IndexedMinHeap<EventIndex, SampledEdge> heap_;
  std::unordered_map<Edge, EventIndex, EdgeHash> by_edge_;
  std::unordered_set<EventIndex> tagged_;
  Adjacency adjacency_;
  double r_threshold_ = 0.0;
};

}  // namespace wsd
