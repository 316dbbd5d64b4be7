#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>

#include "wsd/types.hpp"

namespace wsd {

// Undirected adjacency index. Used both for the full graph (exact counter)
// and for the edges currently held by a sampler.
class Adjacency {
 public:
  using NeighborSet = std::unordered_set<Vertex>;

  /// Returns false if the edge was already present.
  bool add(const Edge& e) {
    const bool inserted = adj_[e.u].insert(e.v).second;
    if (inserted) {
      adj_[e.v].insert(e.u);
      ++edges_;
    }
    return inserted;
  }

  /// Returns false if the edge was absent.
  bool remove(const Edge& e) {
    auto it = adj_.find(e.u);
    if (it == adj_.end() || it->second.erase(e.v) == 0) return false;
    if (it->second.empty()) adj_.erase(it);
    auto jt = adj_.find(e.v);
    jt->second.erase(e.u);
    if (jt->second.empty()) adj_.erase(jt);
    --edges_;
    return true;
  }

  bool contains(Vertex a, Vertex b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.contains(b);
  }
  bool contains(const Edge& e) const { return contains(e.u, e.v); }

  const NeighborSet& neighbors(Vertex x) const {
    auto it = adj_.find(x);
    return it == adj_.end() ? empty_ : it->second;
  }

  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  std::size_t edge_count() const { return edges_; }
  std::size_t vertex_count() const { return adj_.size(); }

  void clear() {
    adj_.clear();
    edges_ = 0;
  }

 private:
  std::unordered_map<Vertex, NeighborSet> adj_;
  std::size_t edges_ = 0;
  inline static const NeighborSet empty_{};
};

}  // namespace wsd
