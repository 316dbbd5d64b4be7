#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wsd {

// Binary min-heap with a key -> slot side map, so any item can be found or
// erased in O(log n). Items are ordered by `operator<`.
template <class Key, class Item, class Hash = std::hash<Key>>
class IndexedMinHeap {
 public:
  struct Node {
    Key key;
    Item item;
  };

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(const Key& key) const { return slot_.contains(key); }

  void push(const Key& key, Item item) {
    if (contains(key)) throw std::invalid_argument("duplicate heap key");
    nodes_.push_back(Node{key, std::move(item)});
    slot_.emplace(key, nodes_.size() - 1);
    sift_up(nodes_.size() - 1);
  }

  const Node& top() const { return nodes_.front(); }

  Node pop() { return take(0); }

  std::optional<Node> erase(const Key& key) {
    auto it = slot_.find(key);
    if (it == slot_.end()) return std::nullopt;
    return take(it->second);
  }

  const Item* find(const Key& key) const {
    auto it = slot_.find(key);
    return it == slot_.end() ? nullptr : &nodes_[it->second].item;
  }

  /// Heap-ordered storage, for snapshots.
  std::span<const Node> nodes() const { return nodes_; }

  void clear() {
    nodes_.clear();
    slot_.clear();
  }

 private:
  Node take(std::size_t i) {
    Node out = std::move(nodes_[i]);
    slot_.erase(out.key);
    const std::size_t last = nodes_.size() - 1;
    if (i != last) {
      nodes_[i] = std::move(nodes_[last]);
      slot_[nodes_[i].key] = i;
      nodes_.pop_back();
      // The moved-in node may need to go either way.
      if (i > 0 && nodes_[i].item < nodes_[(i - 1) / 2].item) {
        sift_up(i);
      } else {
        sift_down(i);
      }
    } else {
      nodes_.pop_back();
    }
    return out;
  }

  void place(std::size_t i, Node node) {
    slot_[node.key] = i;
    nodes_[i] = std::move(node);
  }

  void sift_up(std::size_t i) {
    Node node = std::move(nodes_[i]);
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!(node.item < nodes_[parent].item)) break;
      place(i, std::move(nodes_[parent]));
      i = parent;
    }
    place(i, std::move(node));
  }

  void sift_down(std::size_t i) {
    const std::size_t n = nodes_.size();
    Node node = std::move(nodes_[i]);
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && nodes_[child + 1].item < nodes_[child].item) ++child;
      if (!(nodes_[child].item < node.item)) break;
      place(i, std::move(nodes_[child]));
      i = child;
    }
    place(i, std::move(node));
  }

  std::vector<Node> nodes_;
  std::unordered_map<Key, std::size_t, Hash> slot_;
};

}  // namespace wsd
