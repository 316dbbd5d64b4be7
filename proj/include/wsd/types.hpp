#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace wsd {

using Vertex = std::uint64_t;
using EventIndex = std::uint64_t;

/// Undirected simple edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;

  /// Canonicalizes the endpoint order. Throws on self-loops.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) {
      throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
  }

  /// The endpoint that is not `x`. `x` must be u or v.
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    // splitmix64 over the packed endpoints
    std::uint64_t x = e.u * 0x9E3779B97F4A7C15ULL ^ (e.v + 0x632BE59BD9B4E019ULL);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

enum class Op : std::uint8_t { Insert, Delete };

/// One stream element. `index` is the 1-based position t in the stream.
struct EdgeEvent {
  Op op = Op::Insert;
  Edge edge;
  EventIndex index = 0;

  bool is_insert() const { return op == Op::Insert; }

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

}  // namespace wsd
