#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "wsd/rng.hpp"
#include "wsd/stream.hpp"

namespace wsd {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
  }
}

std::vector<Edge> random_bfs_order(std::span<const Edge> edges, std::uint64_t seed) {
  std::map<Vertex, std::vector<Vertex>> adjacency;
  for (const auto& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<Vertex> starts;
  starts.reserve(adjacency.size());
  for (auto& [vertex, neighbors] : adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
    starts.push_back(vertex);
  }
  // A seeded shuffle; the first unvisited vertex in it is a uniform pick
  // among the unvisited ones.
  Rng rng(seed);
  for (std::size_t i = starts.size(); i > 1; --i) {
    std::swap(starts[i - 1], starts[rng.below(i)]);
  }

  std::vector<Edge> order;
  order.reserve(edges.size());
  std::unordered_set<Vertex> visited;
  std::unordered_set<Edge, EdgeHash> emitted;
  std::vector<Vertex> queue;
  for (const Vertex start : starts) {
    if (visited.contains(start)) continue;
    visited.insert(start);
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const Vertex y : adjacency[x]) {
        const Edge e(x, y);
        if (emitted.insert(e).second) order.push_back(e);
        if (visited.insert(y).second) queue.push_back(y);
      }
    }
  }
  return order;
}

}  // namespace

std::vector<Edge> apply_ordering(std::span<const Edge> edges, Ordering ordering,
                                 std::uint64_t seed) {
  switch (ordering) {
    case Ordering::Natural:
      return {edges.begin(), edges.end()};
    case Ordering::UniformAtRandom: {
      std::vector<Edge> out(edges.begin(), edges.end());
      Rng rng(seed);
      for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
      return out;
    }
    case Ordering::RandomBfs:
      return random_bfs_order(edges, seed);
  }
  return {};
}

EventStream gen_massive(std::span<const Edge> edges, double alpha, double beta_m,
                        std::uint64_t seed) {
  require_probability(alpha, "alpha");
  require_probability(beta_m, "beta_m");
  Rng rng(seed);
  EventStream events;
  events.reserve(edges.size());
  std::set<Edge> alive;  // ordered: batches delete in canonical edge order
  std::vector<Edge> doomed;
  for (const auto& e : edges) {
    events.push_back(EdgeEvent{Op::Insert, e, events.size() + 1});
    alive.insert(e);
    if (!rng.bernoulli(alpha)) continue;
    doomed.clear();
    for (const auto& a : alive) {
      if (rng.bernoulli(beta_m)) doomed.push_back(a);
    }
    for (const auto& d : doomed) {
      alive.erase(d);
      events.push_back(EdgeEvent{Op::Delete, d, events.size() + 1});
    }
  }
  return events;
}

EventStream gen_light(std::span<const Edge> edges, double beta_l, std::uint64_t seed) {
  require_probability(beta_l, "beta_l");
  Rng rng(seed);
  const std::size_t m = edges.size();
  // deletions_after[s]: edges deleted right after the s-th insertion (0-based).
  std::vector<std::vector<std::size_t>> deletions_after(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rng.bernoulli(beta_l)) continue;
    const std::size_t slot = i + static_cast<std::size_t>(rng.below(m - i));
    deletions_after[slot].push_back(i);
  }
  EventStream events;
  events.reserve(m);
  for (std::size_t s = 0; s < m; ++s) {
    events.push_back(EdgeEvent{Op::Insert, edges[s], events.size() + 1});
    for (const std::size_t i : deletions_after[s]) {
      events.push_back(EdgeEvent{Op::Delete, edges[i], events.size() + 1});
    }
  }
  return events;
}

std::vector<Edge> gen_forest_fire(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("forest fire needs n >= 2");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("forest fire needs p in [0,1)");
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> adjacency(n);
  std::vector<Edge> edges;
  std::vector<std::size_t> burned_stamp(n, 0);  // == x + 1 when burned for arrival x
  std::vector<std::size_t> queue;
  std::vector<std::size_t> candidates;

  auto link = [&](std::size_t a, std::size_t b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
    edges.emplace_back(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
  };

  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t stamp = x + 1;
    burned_stamp[x] = stamp;
    const auto ambassador = static_cast<std::size_t>(rng.below(x));
    burned_stamp[ambassador] = stamp;
    link(ambassador, x);
    queue.assign(1, ambassador);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t y = queue[head];
      const std::uint64_t spread = rng.geometric(1.0 - p);
      if (spread == 0) continue;
      candidates.clear();
      for (const std::size_t z : adjacency[y]) {
        if (burned_stamp[z] != stamp) candidates.push_back(z);
      }
      const std::size_t take = std::min<std::size_t>(spread, candidates.size());
      for (std::size_t i = 0; i < take; ++i) {
        std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
        const std::size_t z = candidates[i];
        burned_stamp[z] = stamp;
        link(z, x);
        queue.push_back(z);
      }
    }
  }
  return edges;
}

EventStream make_stream(std::span<const Edge> edges, const StreamConfig& config) {
  const auto ordered = apply_ordering(edges, config.ordering, config.seed);
  const std::uint64_t scenario_seed = config.seed ^ 0xD1B54A32D192ED03ULL;
  return std::visit(
      [&](const auto& scenario) -> EventStream {
        using T = std::decay_t<decltype(scenario)>;
        if constexpr (std::is_same_v<T, InsertOnly>) {
          return insertion_stream(ordered);
        } else if constexpr (std::is_same_v<T, MassiveDeletion>) {
          return gen_massive(ordered, scenario.alpha, scenario.beta_m, scenario_seed);
        } else {
          return gen_light(ordered, scenario.beta_l, scenario_seed);
        }
      },
      config.scenario);
}

}  // namespace wsd
