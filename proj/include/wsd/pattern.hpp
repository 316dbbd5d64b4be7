#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wsd/adjacency.hpp"
#include "wsd/types.hpp"

namespace wsd {

enum class PatternKind { Wedge, Triangle, FourClique };

/// Number of edges |H| of the pattern.
constexpr std::size_t edge_count(PatternKind kind) {
  switch (kind) {
    case PatternKind::Wedge: return 2;
    case PatternKind::Triangle: return 3;
    case PatternKind::FourClique: return 6;
  }
  return 0;
}

PatternKind parse_pattern(const std::string& name);
std::string to_string(PatternKind kind);

struct InstanceEdge {
  Edge edge;
  EventIndex insert_index = 0;
};

/// One pattern occurrence; edges ascend by insertion index and the last one
/// is the triggering edge.
struct Instance {
  std::vector<InstanceEdge> edges;
};

/// Calls `visit(std::span<const Edge> others)` once per pattern instance that
/// `e` completes in `adj`. `e` is treated as present whether or not `adj`
/// holds it; `others` are the |H|-1 remaining edges, all present in `adj`.
template <class Visitor>
void for_each_completion(const Adjacency& adj, const Edge& e, PatternKind kind,
                         Visitor&& visit) {
  const Vertex u = e.u;
  const Vertex v = e.v;
  switch (kind) {
    case PatternKind::Wedge: {
      std::array<Edge, 1> others;
      for (const Vertex a : adj.neighbors(u)) {
        if (a == v) continue;
        others[0] = Edge(u, a);
        visit(std::span<const Edge>(others));
      }
      for (const Vertex b : adj.neighbors(v)) {
        if (b == u) continue;
        others[0] = Edge(v, b);
        visit(std::span<const Edge>(others));
      }
      break;
    }
    case PatternKind::Triangle: {
      const auto& nu = adj.neighbors(u);
      const auto& nv = adj.neighbors(v);
      const bool u_smaller = nu.size() <= nv.size();
      const auto& small = u_smaller ? nu : nv;
      const auto& large = u_smaller ? nv : nu;
      std::array<Edge, 2> others;
      for (const Vertex w : small) {
        if (!large.contains(w)) continue;
        others = {Edge(u, w), Edge(v, w)};
        visit(std::span<const Edge>(others));
      }
      break;
    }
    case PatternKind::FourClique: {
      const auto& nu = adj.neighbors(u);
      const auto& nv = adj.neighbors(v);
      const bool u_smaller = nu.size() <= nv.size();
      const auto& small = u_smaller ? nu : nv;
      const auto& large = u_smaller ? nv : nu;
      std::vector<Vertex> common;
      for (const Vertex w : small) {
        if (large.contains(w)) common.push_back(w);
      }
      std::sort(common.begin(), common.end());
      std::array<Edge, 5> others;
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const Vertex w = common[i];
          const Vertex x = common[j];
          if (!adj.contains(w, x)) continue;
          others = {Edge(u, w), Edge(u, x), Edge(v, w), Edge(v, x), Edge(w, x)};
          visit(std::span<const Edge>(others));
        }
      }
      break;
    }
  }
}

/// Number of instances `e` completes in `adj`, without materializing them.
std::size_t count_completions(const Adjacency& adj, const Edge& e, PatternKind kind);

/// Materializes every completed instance. `index_of(edge)` gives the
/// insertion index of a sampled edge; `e` itself carries `e_index`.
template <class IndexOf>
std::vector<Instance> enumerate_completions(const Adjacency& adj, const Edge& e,
                                            PatternKind kind, EventIndex e_index,
                                            IndexOf&& index_of) {
  std::vector<Instance> out;
  for_each_completion(adj, e, kind, [&](std::span<const Edge> others) {
    Instance inst;
    inst.edges.reserve(others.size() + 1);
    for (const auto& o : others) inst.edges.push_back({o, index_of(o)});
    std::sort(inst.edges.begin(), inst.edges.end(),
              [](const InstanceEdge& a, const InstanceEdge& b) {
                return a.insert_index < b.insert_index;
              });
    inst.edges.push_back({e, e_index});
    out.push_back(std::move(inst));
  });
  return out;
}

}  // namespace wsd
