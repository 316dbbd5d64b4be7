#include "wsd/pattern.hpp"

#include <stdexcept>

namespace wsd {

PatternKind parse_pattern(const std::string& name) {
  if (name == "wedge") return PatternKind::Wedge;
  if (name == "triangle") return PatternKind::Triangle;
  if (name == "fourclique" || name == "4clique" || name == "4-clique") {
    return PatternKind::FourClique;
  }
  throw std::invalid_argument("unknown pattern '" + name + "' (wedge|triangle|fourclique)");
}

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Wedge: return "wedge";
    case PatternKind::Triangle: return "triangle";
    case PatternKind::FourClique: return "fourclique";
  }
  return "?";
}

std::size_t count_completions(const Adjacency& adj, const Edge& e, PatternKind kind) {
  switch (kind) {
    case PatternKind::Wedge: {
      // every sampled edge at u or v other than e itself
      const std::size_t present = adj.contains(e) ? 2 : 0;
      return adj.degree(e.u) + adj.degree(e.v) - present;
    }
    case PatternKind::Triangle: {
      const auto& nu = adj.neighbors(e.u);
      const auto& nv = adj.neighbors(e.v);
      const auto& small = nu.size() <= nv.size() ? nu : nv;
      const auto& large = nu.size() <= nv.size() ? nv : nu;
      std::size_t count = 0;
      for (const Vertex w : small) count += large.contains(w) ? 1 : 0;
      return count;
    }
    case PatternKind::FourClique: {
      std::size_t count = 0;
      for_each_completion(adj, e, kind, [&](std::span<const Edge>) { ++count; });
      return count;
    }
  }
  return 0;
}

}  // namespace wsd
