#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wsd/types.hpp"

namespace wsd {

/// Malformed line in an event or edge-list file. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Insert of a present edge or delete of an absent one.
class FeasibilityError : public std::runtime_error {
 public:
  FeasibilityError(EventIndex index, const std::string& what)
      : std::runtime_error("event " + std::to_string(index) + ": " + what), index_(index) {}
  EventIndex index() const { return index_; }

 private:
  EventIndex index_;
};

using EventStream = std::vector<EdgeEvent>;

// Event file: one `<op> <u> <v>` per line, op in {+,-}; `#` starts a comment
// line. Indices are assigned 1, 2, ... in file order.
EventStream parse_stream(std::istream& in);
EventStream read_stream(const std::filesystem::path& path);
void write_stream(std::ostream& out, std::span<const EdgeEvent> events);
void write_stream(const std::filesystem::path& path, std::span<const EdgeEvent> events);

/// Raw `<u> <v>` edge list. Directions are dropped; self-loops and repeated
/// edges are skipped so the result is a simple graph in first-seen order.
std::vector<Edge> parse_edge_list(std::istream& in);
std::vector<Edge> read_edge_list(const std::filesystem::path& path);

/// Replays the stream and throws FeasibilityError at the first infeasible
/// event. Also checks that indices run 1, 2, ...
void check_feasible(std::span<const EdgeEvent> events);

/// Builds an insertion-only stream from an edge sequence.
EventStream insertion_stream(std::span<const Edge> edges);

enum class Ordering { Natural, UniformAtRandom, RandomBfs };

std::vector<Edge> apply_ordering(std::span<const Edge> edges, Ordering ordering,
                                 std::uint64_t seed);

struct InsertOnly {};
struct MassiveDeletion {
  double alpha = 0.0;   // probability a deletion batch follows an insertion
  double beta_m = 0.0;  // per-alive-edge deletion probability inside a batch
};
struct LightDeletion {
  double beta_l = 0.0;
};
using Scenario = std::variant<InsertOnly, MassiveDeletion, LightDeletion>;

struct StreamConfig {
  Scenario scenario = InsertOnly{};
  Ordering ordering = Ordering::Natural;
  std::uint64_t seed = 0;
};

EventStream gen_massive(std::span<const Edge> edges, double alpha, double beta_m,
                        std::uint64_t seed);
EventStream gen_light(std::span<const Edge> edges, double beta_l, std::uint64_t seed);

/// One-parameter forward-burning Forest Fire graph on vertices 1..n, edges in
/// creation order.
std::vector<Edge> gen_forest_fire(std::size_t n, double p, std::uint64_t seed);

/// Orders `edges` and adds deletions according to `config`.
EventStream make_stream(std::span<const Edge> edges, const StreamConfig& config);

Ordering parse_ordering(const std::string& name);
std::string to_string(Ordering ordering);

}  // namespace wsd
