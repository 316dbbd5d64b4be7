#include "wsd/stream.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

namespace wsd {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

Vertex parse_vertex(std::string_view field, std::size_t line_no) {
  Vertex value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "invalid vertex id '" + std::string(field) + "'");
  }
  return value;
}

bool is_blank_or_comment(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

EventStream parse_stream(std::istream& in) {
  EventStream events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (is_blank_or_comment(fields)) continue;
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected '<op> <u> <v>', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    Op op;
    if (fields[0] == "+") {
      op = Op::Insert;
    } else if (fields[0] == "-") {
      op = Op::Delete;
    } else {
      throw ParseError(line_no, "unknown op '" + std::string(fields[0]) + "'");
    }
    const Vertex a = parse_vertex(fields[1], line_no);
    const Vertex b = parse_vertex(fields[2], line_no);
    if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
    events.push_back(EdgeEvent{op, Edge(a, b), events.size() + 1});
  }
  return events;
}

EventStream read_stream(const std::filesystem::path& path) {
  auto in = open_input(path);
  EventStream events = parse_stream(in);
  check_feasible(events);
  return events;
}

void write_stream(std::ostream& out, std::span<const EdgeEvent> events) {
  for (const auto& ev : events) {
    out << (ev.is_insert() ? '+' : '-') << ' ' << ev.edge.u << ' ' << ev.edge.v << '\n';
  }
}

void write_stream(const std::filesystem::path& path, std::span<const EdgeEvent> events) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_stream(out, events);
}

std::vector<Edge> parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_set<Edge, EdgeHash> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (is_blank_or_comment(fields) || fields.front().front() == '%') continue;
    if (fields.size() < 2) throw ParseError(line_no, "expected '<u> <v>'");
    const Vertex a = parse_vertex(fields[0], line_no);
    const Vertex b = parse_vertex(fields[1], line_no);
    if (a == b) continue;
    const Edge e(a, b);
    if (seen.insert(e).second) edges.push_back(e);
  }
  return edges;
}

std::vector<Edge> read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

void check_feasible(std::span<const EdgeEvent> events) {
  std::unordered_set<Edge, EdgeHash> alive;
  EventIndex expected = 1;
  for (const auto& ev : events) {
    if (ev.index != expected) {
      throw FeasibilityError(ev.index, "expected event index " + std::to_string(expected));
    }
    ++expected;
    if (ev.is_insert()) {
      if (!alive.insert(ev.edge).second) {
        throw FeasibilityError(ev.index, "insert of edge already present");
      }
    } else if (alive.erase(ev.edge) == 0) {
      throw FeasibilityError(ev.index, "delete of absent edge");
    }
  }
}

EventStream insertion_stream(std::span<const Edge> edges) {
  EventStream events;
  events.reserve(edges.size());
  for (const auto& e : edges) events.push_back(EdgeEvent{Op::Insert, e, events.size() + 1});
  return events;
}

Ordering parse_ordering(const std::string& name) {
  if (name == "natural") return Ordering::Natural;
  if (name == "uar") return Ordering::UniformAtRandom;
  if (name == "rbfs") return Ordering::RandomBfs;
  throw std::invalid_argument("unknown ordering '" + name + "' (natural|uar|rbfs)");
}

std::string to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::Natural: return "natural";
    case Ordering::UniformAtRandom: return "uar";
    case Ordering::RandomBfs: return "rbfs";
  }
  return "?";
}

}  // namespace wsd
