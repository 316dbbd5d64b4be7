#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "wsd/stream.hpp"

using namespace wsd;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(ReadStream, ParsesEventsWithOneBasedIndices) {
  const auto path = write_temp("wsd_read_ok.txt", "+ 1 2\n+ 2 3\n- 1 2\n");
  const auto events = read_stream(path);
  const EventStream expected = {
      {Op::Insert, Edge(1, 2), 1}, {Op::Insert, Edge(2, 3), 2}, {Op::Delete, Edge(1, 2), 3}};
  EXPECT_EQ(events, expected);
}

TEST(ReadStream, DeleteBeforeInsertIsInfeasibleAtEventOne) {
  const auto path = write_temp("wsd_read_bad.txt", "- 1 2\n");
  try {
    read_stream(path);
    FAIL() << "expected FeasibilityError";
  } catch (const FeasibilityError& err) {
    EXPECT_EQ(err.index(), 1u);
  }
}

TEST(ReadStream, SelfLoopIsRejected) {
  std::istringstream in("+ 3 3\n");
  try {
    parse_stream(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 1u);
  }
}

TEST(ReadStream, ReportsLineNumbersAndSkipsComments) {
  std::istringstream in("# header\n+ 1 2\n\n+ 2 x\n");
  try {
    parse_stream(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 4u);
  }
  std::istringstream bad_op("* 1 2\n");
  EXPECT_THROW(parse_stream(bad_op), ParseError);
  std::istringstream extra("+ 1 2 3\n");
  EXPECT_THROW(parse_stream(extra), ParseError);
}

TEST(ReadStream, DoubleInsertIsInfeasible) {
  std::istringstream in("+ 1 2\n+ 2 1\n");
  const auto events = parse_stream(in);
  try {
    check_feasible(events);
    FAIL();
  } catch (const FeasibilityError& err) {
    EXPECT_EQ(err.index(), 2u);
  }
}

TEST(ReadStream, MissingFileThrows) {
  EXPECT_THROW(read_stream("/nonexistent/wsd/stream.txt"), std::runtime_error);
}

TEST(WriteStream, RoundTripsRandomStreams) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto events = testkit::random_dynamic_stream(12, 80, 0.3, seed);
    std::stringstream buf;
    write_stream(buf, events);
    EXPECT_EQ(parse_stream(buf), events) << "seed " << seed;
  }
}

TEST(EdgeList, CanonicalizesAndDropsLoopsAndDuplicates) {
  std::istringstream in("# comment\n% matrix-market style comment\n2 1\n1 2\n3 3\n4 2 17\n");
  const auto edges = parse_edge_list(in);
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[0], Edge(1, 2));
  EXPECT_EQ(edges[1], Edge(2, 4));
}

TEST(Edge, IsCanonicalAndRejectsSelfLoops) {
  const Edge e(7, 3);
  EXPECT_EQ(e.u, 3u);
  EXPECT_EQ(e.v, 7u);
  EXPECT_EQ(e.other(3), 7u);
  EXPECT_THROW(Edge(5, 5), std::invalid_argument);
}
