#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "prismfix/errors.hpp"
#include "prismfix/generate.hpp"
#include "prismfix/graph_io.hpp"

namespace prismfix {
namespace {

// Expected strings below come from networkx's graph6 writer.

TEST(Graph6, DecodesReferenceStrings) {
  EXPECT_EQ(parse_graph6("C~"), families::complete(4));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
  EXPECT_EQ(parse_graph6("Cl").edges(), (EdgeSet{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(parse_graph6("Cl\n"), families::cycle(4));
  EXPECT_EQ(parse_graph6("IheA@GUAo"), families::petersen());
}

TEST(Graph6, EncodesReferenceStrings) {
  EXPECT_EQ(to_graph6(Graph(3)), "B?");
  EXPECT_EQ(to_graph6(families::cycle(4)), "Cl");
  EXPECT_EQ(to_graph6(families::complete(2)), "A_");
  EXPECT_EQ(to_graph6(Graph(2)), "A?");
  EXPECT_EQ(to_graph6(families::petersen()), "IheA@GUAo");
}

TEST(Graph6, RejectsMalformedInput) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no ParseError for " << text;
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0U);
  EXPECT_EQ(offset_of("\x20"), 0U);   // header below '?'
  EXPECT_EQ(offset_of("~"), 0U);      // multi-byte header
  EXPECT_EQ(offset_of("C"), 1U);      // truncated: size 1, need 2
  EXPECT_EQ(offset_of("C~~"), 2U);    // trailing byte
  EXPECT_EQ(offset_of("B\x20"), 1U);  // body byte below '?'
  EXPECT_EQ(offset_of("A`"), 1U);     // padding bit set
}

TEST(Graph6, EncoderRejectsLargeGraphs) {
  EXPECT_THROW(to_graph6(families::cycle(63)), std::invalid_argument);
  EXPECT_NO_THROW(to_graph6(families::cycle(62)));
}

TEST(Graph6, RoundTripsWholeCorpus) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& line : testing::read_lines(testing::data_path("graphs" + std::to_string(n) + ".g6")))
      EXPECT_EQ(to_graph6(parse_graph6(line)), line);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(1 + i % 62, 0.3, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(EdgeList, ParsesTranscriptions) {
  EXPECT_EQ(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0"), families::cycle(4));
  EXPECT_EQ(parse_edge_list("2\n"), Graph(2));
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n0 2"), families::complete(3));
  EXPECT_EQ(parse_edge_list("3 0 1 1 0 0 1").edge_count(), 1U);
}

TEST(EdgeList, Errors) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no ParseError for " << text;
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0U);
  EXPECT_EQ(offset_of("3\n0 3"), 2U);
  EXPECT_EQ(offset_of("3\n1 1"), 1U);
  EXPECT_EQ(offset_of("3\n0"), 1U);
  EXPECT_EQ(offset_of("3\n0 x"), 2U);
  EXPECT_EQ(offset_of("-1"), 0U);
}

TEST(EdgeList, RoundTrip) {
  const Graph p = families::petersen();
  EXPECT_EQ(parse_edge_list(to_edge_list(p)), p);
}

}  // namespace
}  // namespace prismfix
