#include <gtest/gtest.h>

#include "deckwork/enumerate.hpp"
#include "deckwork/error.hpp"
#include "deckwork/graph6.hpp"

using namespace deckwork;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(encode_g6(empty_graph(0)), "?");
  EXPECT_EQ(encode_g6(complete_graph(3)), "Bw");
  EXPECT_EQ(encode_g6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_g6(empty_graph(1)), "@");
  EXPECT_EQ(encode_d6(empty_graph(0, GraphKind::kDirected)), "&?");
  EXPECT_EQ(encode_d6(Graph::from_edges(GraphKind::kDirected, 2, {{0, 1}})), "&AO");
  EXPECT_EQ(encode_d6(Graph::from_edges(GraphKind::kDirected, 2, {{0, 1}, {1, 0}})), "&AW");
}

TEST(Graph6, DecodeRejectsBadInput) {
  EXPECT_THROW(decode_g6(""), Error);
  EXPECT_THROW(decode_g6("B"), Error);       // truncated
  EXPECT_THROW(decode_g6("Bww"), Error);     // trailing
  EXPECT_THROW(decode_g6("Bx"), Error);      // nonzero padding
  EXPECT_THROW(decode_g6("B\x01"), Error);   // byte out of range
  EXPECT_THROW(decode_d6("AO"), Error);      // missing '&'
  EXPECT_THROW(decode_d6("&A_"), Error);     // loop bit (0,0)
  EXPECT_THROW(decode_token("K~~~~~~~~~~~"), Error);  // n = 12
}

TEST(Graph6, RoundTripAllClasses) {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_classes({GraphKind::kUndirected, n})) {
      EXPECT_EQ(decode_g6(encode_g6(g)), g);
      EXPECT_EQ(decode_token(encode_token(g)), g);
    }
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : enumerate_classes({GraphKind::kDirected, n})) {
      EXPECT_EQ(decode_d6(encode_d6(g)), g);
      EXPECT_EQ(decode_token(encode_token(g)), g);
    }
}
