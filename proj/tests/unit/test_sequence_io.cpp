#include <gtest/gtest.h>

#include <sstream>

#include "deckwork/error.hpp"
#include "deckwork/sequence_io.hpp"

using namespace deckwork;

TEST(SequenceIo, ParseAndFormat) {
  GraphSequence s = parse_sequence("Bw,A_, A_");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], complete_graph(3));
  EXPECT_EQ(format_sequence(s), "Bw,A_,A_");
  EXPECT_EQ(sequence_label(s), "A_ A_ Bw");
  EXPECT_TRUE(parse_sequence("").empty());
  EXPECT_TRUE(parse_sequence("()").empty());
  EXPECT_EQ(sequence_label(GraphSequence()), "()");
}

TEST(SequenceIo, RejectsMixedKindsAndBadTokens) {
  EXPECT_THROW(parse_sequence("Bw,&AO"), Error);
  try {
    parse_sequence("Bw,Bx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
}

TEST(SequenceIo, ReadSkipsCommentsAndReportsLines) {
  std::istringstream in("# family\nA_,A_\n\nBw,BW\n");
  auto seqs = read_sequences(in);
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[1].size(), 2u);
  std::istringstream bad("A_,A_\nnot-a-graph\n");
  try {
    read_sequences(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(read_sequence_file("/nonexistent/family.txt"), Error);
}
