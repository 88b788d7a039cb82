#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "deckwork/covers.hpp"

namespace deckwork {

// One sequence per line: comma-separated graph6/digraph6 tokens. Blank lines
// and lines starting with '#' are skipped. Throws kMalformedInput with the
// line number on bad tokens.
GraphSequence parse_sequence(std::string_view line);
std::vector<GraphSequence> read_sequences(std::istream& in);
std::vector<GraphSequence> read_sequence_file(const std::string& path);

// Comma-separated tokens of the items, in sequence order.
std::string format_sequence(const GraphSequence& seq);

// The normalized key as space-separated canonical tokens; "()" when empty.
std::string sequence_label(const GraphSequence& seq);

}  // namespace deckwork
