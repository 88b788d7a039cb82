#pragma once

#include <string>
#include <string_view>

#include "deckwork/graph.hpp"

namespace deckwork {

// graph6 (undirected) and digraph6 ('&'-prefixed) as defined in the nauty
// format notes. Decoders throw Error(kMalformedInput) on bad header bytes,
// truncated or over-long payloads and nonzero padding bits; digraph6 input
// with a loop bit is rejected as unsupported.
std::string encode_g6(const Graph& g);
Graph decode_g6(std::string_view text);

std::string encode_d6(const Graph& g);
Graph decode_d6(std::string_view text);

// Dispatch on kind / on the '&' prefix.
std::string encode_token(const Graph& g);
Graph decode_token(std::string_view text);

}  // namespace deckwork
