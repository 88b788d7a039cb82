#include "deckwork/sequence_io.hpp"

#include <fstream>
#include <istream>

#include "deckwork/error.hpp"
#include "deckwork/graph6.hpp"

namespace deckwork {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

GraphSequence parse_sequence(std::string_view line) {
  line = trim(line);
  std::vector<Graph> items;
  if (line.empty() || line == "()") return GraphSequence{};
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto comma = line.find(',', start);
    const auto token = trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (token.empty()) throw Error(ErrorCode::kMalformedInput, "empty graph token in sequence");
    items.push_back(decode_token(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& g : items)
    if (g.kind() != items.front().kind())
      throw Error(ErrorCode::kMalformedInput, "sequence mixes graph6 and digraph6 tokens");
  return GraphSequence(std::move(items));
}

std::vector<GraphSequence> read_sequences(std::istream& in) {
  std::vector<GraphSequence> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_sequence(t));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GraphSequence> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open sequence file '" + path + "'");
  return read_sequences(in);
}

std::string format_sequence(const GraphSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += encode_token(seq[i]);
  }
  return out;
}

std::string sequence_label(const GraphSequence& seq) {
  if (seq.empty()) return "()";
  std::string out;
  for (const auto& key : seq.normalized_key()) {
    if (!out.empty()) out.push_back(' ');
    out += encode_token(key_graph(key));
  }
  return out;
}

}  // namespace deckwork
