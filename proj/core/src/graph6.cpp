#include "deckwork/graph6.hpp"

#include <sstream>
#include <vector>

#include "deckwork/error.hpp"

namespace deckwork {

namespace {

constexpr int kBias = 63;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedInput, why);
}

void append_order(std::string& out, int n) {
  // Graph only holds n <= kMaxVertices, which always fits the 1-byte form.
  out.push_back(static_cast<char>(kBias + n));
}

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      value <<= 1;
      if (i + k < bits.size() && bits[i + k]) value |= 1;
    }
    out.push_back(static_cast<char>(kBias + value));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    std::ostringstream os;
    os << "invalid byte 0x" << std::hex << (static_cast<unsigned>(static_cast<unsigned char>(c)));
    malformed(os.str());
  }
  return v;
}

// Parses N(n) and returns n; advances `pos`.
long parse_order(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) malformed("missing vertex count");
  const unsigned char first = static_cast<unsigned char>(text[pos]);
  if (first < kBias || first > 126) malformed("invalid header byte");
  if (first < 126) {
    ++pos;
    return first - kBias;
  }
  // 126 followed by 3 sextets, or 126 126 followed by 6 sextets.
  std::size_t width = 3;
  ++pos;
  if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
    width = 6;
    ++pos;
  }
  if (pos + width > text.size()) malformed("truncated vertex count");
  long n = 0;
  for (std::size_t i = 0; i < width; ++i) n = (n << 6) | sextet(text[pos + i]);
  pos += width;
  return n;
}

std::vector<bool> parse_bits(std::string_view text, std::size_t pos, std::size_t nbits) {
  const std::size_t need = (nbits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) malformed("truncated payload");
  if (have > need) malformed("trailing bytes after payload");
  std::vector<bool> bits;
  bits.reserve(need * 6);
  for (std::size_t i = 0; i < need; ++i) {
    const int v = sextet(text[pos + i]);
    for (int k = 5; k >= 0; --k) bits.push_back((v >> k) & 1);
  }
  for (std::size_t i = nbits; i < bits.size(); ++i)
    if (bits[i]) malformed("nonzero padding bits");
  bits.resize(nbits);
  return bits;
}

int checked_order(long n) {
  if (n > kMaxVertices) {
    std::ostringstream os;
    os << "graph on " << n << " vertices exceeds supported maximum " << kMaxVertices;
    throw Error(ErrorCode::kInvalidArgument, os.str());
  }
  return static_cast<int>(n);
}

}  // namespace

std::string encode_g6(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::kInvalidArgument, "graph6 encodes undirected graphs only");
  const int n = g.order();
  std::string out;
  append_order(out, n);
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph decode_g6(std::string_view text) {
  if (!text.empty() && text.front() == '&') malformed("digraph6 input where graph6 expected");
  if (!text.empty() && text.front() == ':') malformed("sparse6 is not supported");
  std::size_t pos = 0;
  const int n = checked_order(parse_order(text, pos));
  const auto bits = parse_bits(text, pos, static_cast<std::size_t>(n) * (n - (n > 0)) / 2);
  Graph::Rows rows{};
  std::size_t b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[b++]) {
        rows[i] |= VertexMask(1u << j);
        rows[j] |= VertexMask(1u << i);
      }
  return Graph::from_rows(GraphKind::kUndirected, n, rows);
}

std::string encode_d6(const Graph& g) {
  if (!g.directed()) throw Error(ErrorCode::kInvalidArgument, "digraph6 encodes digraphs only");
  const int n = g.order();
  std::string out = "&";
  append_order(out, n);
  std::vector<bool> bits;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph decode_d6(std::string_view text) {
  if (text.empty() || text.front() != '&') malformed("digraph6 must start with '&'");
  std::size_t pos = 1;
  const int n = checked_order(parse_order(text, pos));
  const auto bits = parse_bits(text, pos, static_cast<std::size_t>(n) * n);
  Graph::Rows rows{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits[static_cast<std::size_t>(i) * n + j]) {
        if (i == j) malformed("digraph6 loop bits are not supported");
        rows[i] |= VertexMask(1u << j);
      }
  return Graph::from_rows(GraphKind::kDirected, n, rows);
}

std::string encode_token(const Graph& g) { return g.directed() ? encode_d6(g) : encode_g6(g); }

Graph decode_token(std::string_view text) {
  if (!text.empty() && text.front() == '&') return decode_d6(text);
  return decode_g6(text);
}

}  // namespace deckwork
