#include "turanlab/graph6.hpp"

#include <istream>

namespace turanlab {

namespace {

constexpr int kBias = 63;
constexpr int kLongPrefix = 126;

bool printable(char c) {
  const int b = static_cast<unsigned char>(c);
  return b >= kBias && b <= kBias + 63;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongPrefix));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Kind::malformed_header, "graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == kLongPrefix) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongPrefix)
      throw Graph6Error(Kind::too_many_vertices, "graph6: 6-byte order prefix exceeds 64 vertices");
    if (text.size() < 4) throw Graph6Error(Kind::malformed_header, "graph6: truncated order prefix");
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!printable(text[k])) throw Graph6Error(Kind::malformed_header, "graph6: bad byte in order prefix");
      n = (n << 6) | (static_cast<unsigned char>(text[k]) - kBias);
    }
    if (n <= 62) throw Graph6Error(Kind::malformed_header, "graph6: long prefix used for small order");
    pos = 4;
  } else {
    if (!printable(text[0])) throw Graph6Error(Kind::malformed_header, "graph6: bad order byte");
    n = static_cast<unsigned char>(text[0]) - kBias;
    pos = 1;
  }
  if (n > kMaxOrder) throw Graph6Error(Kind::too_many_vertices, "graph6: order " + std::to_string(n) + " exceeds 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::string_view body = text.substr(pos);
  for (char c : body)
    if (!printable(c)) throw Graph6Error(Kind::invalid_character, "graph6: byte outside 63..126 in body");
  if (body.size() < need) throw Graph6Error(Kind::truncated_body, "graph6: body too short");
  if (body.size() > need) throw Graph6Error(Kind::trailing_data, "graph6: body too long");

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(body[k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - kBias;
    const int unused = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << unused) - 1)) throw Graph6Error(Kind::nonzero_padding, "graph6: padding bits set");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace turanlab
