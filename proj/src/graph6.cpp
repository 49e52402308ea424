#include "turan/graph6.hpp"

namespace turan {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  } else {
    throw std::invalid_argument("to_graph6: order too large");
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(const std::string& text) {
  // Tolerate a ">>graph6<<" header and trailing newline.
  std::size_t pos = 0;
  const std::string header = ">>graph6<<";
  if (text.rfind(header, 0) == 0) pos = header.size();

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Graph6Error("graph6: truncated input", i);
    unsigned char c = (unsigned char)text[i];
    if (c < 63 || c > 126) throw Graph6Error("graph6: invalid character", i);
    return c - 63;
  };

  long long n;
  if (text.size() > pos && text[pos] == '~') {
    if (text.size() > pos + 1 && text[pos + 1] == '~')
      throw Graph6Error("graph6: order beyond 258047 unsupported", pos);
    n = ((long long)byte_at(pos + 1) << 12) | ((long long)byte_at(pos + 2) << 6) |
        byte_at(pos + 3);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > kMaxVertices)
    throw Graph6Error("graph6: order exceeds capacity cap", pos);

  Graph g((int)n);
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = byte_at(pos);
        ++pos;
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) g.add_edge(u, v);
      --nbits;
    }
  }
  while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
  if (pos != text.size())
    throw Graph6Error("graph6: trailing data", pos);
  return g;
}

}  // namespace turan
