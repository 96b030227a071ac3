#include "nrwalk/graph6.hpp"

#include <cstdint>
#include <sstream>

#include "nrwalk/errors.hpp"

namespace nrw {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c, std::size_t pos) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    std::ostringstream os;
    os << "invalid graph6 character at position " << pos << " (byte "
       << static_cast<int>(u) << ")";
    throw ParseError(os.str());
  }
  return u - 63;
}

// Reads the vertex-count prefix; advances `i` past it.
std::int64_t decode_count(std::string_view s, std::size_t& i) {
  if (i >= s.size()) throw ParseError("empty graph6 string");
  int c0 = decode_char(s[i], i);
  if (c0 != 63) {
    ++i;
    return c0;
  }
  // '~' escape: three characters, or '~~' then six.
  ++i;
  int width = 3;
  if (i < s.size() && s[i] == '~') {
    ++i;
    width = 6;
  }
  if (i + width > s.size())
    throw ParseError("graph6 string truncated inside vertex count");
  std::int64_t n = 0;
  for (int k = 0; k < width; ++k, ++i) n = (n << 6) | decode_char(s[i], i);
  return n;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader)
    text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  std::size_t i = 0;
  std::int64_t n64 = decode_count(text, i);
  if (n64 > kGraph6MaxVertices) {
    std::ostringstream os;
    os << "graph6 vertex count " << n64 << " exceeds limit "
       << kGraph6MaxVertices;
    throw ParseError(os.str());
  }
  const int n = static_cast<int>(n64);

  const std::int64_t nbits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - i != expected) {
    std::ostringstream os;
    os << "graph6 body for n=" << n << " needs " << expected
       << " characters, got " << (text.size() - i);
    throw ParseError(os.str());
  }

  std::vector<Edge> edges;
  std::int64_t bit = 0;
  int buffer = 0;
  int buffered = 0;
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (buffered == 0) {
        buffer = decode_char(text[i], i);
        ++i;
        buffered = 6;
      }
      --buffered;
      if ((buffer >> buffered) & 1) edges.emplace_back(u, v);
    }
  }
  if (buffered > 0 && (buffer & ((1 << buffered) - 1)) != 0)
    throw ParseError("graph6 padding bits are not zero");

  return Graph::from_edges(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kGraph6MaxVertices) {
    std::ostringstream os;
    os << "graph with " << n << " vertices exceeds graph6 limit "
       << kGraph6MaxVertices;
    throw PreconditionError(os.str());
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // n <= 2^18 < 258048, so the three-character escape always suffices.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int buffer = 0;
  int buffered = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      buffer = (buffer << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++buffered == 6) {
        out.push_back(static_cast<char>(buffer + 63));
        buffer = 0;
        buffered = 0;
      }
    }
  }
  if (buffered > 0) {
    buffer <<= (6 - buffered);
    out.push_back(static_cast<char>(buffer + 63));
  }
  return out;
}

}  // namespace nrw
