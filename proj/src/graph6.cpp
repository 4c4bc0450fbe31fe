#include "kturan/graph6.hpp"

#include <stdexcept>

namespace kturan {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  auto bad = [&](const char* why) {
    return std::invalid_argument("malformed graph6 '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw bad("byte outside 63..126");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw bad("unsupported size prefix");
    n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
    if (n < 63) throw bad("long size prefix used for small graph");
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw bad("more than 64 vertices");

  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) throw bad("wrong body length");

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw bad("non-zero padding bits");
  }
  return g;
}

}  // namespace kturan
