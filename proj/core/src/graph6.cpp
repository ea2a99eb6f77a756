#include "kdefect/graph6.hpp"

namespace kdefect {

namespace {

constexpr int kBias = 63;

[[noreturn]] void fail(Graph6ErrorKind kind, std::size_t offset, const std::string& msg) {
  throw Graph6ParseError(kind, offset, msg);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (line.empty()) fail(Graph6ErrorKind::truncated, 0, "empty graph6 record");

  for (std::size_t i = 0; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      fail(Graph6ErrorKind::non_printable, i,
           "graph6 byte out of printable range 63..126");
  }

  // Order: one byte n+63 for n <= 62, or '~' followed by three 6-bit bytes.
  std::size_t pos = 0;
  long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      fail(Graph6ErrorKind::bad_length_byte, 1, "8-byte order encoding not supported");
    if (line.size() < 4) fail(Graph6ErrorKind::truncated, line.size(), "order encoding cut short");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kBias);
    if (n <= 62)
      fail(Graph6ErrorKind::bad_length_byte, 0, "non-minimal order encoding");
    pos = 4;
  } else {
    n = line[0] - kBias;
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    fail(Graph6ErrorKind::order_too_large, 0,
         "graph order " + std::to_string(n) + " exceeds supported maximum 64");

  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < pos + nbytes)
    fail(Graph6ErrorKind::truncated, line.size(),
         "record needs " + std::to_string(pos + nbytes) + " bytes, got " + std::to_string(line.size()));
  if (line.size() > pos + nbytes)
    fail(Graph6ErrorKind::trailing_garbage, pos + nbytes, "bytes after end of record");

  std::uint64_t rows[Graph::kMaxOrder] = {};
  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  long bit = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    int group = line[pos + b] - kBias;
    for (int s = 5; s >= 0; --s, ++bit) {
      int val = (group >> s) & 1;
      if (bit >= nbits) {
        if (val) fail(Graph6ErrorKind::nonzero_padding, pos + b, "pad bits must be zero");
        continue;
      }
      if (val) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(static_cast<int>(n), std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n)));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace kdefect
