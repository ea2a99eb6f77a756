#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kdefect/graph.hpp"

namespace kdefect {

enum class Graph6ErrorKind {
  bad_length_byte,   // first byte does not start a valid order encoding
  non_printable,     // byte outside the printable range 63..126
  truncated,         // record ends before the edge bits are complete
  trailing_garbage,  // bytes after the complete record (or a second newline)
  order_too_large,   // decoded order exceeds 64
  nonzero_padding,   // pad bits of the final byte are not all zero
};

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(Graph6ErrorKind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        kind_(kind),
        offset_(offset) {}
  Graph6ErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Graph6ErrorKind kind_;
  std::size_t offset_;
};

/// Decodes one graph6 record (no ">>graph6<<" header). A single trailing
/// LF is accepted; anything else after the record is an error.
Graph parse_graph6(std::string_view line);

/// Minimal-length graph6 encoding, no terminator.
std::string write_graph6(const Graph& g);

}  // namespace kdefect
