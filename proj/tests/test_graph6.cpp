#include <doctest.h>

#include "kdefect/catalog.hpp"
#include "kdefect/graph6.hpp"
#include "oracles.hpp"

using namespace kdefect;
namespace kt = kdefect::testing;

TEST_SUITE("graph6") {

TEST_CASE("hand-encoded records") {
  // 'A' = 63+2, '_' = 63 + 0b100000: single bit x(0,1)
  CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(parse_graph6("A_").order() == 2);
  CHECK(parse_graph6("A_").has_edge(0, 1));

  // 'D' = 63+5, then 10 zero bits in two bytes
  CHECK(write_graph6(Graph(5)) == "D?" "?");
  CHECK(parse_graph6("D?" "?") == Graph(5));

  CHECK(write_graph6(Graph()) == "?");
  CHECK(parse_graph6("?").order() == 0);

  // C5 in natural labeling: edges 01,12,23,34,04
  const std::string c5 = write_graph6(cycle_graph(5));
  CHECK(parse_graph6(c5) == cycle_graph(5));

  // single trailing newline is accepted
  CHECK(parse_graph6("A_\n") == parse_graph6("A_"));
}

TEST_CASE("truncated record names the byte offset") {
  try {
    (void)parse_graph6("B");
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::truncated);
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("error taxonomy") {
  // byte below the printable range
  try {
    (void)parse_graph6(std::string(1, ' '));
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::non_printable);
    CHECK(e.offset() == 0);
  }

  // non-printable edge byte inside the record
  try {
    (void)parse_graph6(std::string("A") + char(7));
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::non_printable);
    CHECK(e.offset() == 1);
  }

  // bytes after a complete record
  try {
    (void)parse_graph6("A_?");
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::trailing_garbage);
    CHECK(e.offset() == 2);
  }

  // nonzero pad bits: n=2 uses one bit, 'O' = 63 + 0b010000 sets a pad bit
  try {
    (void)parse_graph6("AO");
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::nonzero_padding);
    CHECK(e.offset() == 1);
  }

  // empty line
  CHECK_THROWS_AS((void)parse_graph6(""), Graph6ParseError);
  CHECK_THROWS_AS((void)parse_graph6("\n"), Graph6ParseError);
}

TEST_CASE("orders above 64 are rejected, 63 and 64 are not") {
  for (int n : {63, 64}) {
    const Graph g(n);
    const std::string enc = write_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == g);
  }
  // n = 65 in the three-byte form: 65 = 0b000001:000001 -> "~?@A" prefix
  const std::string too_big = std::string("~?") + char(63 + 1) + char(63 + 1);
  try {
    (void)parse_graph6(too_big);
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::order_too_large);
  }
}

TEST_CASE("long-form encodings of small orders are rejected") {
  // n=5 written in the '~' form is not minimal
  const std::string nonminimal = std::string("~?") + char(63) + char(63 + 5) + "??";
  try {
    (void)parse_graph6(nonminimal);
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6ErrorKind::bad_length_byte);
  }
}

TEST_CASE("round trip is the identity on 1000 random graphs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    const Graph g = kt::random_graph(1 + int(rng() % 12), 0.35, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("write emits the minimal-length encoding") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + int(rng() % 12);
    const Graph g = kt::random_graph(n, 0.5, rng);
    const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
    CHECK(write_graph6(g).size() == 1 + (nbits + 5) / 6);
  }
}

}  // TEST_SUITE
