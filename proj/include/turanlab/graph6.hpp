#ifndef TURANLAB_GRAPH6_HPP
#define TURANLAB_GRAPH6_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Parse failure for graph6 text.  `kind()` tells the cases apart.
class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    malformed_header,   // empty input, bad length prefix, byte outside 63..126 in the prefix
    invalid_character,  // body byte outside 63..126
    truncated_body,     // fewer body bytes than the order requires
    trailing_data,      // more body bytes than the order requires
    nonzero_padding,    // unused low bits of the last byte are set
    too_many_vertices,  // order above 64
  };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// graph6 encoding: N(n) followed by the upper triangle in column order
/// (0,1) (0,2) (1,2) (0,3) ... packed six bits per byte, each byte offset by 63.
/// Orders up to 62 use the one-byte prefix, larger orders the `~` + 3 byte one.
std::string write_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and strips one trailing newline.
Graph parse_graph6(std::string_view text);

/// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace turanlab

#endif  // TURANLAB_GRAPH6_HPP
