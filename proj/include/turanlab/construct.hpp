#ifndef TURANLAB_CONSTRUCT_HPP
#define TURANLAB_CONSTRUCT_HPP

/// \file construct.hpp
/// \brief Graph primitives, the construction operators, and a small term
/// language for composing them.
///
/// Every operator has a fixed vertex layout so that callers can address parts
/// by index:
///   - union and join concatenate their operands left to right;
///   - Turan parts are sized ceil(n/r) first and are contiguous;
///   - blow_up / odd_balloon keep the original vertices first, then the fresh
///     vertices edge by edge in lexicographic edge order;
///   - part matchings pair consecutive vertices of a part, an odd part leaves
///     its last vertex unmatched;
///   - embed_in_part places the pattern on the lowest vertices of the part.

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Bad operator arguments (negative orders, even balloon lengths, ...).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> sizes);

/// Part sizes of T(n, r), larger parts first.  T(n, 0) has no parts.
std::vector<int> turan_part_sizes(int n, int r);
Graph turan_graph(int n, int r);
long long turan_edge_count(int n, int r);

/// G^{p+1}: every edge becomes a clique of order p + 1 on its two ends plus
/// p - 1 fresh vertices.
Graph blow_up(const Graph& g, int p);

/// Replaces edge k (lexicographic order) by a cycle of length lengths[k]
/// through its ends; lengths must be odd and at least 3.
Graph odd_balloon(const Graph& g, std::span<const int> lengths);
Graph odd_balloon(const Graph& g, int length);

/// True iff every edge ballooned into a triangle touches a leaf of B, where
/// B is the complement of `side_a` and |A| <= |B|.
bool validate_good_odd_ballooning(const Graph& f, Bits side_a, std::span<const int> lengths);
/// Same, with A taken as the smaller class of the two-colouring.
bool validate_good_odd_ballooning(const Graph& f, std::span<const int> lengths);

/// K^+_{n_1..n_r}: complete multipartite plus a (near) perfect matching in
/// every part.  Requires |n_i - n_j| <= 2.
Graph k_plus(std::span<const int> part_sizes);
/// G_{n,r}: k_plus on the Turan part sizes.
Graph g_nr(int n, int r);

/// An evaluated term: the graph and the vertex sets of its parts.
struct Layout {
  Graph graph;
  std::vector<Bits> parts;
};

/// Term over the primitives and operators above.  Immutable; copies share
/// structure.
class ConstructionExpr {
 public:
  enum class Kind {
    path,
    cycle,
    clique,
    empty,
    multipartite,
    turan,
    literal,
    join,
    disjoint_union,
    repeat,
    blow_up,
    odd_balloon,
    part_matchings,
    embed_in_part,
    complement,
  };

  static ConstructionExpr path(int n);
  static ConstructionExpr cycle(int n);
  static ConstructionExpr clique(int n);
  static ConstructionExpr empty(int n);
  static ConstructionExpr multipartite(std::vector<int> sizes);
  static ConstructionExpr turan(int n, int r);
  static ConstructionExpr literal(Graph g);
  static ConstructionExpr join(std::vector<ConstructionExpr> operands);
  static ConstructionExpr disjoint_union(std::vector<ConstructionExpr> operands);
  static ConstructionExpr repeat(int times, ConstructionExpr e);
  static ConstructionExpr blow_up(ConstructionExpr e, int p);
  /// One length for every edge, or one per edge in lexicographic order.
  static ConstructionExpr odd_balloon(ConstructionExpr e, std::vector<int> lengths);
  static ConstructionExpr part_matchings(ConstructionExpr e);
  static ConstructionExpr embed_in_part(ConstructionExpr host, int part, ConstructionExpr pattern);
  static ConstructionExpr complement(ConstructionExpr e);

  Kind kind() const;
  std::span<const int> integers() const;
  std::span<const ConstructionExpr> operands() const;

  Layout eval_layout() const;
  Graph eval() const { return eval_layout().graph; }

  /// Text form accepted by parse_expression.
  std::string to_string() const;

 private:
  struct Node;
  explicit ConstructionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Syntax error in an expression; `position()` is a byte offset.
class ExpressionError : public std::invalid_argument {
 public:
  ExpressionError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr := NAME [ '(' arg { ',' arg } ')' ]
///   arg  := INTEGER | expr
/// Names: P(n) C(n) K(n) K(n1,..,nr) E(n) T(n,r) g6(<graph6>) join(e,..)
/// union(e,..) repeat(t,e) blowup(e,p) balloon(e,l[,l..]) matchings(e)
/// embed(host,part,pattern) complement(e).
ConstructionExpr parse_expression(std::string_view text);

/// A named graph or forbidden family from the registry.
struct NamedConstruction {
  std::string name;
  bool is_family = false;
  std::vector<ConstructionExpr> expressions;
  std::vector<Graph> members;
};

struct NamedEntry {
  std::string name;
  std::string signature;
  std::string description;
  bool is_family;
  /// Smallest legal parameters, used for registry smoke tests and --help.
  std::vector<int> smallest;
};

/// Builds a registry entry; throws ConstructionError on unknown names or
/// parameter-range violations.
NamedConstruction named_family(std::string_view name, std::span<const int> params);

/// Parses `name(p1,...,pk)` or `name` and calls named_family.
NamedConstruction named_family(std::string_view spec);

const std::vector<NamedEntry>& named_registry();

}  // namespace turanlab

#endif  // TURANLAB_CONSTRUCT_HPP
