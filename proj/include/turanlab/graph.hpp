#ifndef TURANLAB_GRAPH_HPP
#define TURANLAB_GRAPH_HPP

/// \file graph.hpp
/// \brief Dense undirected graphs on at most 64 vertices, one machine word per
/// adjacency row.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turanlab {

using Bits = std::uint64_t;

inline constexpr int kMaxOrder = 64;

/// Thrown when a construction would need more than kMaxOrder vertices.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr Bits bit(int v) { return Bits{1} << v; }

constexpr Bits low_mask(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

constexpr int popcount(Bits x) { return std::popcount(x); }

constexpr int lowest(Bits x) { return std::countr_zero(x); }

/// Iterates the set bits of a mask in ascending order.
class BitRange {
 public:
  class iterator {
   public:
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_;
  };

  constexpr explicit BitRange(Bits mask) : mask_(mask) {}
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Bits mask_;
};

constexpr BitRange bits_of(Bits mask) { return BitRange(mask); }

Bits mask_of(std::span<const int> vertices);
std::vector<int> vertices_of(Bits mask);

/// Simple labeled graph on vertices 0..n-1.
///
/// Row i holds the neighbourhood of vertex i as a bit vector.  The class keeps
/// three invariants: rows are symmetric, there are no loops, and no bit at a
/// position >= n is ever set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool empty() const { return n_ == 0; }

  Bits vertex_mask() const { return low_mask(n_); }
  Bits neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::span<const Bits> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Appends a vertex adjacent to exactly `neighborhood`; returns its index.
  int add_vertex(Bits neighborhood = 0);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Bits, kMaxOrder> rows_{};
};

std::vector<std::pair<int, int>> edges(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by `s`, relabeled in ascending vertex order.
Graph induced_subgraph(const Graph& g, Bits s);
Graph induced_subgraph(const Graph& g, std::span<const int> s);

/// Deletes the vertices in `s`; survivors keep their relative order.
Graph remove_vertices(const Graph& g, Bits s);

/// Vertex i of the result is vertex order[i] of g.  `order` must be a
/// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> order);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

std::vector<Bits> connected_components(const Graph& g);
std::vector<Bits> connected_components(const Graph& g, Bits within);
bool is_connected(const Graph& g);

/// Two-colours g.  Returns false when g has an odd cycle; otherwise `side`
/// receives the colour class containing the lowest vertex of each component.
bool bipartition(const Graph& g, Bits& side);
bool is_bipartite(const Graph& g);

Bits isolated_vertices(const Graph& g);

std::string to_edge_list(const Graph& g);

}  // namespace turanlab

#endif  // TURANLAB_GRAPH_HPP
