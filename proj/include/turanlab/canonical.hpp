#ifndef TURANLAB_CANONICAL_HPP
#define TURANLAB_CANONICAL_HPP

/// \file canonical.hpp
/// \brief Exact canonical labeling by partition refinement and backtracking.
///
/// The search individualizes the first non-singleton cell of an equitable
/// ordered partition, refines, and keeps the leaf whose (refinement trace,
/// relabeled adjacency) pair is largest.  Automorphisms are detected whenever a
/// leaf reproduces the first or the best leaf; they prune sibling branches
/// (orbit pruning) and let the search jump back to the divergence point.

#include <span>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

using Permutation = std::vector<int>;

struct CanonicalForm {
  /// Byte string identifying the isomorphism class: graph6 of the canonically
  /// relabeled graph, followed by the colour sequence for coloured inputs.
  std::string cert;
  /// order[i] is the vertex of the input placed at canonical position i, so
  /// relabel(g, order) serializes to `cert`.
  std::vector<int> order;
  /// Automorphisms found during the search (each maps v to perm[v]).
  std::vector<Permutation> automorphisms;
};

CanonicalForm canonical_form(const Graph& g);

/// Canonical form of a vertex-coloured graph.  Isomorphisms must map each
/// vertex to a vertex of equal colour; cells are ordered by colour value.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours);

Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Orbit representative (smallest member) of every vertex under the group
/// generated by `generators`.
std::vector<int> orbit_representatives(int n, std::span<const Permutation> generators);

/// Cell index of every vertex in the coarsest equitable partition of the
/// unit partition.  Vertices in different cells lie in different orbits.
std::vector<int> equitable_cells(const Graph& g);

}  // namespace turanlab

#endif  // TURANLAB_CANONICAL_HPP
