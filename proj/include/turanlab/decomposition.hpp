#ifndef TURANLAB_DECOMPOSITION_HPP
#define TURANLAB_DECOMPOSITION_HPP

/// \file decomposition.hpp
/// \brief The decomposition family M(F) and the covering family B(F), both
/// by bounded search.

#include <string>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/subgraph.hpp"

namespace turanlab {

struct DecompositionResult {
  /// Canonical graph6 strings, sorted.
  std::vector<std::string> minimal_members;
  /// Largest candidate order examined.
  int search_bound = 0;
  /// True when search_bound reached t: a minimal M never has more vertices
  /// than the member it helps embed, so nothing was missed.
  bool complete = false;
  /// Whether some minimal member is bipartite.  Expected to hold; reported,
  /// never enforced.
  bool contains_bipartite = false;
  std::int64_t candidates_examined = 0;
};

struct DecompositionOptions {
  /// Candidate order cap; at most t is ever used.  0 = t.
  int max_order = 0;
  int threads = 1;
};

/// (M + complement(K_t)) joined with T((r-1)t, r-1), r and t taken from
/// the family.  For r = 1 the Turan factor is empty.  Throws CapacityError
/// past 64 vertices.
Graph decomposition_host(const Graph& m, const ForbiddenFamily& fam);

/// Does some member embed in decomposition_host(m, fam)?
bool has_decomposition_property(const Graph& m, const ForbiddenFamily& fam);

/// Minimal graphs without isolated vertices having the property.  Candidates
/// come from the canonical generator; a subtree is cut as soon as its root
/// has the property, and the survivors are then checked edge by edge.
DecompositionResult decomposition_family(const ForbiddenFamily& fam, const DecompositionOptions& options = {});

/// Induced subgraphs F[U] over vertex covers U with |U| <= q(family) - 1,
/// as sorted canonical graph6; {K_q} when there are none.
std::vector<std::string> covering_family(const ForbiddenFamily& fam);

}  // namespace turanlab

#endif  // TURANLAB_DECOMPOSITION_HPP
