#ifndef TURANLAB_GENERATE_HPP
#define TURANLAB_GENERATE_HPP

/// \file generate.hpp
/// \brief Isomorph-free generation of graphs by canonical augmentation.
///
/// A graph is extended by one vertex with every possible neighbourhood.  A
/// child is kept when the added vertex lies in the orbit of the vertex the
/// canonical labeling places last; siblings that are isomorphic are merged.
/// Every isomorphism class is then produced exactly once, from a parent that
/// is one of its induced subgraphs, so any property closed under taking
/// induced subgraphs may prune whole subtrees.

#include <cstdint>
#include <functional>

#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

/// True iff `child` is a canonical extension of child - `added`.
bool is_canonical_extension(const Graph& child, int added, const CanonicalForm& form);

/// Calls `emit` once per isomorphism class of one-vertex extensions of `g`
/// that have `g` as canonical parent.  The new vertex has index g.order().
void for_each_canonical_child(const Graph& g, const std::function<void(const Graph&, const CanonicalForm&)>& emit);

/// Receives every class (including the order-0 graph) with the index of the
/// worker visiting it; returns false to skip the subtree below it.
using ClassVisitor = std::function<bool(const Graph&, const CanonicalForm&, int worker)>;

struct GenerationStats {
  std::int64_t visited = 0;
};

/// Depth-first generation of all classes of order <= max_order.  With
/// threads > 1 the subtrees below a fixed split order are dealt out round
/// robin; the visitor must then be safe to call concurrently from different
/// workers.
GenerationStats generate_classes(int max_order, const ClassVisitor& visit, int threads = 1);

}  // namespace turanlab

#endif  // TURANLAB_GENERATE_HPP
