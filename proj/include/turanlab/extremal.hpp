#ifndef TURANLAB_EXTREMAL_HPP
#define TURANLAB_EXTREMAL_HPP

/// \file extremal.hpp
/// \brief Exhaustive ex(n, F) / EX(n, F) at small orders, the closed-form
/// answer for paths, the one-vertex-per-part growth operation on shaped
/// graphs, and candidate certification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/subgraph.hpp"
#include "turanlab/symmetry.hpp"

namespace turanlab {

enum class ExtremalMethod { exhaustive, labeled_bruteforce };

const char* to_string(ExtremalMethod m);

struct ExtremalReport {
  int n = 0;
  std::string family;
  int ex = 0;
  /// Canonical graph6 strings, sorted.
  std::vector<std::string> extremal_set;
  std::int64_t graphs_examined = 0;
  ExtremalMethod method = ExtremalMethod::exhaustive;
};

inline constexpr int kMaxExhaustiveOrder = 10;
inline constexpr int kMaxLabeledOrder = 6;

struct ExtremalOptions {
  int threads = 1;
};

/// Canonical augmentation over F-free graphs (F-containment is inherited by
/// supergraphs, so F-containing nodes are cut with their subtrees) with the
/// bound e(G) + k(n - k) + ex(n - k, F) checked against the best count so far.
/// Throws std::invalid_argument for n outside 0..10.
ExtremalReport enumerate_extremal(int n, const ForbiddenFamily& fam, const ExtremalOptions& options = {});

/// Independent engine: all labeled graphs on n <= 6 vertices, classes by the
/// minimum edge code over all n! relabelings, containment by trying every
/// injective map.
ExtremalReport enumerate_extremal_labeled(int n, const ForbiddenFamily& fam);

/// Number of isomorphism classes on n vertices, by canonical augmentation.
std::int64_t count_classes(int n);
/// The same by labeled brute force (n <= 6).
std::int64_t count_classes_labeled(int n);

struct PathExtremal {
  long long bound = 0;
  /// Every graph attaining the bound, deduplicated up to isomorphism and
  /// sorted by canonical graph6.
  std::vector<Graph> catalog;
};

/// Maximum edges of a P_l-free graph on n vertices (l >= 2) with all
/// equality graphs: t copies of K_{l-1} plus K_s where n = (l-1)t + s, and
/// for even l with s in {l/2 - 1, l/2} also, for 1 <= t0 <= t,
/// (t - t0) K_{l-1} plus K_{l/2-1} joined to an independent set of
/// (l-1)t0 - l/2 + s + 1 vertices.
PathExtremal path_extremal_oracle(int n, int l);

struct GrownShape {
  Graph graph;
  ShapeCertificate cert;
};

/// Adds to every part S_i a vertex adjacent to everything outside S_i
/// (including the other new vertices).  The new vertices join the cores.
/// Checks e(result) - e(g) = (q - 1) + m(r - 1) + C(r, 2), m = |g|,
/// q = |W| + 1, and throws std::logic_error if it fails.
GrownShape d_operation(const Graph& g, const ShapeCertificate& cert);

/// Deletes the highest core vertex of every part.  Throws
/// std::invalid_argument when a core is empty.  Checks
/// e(result) = e(g) - [(q - 1) + (m - r)(r - 1) + C(r, 2)].
GrownShape d_inverse(const Graph& g, const ShapeCertificate& cert);

struct CandidateVerdict {
  FreenessCheck freeness;
  int edges = 0;
  long long claimed_edges = 0;
  bool edge_count_matches = false;
  /// Whether g is in EX(n, F) by exhaustive enumeration (n <= 10, on request).
  std::optional<bool> in_extremal_set;
};

CandidateVerdict certify_candidate(const Graph& g, const ForbiddenFamily& fam, long long claimed_edges,
                                   const SearchBudget& budget = {}, bool cross_check = false);

}  // namespace turanlab

#endif  // TURANLAB_EXTREMAL_HPP
