#ifndef TURANLAB_SYMMETRY_HPP
#define TURANLAB_SYMMETRY_HPP

/// \file symmetry.hpp
/// \brief Symmetric subgraphs: detection, replication, membership in the
/// symmetric class D(n,r,c), and the W + S_1..S_r extremal shape.
///
/// Blocks Q_1..Q_tau are symmetric when they are disjoint connected induced
/// subgraphs with isomorphisms psi_j : Q_1 -> Q_j such that every vertex
/// outside all blocks sees u and psi_j(u) alike.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/subgraph.hpp"

namespace turanlab {

struct SymmetricFamily {
  std::vector<Bits> blocks;
  /// isos[j][i]: image under psi_j of the i-th smallest vertex of blocks[0].
  /// isos[0] lists blocks[0] itself.
  std::vector<std::vector<int>> isos;
};

/// Classes of mutually non-adjacent vertices with identical neighbourhoods,
/// ordered by smallest member.  Every vertex is in exactly one class.
std::vector<Bits> find_symmetric_vertices(const Graph& g);

/// Checks every invariant of a symmetric family; blocks may be adjacent to
/// each other.
bool is_symmetric_family(const Graph& g, const SymmetricFamily& fam);

struct SymmetricSearch {
  Decision found = Decision::no;
  /// The family when found; with `undecided`, the best one seen so far.
  std::optional<SymmetricFamily> family;
  std::int64_t sets_examined = 0;
};

/// Looks for at least `tau_min` symmetric blocks of order k.  Connected
/// induced k-sets are grouped by isomorphism type and by the outside
/// neighbourhoods read along the block's canonical orderings; within a group
/// disjoint blocks are picked greedily in lexicographic order.  The largest
/// group wins, ties going to the lexicographically smallest block list.
/// Blocks found this way are pairwise non-adjacent.  The budget only applies
/// when k > 3 or the graph has more than 24 vertices.
SymmetricSearch find_symmetric_families(const Graph& g, int k, int tau_min, const SearchBudget& budget = {});

/// Adds a fresh copy of blocks[0] wired like it to the vertices outside all
/// blocks and to nothing inside them.  Throws std::invalid_argument unless
/// `fam` is a symmetric family with no edges between blocks.
Graph replicate(const Graph& g, const SymmetricFamily& fam);

/// Witness for membership in D(n, r, c).
struct SymmetryClassCertificate {
  Bits omitted = 0;
  std::vector<Bits> parts;
  /// blocks[i]: the components of part i, pairwise symmetric in g.
  std::vector<std::vector<Bits>> blocks;
};

struct SymmetryClassResult {
  Decision member = Decision::no;
  std::optional<SymmetryClassCertificate> certificate;
};

/// Omission sets of size <= c are tried with unusual vertices (small twin
/// class, extreme degree) first.  The search is exhaustive for c <= 2 and
/// subject to `budget` beyond.
SymmetryClassResult in_symmetry_class(const Graph& g, int r, int c, const SearchBudget& budget = {});

/// Checks a D(n, r, c) certificate from scratch.
bool is_valid_symmetry_certificate(const Graph& g, int r, int c, const SymmetryClassCertificate& cert);

/// V = W + S_1 + ... + S_r with cores S'_i whose vertices are adjacent to
/// exactly V - S_i.
struct ShapeCertificate {
  Bits w = 0;
  std::vector<Bits> parts;
  std::vector<Bits> cores;
};

/// Balanced parts (sizes floor or ceil of (n - |W|) / r), cores inside parts
/// with the neighbourhood condition, and, when max_defect >= 0,
/// |S_i - S'_i| <= max_defect.
bool is_valid_shape(const Graph& g, const ShapeCertificate& cert, int max_defect = -1);

/// Finds a shape certificate with |W| = q - 1 and |S_i - S'_i| <= t^2.
/// Parts with a non-empty core are exactly the sets V - N(v) of their core
/// vertices, so those are found first; parts with empty core can only occur
/// when a part has at most t^2 vertices.  Cores are maximal.
std::optional<ShapeCertificate> verify_extremal_shape(const Graph& g, int q, int r, int t);

/// The two outcomes for a P_l-free graph whose vertex set S, a union of tau
/// symmetric blocks, carries (l - 2)|S| / 2 edges counted inside S and
/// towards the rest.
enum class PathBlockBranch { clique_blocks, star_apexes, neither };

const char* to_string(PathBlockBranch b);

struct PathBlockReport {
  /// P_l-freeness, symmetric blocks, tau >= l, (l - 1) divides |S|, and
  /// e(S) + e(S, V - S) >= (l - 2)|S| / 2.
  bool hypotheses = false;
  /// Equality in the edge inequality.
  bool tight = false;
  PathBlockBranch branch = PathBlockBranch::neither;
};

/// Checks the hypotheses and reports which alternative the configuration
/// realizes: every block K_{l-1} with no edges leaving S, or (l even) every
/// block a single vertex and exactly (l - 2)/2 outside vertices adjacent to
/// all of them (and nothing else outside touching S).
PathBlockReport classify_path_block_configuration(const Graph& g, int l, const SymmetricFamily& fam);

std::string format_vertex_set(Bits s);
std::string describe(const SymmetricFamily& fam);
std::string describe(const SymmetryClassCertificate& cert);
std::string describe(const ShapeCertificate& cert);

namespace detail {

/// Lower bound on the intersection of m >= 2 finite sets from their sizes and
/// the size of their union: sum |A_i| - (m - 1)|union|.
long long intersection_lower_bound(std::span<const long long> sizes, long long union_size);

}  // namespace detail

}  // namespace turanlab

#endif  // TURANLAB_SYMMETRY_HPP
