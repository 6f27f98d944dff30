#ifndef TURANLAB_SUITE_HPP
#define TURANLAB_SUITE_HPP

/// \file suite.hpp
/// \brief Self-checking batches over the library, plus the seeded instance
/// generators they use.  Every suite is deterministic given its options.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/subgraph.hpp"
#include "turanlab/symmetry.hpp"

namespace turanlab {

/// Uniform-ish integer in [lo, hi] from the raw engine output, so sequences
/// are the same on every standard library.
int draw(std::mt19937_64& rng, int lo, int hi);

/// Connected-or-not graph on n vertices with each edge present with
/// probability num/den.
Graph random_graph(int n, int num, int den, std::mt19937_64& rng);

/// d-regular simple graph on n vertices (n*d even, d < n) by the pairing
/// model with restarts.
Graph random_regular_graph(int n, int d, std::mt19937_64& rng);

struct ReplicationInstance {
  Graph host;
  Graph pattern;
  SymmetricFamily family;
};

/// A pattern on 2..5 vertices with an edge, and a pattern-free host carrying
/// at least |pattern| pairwise non-adjacent symmetric blocks.
ReplicationInstance random_replication_instance(std::mt19937_64& rng);

struct ShapedInstance {
  Graph graph;
  ShapeCertificate cert;
};

/// A graph with a shape certificate: |W| = q - 1, r balanced parts, every
/// core non-empty, other edges random.
ShapedInstance random_shaped_graph(int q, int r, int m, std::mt19937_64& rng);

struct SuiteOptions {
  int nmax = 8;
  /// Instances for the randomized suites; 0 picks the suite default.
  int count = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  SearchBudget budget{};
};

struct SuiteLine {
  bool pass = false;
  std::string name;
  std::string detail;
};

using SuiteSink = std::function<void(const SuiteLine&)>;

/// turan, paths, replication, grow, certificates, decomposition, shape,
/// enumerator, dichotomy.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") and streams its lines.  Returns the number of
/// failing lines.  Throws std::invalid_argument for an unknown name.
int run_suite(std::string_view name, const SuiteOptions& options, const SuiteSink& sink);

}  // namespace turanlab

#endif  // TURANLAB_SUITE_HPP
