#ifndef TURANLAB_SUBGRAPH_HPP
#define TURANLAB_SUBGRAPH_HPP

/// \file subgraph.hpp
/// \brief Non-induced subgraph containment, family freeness, and the scalar
/// invariants chi, beta, q(F) and q(family).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

enum class Decision { yes, no, undecided };

const char* to_string(Decision d);

/// Limits for the exponential searches.  Zero means unlimited.
struct SearchBudget {
  std::int64_t max_nodes = 0;
  std::int64_t max_ms = 0;

  static SearchBudget unlimited() { return {}; }
  /// max_ms from TURANLAB_BUDGET_MS when set, otherwise `fallback`.
  static SearchBudget from_environment(SearchBudget fallback);
  static SearchBudget from_environment() { return from_environment(SearchBudget{}); }
};

struct Containment {
  Decision decision = Decision::no;
  /// witness[u] is the host vertex hosting pattern vertex u (when yes).
  std::vector<int> witness;
  std::int64_t nodes = 0;
};

/// Searches for an injective edge-preserving map pattern -> host.  The
/// witness returned is the first one in the search order, which does not
/// depend on the budget.
Containment find_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget = {});

/// Unbudgeted form; nullopt when the pattern does not embed.
std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern);

/// True iff `witness` is an injective edge-preserving map pattern -> host.
bool is_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& witness);

int clique_number(const Graph& g);
Bits maximum_clique(const Graph& g);
int chromatic_number(const Graph& g);
bool is_colourable(const Graph& g, int k);
/// Minimum vertex cover size.
int covering_number(const Graph& g);
/// Minimum independent vertex cover of a bipartite graph; throws
/// std::invalid_argument when g has an odd cycle.
int independent_covering_order(const Graph& g);

/// A finite forbidden family with cached invariants.  Copies share the cache.
class ForbiddenFamily {
 public:
  /// Throws std::invalid_argument for an empty family or an edgeless member.
  explicit ForbiddenFamily(std::vector<Graph> members, std::string name = {});

  const std::vector<Graph>& members() const { return members_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return members_.size(); }
  const Graph& operator[](std::size_t i) const { return members_[i]; }

  /// min chi over members, minus one.
  int r() const { return r_; }
  /// max member order.
  int t() const { return t_; }
  int chromatic(std::size_t i) const { return chi_[i]; }
  /// q(family), computed on first use; may throw CapacityError.
  int q() const;

 private:
  struct Cache;
  std::vector<Graph> members_;
  std::string name_;
  std::vector<int> chi_;
  int r_ = 0;
  int t_ = 0;
  std::shared_ptr<Cache> cache_;
};

struct FreenessCheck {
  /// yes = the host is free of every member.
  Decision free = Decision::yes;
  /// Index of the embedded member and its witness when free == no.
  int member = -1;
  std::vector<int> witness;
  std::int64_t nodes = 0;
};

FreenessCheck check_family_free(const Graph& host, const ForbiddenFamily& fam, const SearchBudget& budget = {});
bool is_family_free(const Graph& host, const ForbiddenFamily& fam);

/// Smallest s such that some member embeds in complement(K_s) + T(t*r, r).
int family_q(const ForbiddenFamily& fam);
/// Minimum of independent_covering_order over the bipartite members, or
/// nullopt when no member is bipartite.
std::optional<int> family_q_bipartite(const ForbiddenFamily& fam);

}  // namespace turanlab

#endif  // TURANLAB_SUBGRAPH_HPP
