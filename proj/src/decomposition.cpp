#include "turanlab/decomposition.hpp"

#include <algorithm>
#include <mutex>

#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/generate.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

namespace {

Graph strip_isolated(const Graph& g) { return remove_vertices(g, isolated_vertices(g)); }

bool is_vertex_cover(const Graph& g, Bits u) {
  for (auto [a, b] : edges(g))
    if (!(u & bit(a)) && !(u & bit(b))) return false;
  return true;
}

// Calls f on every subset of 0..n-1 with at most k elements.
template <typename F>
void for_each_small_subset(int n, int k, Bits chosen, int from, F&& f) {
  f(chosen);
  if (popcount(chosen) == k) return;
  for (int v = from; v < n; ++v) for_each_small_subset(n, k, chosen | bit(v), v + 1, f);
}

}  // namespace

Graph decomposition_host(const Graph& m, const ForbiddenFamily& fam) {
  const int r = fam.r();
  const int t = fam.t();
  if (m.order() + r * t > kMaxOrder) throw CapacityError("decomposition host needs more than 64 vertices");
  const Graph first = disjoint_union(m, empty_graph(t));
  if (r <= 1) return first;
  return join(first, turan_graph((r - 1) * t, r - 1));
}

bool has_decomposition_property(const Graph& m, const ForbiddenFamily& fam) {
  const Graph host = decomposition_host(m, fam);
  for (const Graph& f : fam.members())
    if (contains_subgraph(host, f)) return true;
  return false;
}

DecompositionResult decomposition_family(const ForbiddenFamily& fam, const DecompositionOptions& options) {
  const int t = fam.t();
  if (fam.r() * t + t > kMaxOrder) throw CapacityError("decomposition host needs more than 64 vertices");
  DecompositionResult out;
  out.search_bound = options.max_order > 0 ? std::min(options.max_order, t) : t;
  out.complete = out.search_bound >= t;

  std::mutex mutex;
  std::vector<std::string> found;
  const GenerationStats stats = generate_classes(
      out.search_bound,
      [&](const Graph& g, const CanonicalForm& form, int) {
        if (g.edge_count() == 0) return true;
        if (!has_decomposition_property(g, fam)) return true;
        // Descendants contain g, so none of them can be minimal.
        if (isolated_vertices(g) == 0) {
          std::lock_guard<std::mutex> lock(mutex);
          found.push_back(form.cert);
        }
        return false;
      },
      options.threads);
  out.candidates_examined = stats.visited;

  std::sort(found.begin(), found.end());
  for (const std::string& cert : found) {
    const Graph m = parse_graph6(cert);
    bool minimal = true;
    for (auto [a, b] : edges(m)) {
      Graph smaller = m;
      smaller.remove_edge(a, b);
      if (has_decomposition_property(strip_isolated(smaller), fam)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    out.minimal_members.push_back(cert);
    if (is_bipartite(m)) out.contains_bipartite = true;
  }
  return out;
}

std::vector<std::string> covering_family(const ForbiddenFamily& fam) {
  const int q = fam.q();
  std::vector<std::string> out;
  for (const Graph& f : fam.members()) {
    for_each_small_subset(f.order(), q - 1, 0, 0, [&](Bits u) {
      if (is_vertex_cover(f, u)) out.push_back(canonical_form(induced_subgraph(f, u)).cert);
    });
  }
  if (out.empty()) out.push_back(canonical_form(complete_graph(q)).cert);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace turanlab
