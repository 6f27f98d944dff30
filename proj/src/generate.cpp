#include "turanlab/generate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>
#include <vector>

namespace turanlab {

bool is_canonical_extension(const Graph& child, int added, const CanonicalForm& form) {
  const int last = form.order.back();
  if (last == added) return true;
  if (child.degree(last) != child.degree(added)) return false;
  const std::vector<int> cells = equitable_cells(child);
  if (cells[last] != cells[added]) return false;
  const std::vector<int> orbit = orbit_representatives(child.order(), form.automorphisms);
  if (orbit[last] == orbit[added]) return true;
  // The generators found may not span the whole group; settle it exactly.
  std::vector<int> colours(child.order(), 0);
  colours[added] = 1;
  const std::string a = canonical_form(child, colours).cert;
  colours[added] = 0;
  colours[last] = 1;
  return a == canonical_form(child, colours).cert;
}

void for_each_canonical_child(const Graph& g, const std::function<void(const Graph&, const CanonicalForm&)>& emit) {
  const int n = g.order();
  if (n >= kMaxOrder) throw CapacityError("cannot extend a graph on 64 vertices");
  std::unordered_set<std::string> seen;
  const Bits limit = n == 63 ? ~Bits{0} : bit(n) - 1;
  for (Bits s = 0;; ++s) {
    Graph child = g;
    child.add_vertex(s);
    CanonicalForm form = canonical_form(child);
    if (is_canonical_extension(child, n, form) && seen.insert(form.cert).second) emit(child, form);
    if (s == limit) break;
  }
}

namespace {

void descend(const Graph& g, const CanonicalForm& form, int max_order, const ClassVisitor& visit, int worker,
             std::int64_t& visited) {
  ++visited;
  if (!visit(g, form, worker) || g.order() >= max_order) return;
  for_each_canonical_child(g, [&](const Graph& child, const CanonicalForm& cf) {
    descend(child, cf, max_order, visit, worker, visited);
  });
}

}  // namespace

GenerationStats generate_classes(int max_order, const ClassVisitor& visit, int threads) {
  GenerationStats stats;
  const Graph root(0);
  const CanonicalForm root_form = canonical_form(root);
  if (threads <= 1 || max_order < 4) {
    descend(root, root_form, max_order, visit, 0, stats.visited);
    return stats;
  }
  // Serial part down to the split order, collecting the frontier.
  const int split = std::min(max_order - 1, 4);
  std::vector<std::pair<Graph, CanonicalForm>> frontier;
  std::function<void(const Graph&, const CanonicalForm&)> walk = [&](const Graph& g, const CanonicalForm& form) {
    if (g.order() == split) {
      frontier.emplace_back(g, form);
      return;
    }
    ++stats.visited;
    if (!visit(g, form, 0)) return;
    for_each_canonical_child(g, walk);
  };
  walk(root, root_form);

  std::vector<std::int64_t> counts(threads, 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < frontier.size(); i += threads)
        descend(frontier[i].first, frontier[i].second, max_order, visit, w, counts[w]);
    });
  }
  for (std::thread& t : pool) t.join();
  for (std::int64_t c : counts) stats.visited += c;
  return stats;
}

}  // namespace turanlab
