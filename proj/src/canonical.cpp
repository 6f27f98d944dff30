#include "turanlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "turanlab/graph6.hpp"

namespace turanlab {

namespace {

using Trace = std::vector<std::uint32_t>;
using Cells = std::vector<Bits>;

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

// Splits cells by neighbour counts into the splitters on the queue until the
// partition is equitable.  Everything depends on cell positions only, so the
// trace is an isomorphism invariant.
void refine(const Graph& g, Cells& cells, std::vector<Bits> queue, Trace& trace) {
  std::array<int, kMaxOrder + 1> bucket_count{};
  std::array<Bits, kMaxOrder + 1> bucket_mask{};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Bits splitter = queue[qi];
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      const Bits cell = cells[idx];
      if (popcount(cell) == 1) continue;
      int lo = kMaxOrder + 1;
      int hi = -1;
      for (int v : bits_of(cell)) {
        const int c = popcount(g.neighbors(v) & splitter);
        if (bucket_count[c]++ == 0) bucket_mask[c] = 0;
        bucket_mask[c] |= bit(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) {
        bucket_count[lo] = 0;
        continue;
      }
      Cells fragments;
      trace.push_back(static_cast<std::uint32_t>(idx));
      for (int c = lo; c <= hi; ++c) {
        if (bucket_count[c] == 0) continue;
        fragments.push_back(bucket_mask[c]);
        trace.push_back(static_cast<std::uint32_t>(c));
        trace.push_back(static_cast<std::uint32_t>(bucket_count[c]));
        bucket_count[c] = 0;
      }
      cells[idx] = fragments.front();
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, fragments.begin() + 1, fragments.end());
      for (Bits f : fragments) queue.push_back(f);
      idx += fragments.size() - 1;
    }
  }
  trace.push_back(static_cast<std::uint32_t>(cells.size()));
}

int compare_rows(const std::vector<Bits>& a, const std::vector<Bits>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct Leaf {
  std::vector<int> path;
  std::vector<Trace> traces;
  std::vector<Bits> rows;
  std::vector<int> order;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Cells cells, std::vector<Bits> initial_queue) {
    Trace root;
    refine(g_, cells, std::move(initial_queue), root);
    traces_.push_back(std::move(root));
    search(std::move(cells), 0);
  }

  const Leaf& best() const { return best_; }
  std::vector<Permutation>& generators() { return generators_; }

 private:
  // -1: both prefixes equal so far; otherwise comparison at the first
  // differing level.
  static int compare_prefix(const std::vector<Trace>& a, const std::vector<Trace>& b, int level) {
    for (int l = 0; l <= level; ++l) {
      if (l >= static_cast<int>(b.size())) return 1;
      if (a[l] != b[l]) return a[l] < b[l] ? -1 : 1;
    }
    return 0;
  }

  bool skip_by_orbit(int v, Bits tried) const {
    if (generators_.empty() || tried == 0) return false;
    UnionFind uf(n_);
    for (const Permutation& p : generators_) {
      bool fixes = true;
      for (int u : path_) {
        if (p[u] != u) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, p[x]);
    }
    const int root = uf.find(v);
    for (int u : bits_of(tried))
      if (uf.find(u) == root) return true;
    return false;
  }

  std::vector<Bits> relabeled_rows(const std::vector<int>& order) const {
    std::array<int, kMaxOrder> position{};
    for (int i = 0; i < n_; ++i) position[order[i]] = i;
    std::vector<Bits> rows(n_);
    for (int i = 0; i < n_; ++i) {
      Bits r = 0;
      for (int u : bits_of(g_.neighbors(order[i]))) r |= bit(position[u]);
      rows[i] = r;
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Permutation p(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      p[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(p));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(std::min(a.size(), b.size())) && a[k] == b[k]) ++k;
    return k;
  }

  Leaf make_leaf(const Cells& cells) const {
    Leaf leaf;
    leaf.path = path_;
    leaf.traces = traces_;
    leaf.order.resize(n_);
    for (int i = 0; i < n_; ++i) leaf.order[i] = lowest(cells[i]);
    leaf.rows = relabeled_rows(leaf.order);
    return leaf;
  }

  // Returns the level to resume at, or -1 to continue normally.
  int search(Cells cells, int level) {
    const bool eq_first = have_first_ && compare_prefix(traces_, first_.traces, level) == 0;
    const int cmp_best = have_first_ ? compare_prefix(traces_, best_.traces, level) : 1;
    if (have_first_ && !eq_first && cmp_best < 0) return -1;

    if (static_cast<int>(cells.size()) == n_) {
      if (!have_first_) {
        first_ = make_leaf(cells);
        best_ = first_;
        have_first_ = true;
        return -1;
      }
      std::vector<int> order(n_);
      for (int i = 0; i < n_; ++i) order[i] = lowest(cells[i]);
      std::vector<Bits> rows = relabeled_rows(order);
      if (eq_first && rows == first_.rows) {
        record_automorphism(first_.order, order);
        return common_prefix(path_, first_.path);
      }
      if (cmp_best == 0) {
        const int c = compare_rows(rows, best_.rows);
        if (c == 0) {
          record_automorphism(best_.order, order);
          return common_prefix(path_, best_.path);
        }
        if (c > 0) best_ = Leaf{path_, traces_, std::move(rows), std::move(order)};
      } else if (cmp_best > 0) {
        best_ = Leaf{path_, traces_, std::move(rows), std::move(order)};
      }
      return -1;
    }

    std::size_t target = 0;
    while (popcount(cells[target]) == 1) ++target;
    const Bits cell = cells[target];
    Bits tried = 0;
    for (int v : bits_of(cell)) {
      if (skip_by_orbit(v, tried)) continue;
      tried |= bit(v);
      Cells child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~bit(v));
      Trace trace;
      refine(g_, child, {bit(v)}, trace);
      path_.push_back(v);
      traces_.push_back(std::move(trace));
      const int jump = search(std::move(child), level + 1);
      path_.pop_back();
      traces_.pop_back();
      if (jump >= 0 && jump < level) return jump;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<int> path_;
  std::vector<Trace> traces_;
  std::vector<Permutation> generators_;
};

CanonicalForm finish(const Graph& g, Canonizer& canon, std::span<const int> colours) {
  CanonicalForm out;
  out.order = canon.best().order;
  out.cert = write_graph6(relabel(g, out.order));
  if (!colours.empty()) {
    out.cert.push_back(':');
    for (int v : out.order) {
      out.cert += std::to_string(colours[v]);
      out.cert.push_back(',');
    }
  }
  out.automorphisms = std::move(canon.generators());
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return CanonicalForm{write_graph6(g), {}, {}};
  Canonizer canon(g);
  canon.run({g.vertex_mask()}, {g.vertex_mask()});
  return finish(g, canon, {});
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours) {
  if (static_cast<int>(colours.size()) != g.order())
    throw std::invalid_argument("canonical_form: colour vector size mismatch");
  if (g.order() == 0) return CanonicalForm{write_graph6(g) + ":", {}, {}};
  std::vector<int> values(colours.begin(), colours.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Cells cells(values.size(), 0);
  for (int v = 0; v < g.order(); ++v) {
    const auto it = std::lower_bound(values.begin(), values.end(), colours[v]);
    cells[static_cast<std::size_t>(it - values.begin())] |= bit(v);
  }
  Canonizer canon(g);
  canon.run(cells, cells);
  return finish(g, canon, colours);
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).order); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da = degree_sequence(a);
  std::vector<int> db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).cert == canonical_form(b).cert;
}

std::vector<int> orbit_representatives(int n, std::span<const Permutation> generators) {
  UnionFind uf(n);
  for (const Permutation& p : generators)
    for (int x = 0; x < n; ++x) uf.unite(x, p[x]);
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = uf.find(x);
  return out;
}

std::vector<int> equitable_cells(const Graph& g) {
  Cells cells{g.vertex_mask()};
  std::vector<int> out(g.order(), 0);
  if (g.order() == 0) return out;
  Trace trace;
  refine(g, cells, {g.vertex_mask()}, trace);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (int v : bits_of(cells[i])) out[v] = static_cast<int>(i);
  return out;
}

}  // namespace turanlab
