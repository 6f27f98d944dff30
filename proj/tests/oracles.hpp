#ifndef TURANLAB_TESTS_ORACLES_HPP
#define TURANLAB_TESTS_ORACLES_HPP

// Slow reference implementations for the tests.  They use nothing from the
// library beyond Graph's accessors, so an agreement is evidence rather than
// an echo.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace oracle {

using turanlab::Bits;
using turanlab::Graph;

inline Bits bit(int v) { return Bits{1} << v; }

inline int count_bits(Bits x) {
  int c = 0;
  for (; x; x &= x - 1) ++c;
  return c;
}

inline int edges(const Graph& g) {
  int e = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) e += g.has_edge(u, v);
  return e;
}

inline Graph make(int n, const std::vector<std::pair<int, int>>& es) {
  Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

// Tries every injective map of pattern vertices into host vertices.
inline bool contains(const Graph& host, const Graph& pattern) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> step = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(i, j) && !host.has_edge(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      if (step(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return step(0);
}

inline bool is_clique(const Graph& g, Bits s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((s & bit(u)) && (s & bit(v)) && !g.has_edge(u, v)) return false;
  return true;
}

inline bool is_independent(const Graph& g, Bits s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((s & bit(u)) && (s & bit(v)) && g.has_edge(u, v)) return false;
  return true;
}

inline bool is_cover(const Graph& g, Bits s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v) && !(s & bit(u)) && !(s & bit(v))) return false;
  return true;
}

// Subset enumeration; fine up to ~20 vertices.
inline int clique_number(const Graph& g) {
  int best = 0;
  for (Bits s = 0; s < (Bits{1} << g.order()); ++s)
    if (count_bits(s) > best && is_clique(g, s)) best = count_bits(s);
  return best;
}

inline int covering_number(const Graph& g) {
  int best = g.order();
  for (Bits s = 0; s < (Bits{1} << g.order()); ++s)
    if (count_bits(s) < best && is_cover(g, s)) best = count_bits(s);
  return best;
}

// Smallest independent vertex cover; none when the graph is not bipartite.
inline std::optional<int> independent_covering(const Graph& g) {
  std::optional<int> best;
  for (Bits s = 0; s < (Bits{1} << g.order()); ++s)
    if (is_cover(g, s) && is_independent(g, s) && (!best || count_bits(s) < *best)) best = count_bits(s);
  return best;
}

// Every assignment of k colours, vertex by vertex.
inline bool colourable(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> c(n, -1);
  std::function<bool(int)> step = [&](int v) {
    if (v == n) return true;
    for (int col = 0; col < k; ++col) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) && c[u] == col) ok = false;
      if (!ok) continue;
      c[v] = col;
      if (step(v + 1)) return true;
    }
    return false;
  };
  return step(0);
}

inline int chromatic_number(const Graph& g) {
  int k = 0;
  while (!colourable(g, k)) ++k;
  return k;
}

// Adjacency bit string under a relabeling; minimum over all n! of them.
inline std::string code(const Graph& g, const std::vector<int>& p) {
  std::string s;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) s += g.has_edge(p[i], p[j]) ? '1' : '0';
  return s;
}

inline std::string canonical(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::string best = code(g, p);
  while (std::next_permutation(p.begin(), p.end())) best = std::min(best, code(g, p));
  return std::to_string(g.order()) + ":" + best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && oracle::edges(a) == oracle::edges(b) && canonical(a) == canonical(b);
}

inline Graph from_code(int n, std::uint32_t mask) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) g.add_edge(i, j);
  return g;
}

inline std::int64_t class_count(int n) {
  std::set<std::string> seen;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << pairs); ++m) seen.insert(canonical(from_code(n, m)));
  return static_cast<std::int64_t>(seen.size());
}

struct Extremal {
  int ex = -1;
  std::set<std::string> classes;  // oracle::canonical strings
};

// All labeled graphs on n <= 6 vertices.
inline Extremal extremal(int n, const std::vector<Graph>& forbidden) {
  Extremal out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << pairs); ++m) {
    const int e = count_bits(m);
    if (e < out.ex) continue;
    const Graph g = from_code(n, m);
    bool free = true;
    for (const Graph& f : forbidden)
      if (contains(g, f)) free = false;
    if (!free) continue;
    if (e > out.ex) {
      out.ex = e;
      out.classes.clear();
    }
    out.classes.insert(canonical(g));
  }
  return out;
}

// Pairs of non-adjacent vertices with equal neighbourhoods, closed up.
inline std::vector<std::vector<int>> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(out.size());
    out.push_back({u});
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] >= 0 || g.has_edge(u, v)) continue;
      bool same = true;
      for (int w = 0; w < n && same; ++w)
        if (w != u && w != v && g.has_edge(u, w) != g.has_edge(v, w)) same = false;
      if (same) {
        cls[v] = cls[u];
        out.back().push_back(v);
      }
    }
  }
  return out;
}

// Does V split as W (|W| = q-1) plus r balanced parts S_i, each missing at
// most t^2 vertices whose neighbourhood is exactly V - S_i?  Every labeled
// assignment is tried.
inline bool has_shape(const Graph& g, int q, int r, int t) {
  const int n = g.order();
  const int rest = n - (q - 1);
  if (q < 1 || r < 1 || rest < r) return false;
  const int lo = rest / r, hi = (rest + r - 1) / r;
  std::vector<int> label(n, 0);  // 0 = W, 1..r = part
  std::vector<int> size(r + 1, 0);
  std::function<bool(int)> step = [&](int v) {
    if (v == n) {
      if (size[0] != q - 1) return false;
      for (int i = 1; i <= r; ++i)
        if (size[i] < lo || size[i] > hi) return false;
      for (int i = 1; i <= r; ++i) {
        int core = 0;
        for (int x = 0; x < n; ++x) {
          if (label[x] != i) continue;
          bool good = true;
          for (int y = 0; y < n && good; ++y)
            if (y != x && g.has_edge(x, y) != (label[y] != i)) good = false;
          core += good;
        }
        if (size[i] - core > t * t) return false;
      }
      return true;
    }
    for (int l = 0; l <= r; ++l) {
      if (size[l] == (l == 0 ? q - 1 : hi)) continue;
      label[v] = l;
      ++size[l];
      const bool found = step(v + 1);
      --size[l];
      if (found) return true;
    }
    return false;
  };
  return step(0);
}

// Direct encoder written from the format description: N(n), then the bits
// x(0,1) x(0,2) x(1,2) x(0,3) ... in groups of six, each plus 63.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else {
    s += '~';
    for (int shift = 12; shift >= 0; shift -= 6) s += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
    s += static_cast<char>(v + 63);
  }
  return s;
}

inline long long turan_edges(int n, int r) {
  if (r <= 0) return 0;
  std::vector<int> size(r, 0);
  for (int v = 0; v < n; ++v) ++size[v % r];
  long long e = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) e += static_cast<long long>(size[i]) * size[j];
  return e;
}

// Blocks given as isos[j][i] = image of the i-th vertex of the first block.
// Checks disjointness, connectivity, the isomorphisms, equal wiring to the
// outside, and (when asked) the absence of edges between blocks.
inline bool symmetric_blocks(const Graph& g, const std::vector<std::vector<int>>& isos, bool forbid_cross_edges) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  for (std::size_t j = 0; j < isos.size(); ++j)
    for (int v : isos[j]) {
      if (v < 0 || v >= n || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(j);
    }
  const std::size_t k = isos.empty() ? 0 : isos[0].size();
  for (const auto& block : isos) {
    if (block.size() != k) return false;
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < k; ++b)
        if (!seen[b] && g.has_edge(block[a], block[b])) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(k)) return false;
  }
  for (std::size_t j = 1; j < isos.size(); ++j) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (g.has_edge(isos[0][a], isos[0][b]) != g.has_edge(isos[j][a], isos[j][b])) return false;
    for (std::size_t a = 0; a < k; ++a)
      for (int v = 0; v < n; ++v)
        if (owner[v] < 0 && g.has_edge(isos[0][a], v) != g.has_edge(isos[j][a], v)) return false;
  }
  if (forbid_cross_edges)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v] && g.has_edge(u, v)) return false;
  return true;
}

}  // namespace oracle

#endif  // TURANLAB_TESTS_ORACLES_HPP
