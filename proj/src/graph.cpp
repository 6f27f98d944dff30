#include "turanlab/graph.hpp"

#include <sstream>

namespace turanlab {

Bits mask_of(std::span<const int> vertices) {
  Bits m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxOrder) throw std::out_of_range("vertex index out of range");
    m |= bit(v);
  }
  return m;
}

std::vector<int> vertices_of(Bits mask) {
  std::vector<int> out;
  out.reserve(popcount(mask));
  for (int v : bits_of(mask)) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxOrder) throw CapacityError("graph order " + std::to_string(n) + " exceeds 64");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edge_list) {
  Graph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return from_edges(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

int Graph::add_vertex(Bits neighborhood) {
  if (n_ == kMaxOrder) throw CapacityError("graph order would exceed 64");
  if (neighborhood & ~low_mask(n_)) throw std::out_of_range("neighbourhood references missing vertices");
  const int v = n_++;
  rows_[v] = neighborhood;
  for (int u : bits_of(neighborhood)) rows_[u] |= bit(v);
  return v;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.rows_[v] != b.rows_[v]) return false;
  return true;
}

std::vector<std::pair<int, int>> edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v : bits_of(g.neighbors(u) & ~low_mask(u + 1))) out.emplace_back(u, v);
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  const Bits all = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v)
    for (int u : bits_of(all & ~g.neighbors(v) & ~low_mask(v + 1))) h.add_edge(v, u);
  return h;
}

namespace {

// Builds the graph on `keep` (in the given order) without validation.
Graph pick(const Graph& g, std::span<const int> keep) {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

}  // namespace

Graph induced_subgraph(const Graph& g, Bits s) {
  if (s & ~g.vertex_mask()) throw std::out_of_range("induced_subgraph: vertex outside graph");
  const std::vector<int> keep = vertices_of(s);
  return pick(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
  for (int v : s)
    if (v < 0 || v >= g.order()) throw std::out_of_range("induced_subgraph: vertex outside graph");
  return induced_subgraph(g, mask_of(s));
}

Graph remove_vertices(const Graph& g, Bits s) { return induced_subgraph(g, g.vertex_mask() & ~s); }

Graph relabel(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order()) throw std::invalid_argument("relabel: order size mismatch");
  if (mask_of(order) != g.vertex_mask()) throw std::invalid_argument("relabel: not a permutation");
  return pick(g, order);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxOrder) throw CapacityError("disjoint union exceeds 64 vertices");
  Graph h = a;
  const int off = a.order();
  for (int v = 0; v < b.order(); ++v) h.add_vertex((b.neighbors(v) & low_mask(v)) << off);
  return h;
}

Graph join(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxOrder) throw CapacityError("join exceeds 64 vertices");
  Graph h = a;
  const int off = a.order();
  for (int v = 0; v < b.order(); ++v) h.add_vertex(((b.neighbors(v) & low_mask(v)) << off) | a.vertex_mask());
  return h;
}

std::vector<Bits> connected_components(const Graph& g, Bits within) {
  std::vector<Bits> out;
  Bits rest = within & g.vertex_mask();
  while (rest) {
    Bits comp = bit(lowest(rest));
    Bits frontier = comp;
    while (frontier) {
      Bits next = 0;
      for (int v : bits_of(frontier)) next |= g.neighbors(v);
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

std::vector<Bits> connected_components(const Graph& g) { return connected_components(g, g.vertex_mask()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool bipartition(const Graph& g, Bits& side) {
  side = 0;
  for (Bits comp : connected_components(g)) {
    Bits colour0 = bit(lowest(comp));
    Bits colour1 = 0;
    Bits frontier = colour0;
    bool even = true;
    while (frontier) {
      Bits next = 0;
      for (int v : bits_of(frontier)) next |= g.neighbors(v);
      if (even) {
        if (next & colour0) return false;
        next &= ~colour1;
        colour1 |= next;
      } else {
        if (next & colour1) return false;
        next &= ~colour0;
        colour0 |= next;
      }
      frontier = next;
      even = !even;
    }
    side |= colour0;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  Bits side = 0;
  return bipartition(g, side);
}

Bits isolated_vertices(const Graph& g) {
  Bits out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) out |= bit(v);
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ':';
  bool first = true;
  for (auto [u, v] : edges(g)) {
    os << (first ? " " : ", ") << u << '-' << v;
    first = false;
  }
  return os.str();
}

}  // namespace turanlab
