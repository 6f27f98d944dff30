#include "turanlab/subgraph.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "turanlab/construct.hpp"

namespace turanlab {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::undecided:
      return "undecided";
  }
  return "?";
}

SearchBudget SearchBudget::from_environment(SearchBudget fallback) {
  if (const char* env = std::getenv("TURANLAB_BUDGET_MS")) {
    char* end = nullptr;
    const long long ms = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && ms >= 0) fallback.max_ms = ms;
  }
  return fallback;
}

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  explicit Meter(const SearchBudget& b) : budget_(b) {
    if (b.max_ms > 0) deadline_ = Clock::now() + std::chrono::milliseconds(b.max_ms);
  }

  // False once the budget is exhausted.
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes > 0 && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_ms > 0 && (nodes_ & 1023) == 0 && Clock::now() > deadline_) exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  Clock::time_point deadline_{};
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

// For every host vertex, the lower vertices it is interchangeable with: same
// open neighbourhood (non-adjacent twins) or same closed neighbourhood.
std::array<Bits, kMaxOrder> lower_twins(const Graph& h) {
  std::array<Bits, kMaxOrder> out{};
  for (int v = 0; v < h.order(); ++v) {
    for (int w = 0; w < v; ++w) {
      const Bits nv = h.neighbors(v) & ~bit(w);
      const Bits nw = h.neighbors(w) & ~bit(v);
      if (nv == nw) out[v] |= bit(w);
    }
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, const SearchBudget& budget)
      : h_(host), p_(pattern), k_(pattern.order()), meter_(budget) {}

  Containment run() {
    Containment out;
    if (!feasible()) {
      out.decision = Decision::no;
      return out;
    }
    order_pattern();
    twins_ = lower_twins(h_);
    levels_.resize(k_ + 1);
    for (int i = 0; i < k_; ++i) {
      Bits dom = 0;
      const int d = p_.degree(order_[i]);
      for (int v = 0; v < h_.order(); ++v)
        if (h_.degree(v) >= d) dom |= bit(v);
      levels_[0][i] = dom;
    }
    map_.assign(k_, -1);
    const bool found = search(0, 0);
    out.nodes = meter_.nodes();
    if (found) {
      out.decision = Decision::yes;
      out.witness.assign(k_, -1);
      for (int i = 0; i < k_; ++i) out.witness[order_[i]] = map_[i];
    } else {
      out.decision = meter_.exhausted() ? Decision::undecided : Decision::no;
    }
    return out;
  }

 private:
  bool feasible() const {
    if (k_ > h_.order() || p_.edge_count() > h_.edge_count()) return false;
    std::vector<int> dp = degree_sequence(p_);
    std::vector<int> dh = degree_sequence(h_);
    std::sort(dp.rbegin(), dp.rend());
    std::sort(dh.rbegin(), dh.rend());
    for (int i = 0; i < k_; ++i)
      if (dp[i] > dh[i]) return false;
    return true;
  }

  // Highest degree first, then greedily the vertex with most already-placed
  // neighbours (ties: degree, then index).
  void order_pattern() {
    Bits placed = 0;
    while (static_cast<int>(order_.size()) < k_) {
      int best = -1;
      std::pair<int, int> key{-1, -1};
      for (int u : bits_of(p_.vertex_mask() & ~placed)) {
        const std::pair<int, int> mine{popcount(p_.neighbors(u) & placed), p_.degree(u)};
        if (mine > key) {
          key = mine;
          best = u;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
    later_nbrs_.assign(k_, 0);
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < k_; ++i) pos[order_[i]] = i;
    for (int i = 0; i < k_; ++i)
      for (int w : bits_of(p_.neighbors(order_[i])))
        if (pos[w] > i) later_nbrs_[i] |= bit(pos[w]);
  }

  bool search(int depth, Bits used) {
    if (depth == k_) return true;
    const auto& cur = levels_[depth];
    auto& next = levels_[depth + 1];
    for (int v : bits_of(cur[depth] & ~used)) {
      if (twins_[v] & ~used) continue;
      if (!meter_.tick()) return false;
      const Bits nv = h_.neighbors(v);
      const Bits nused = used | bit(v);
      bool ok = true;
      Bits pool = 0;
      for (int j = depth + 1; j < k_; ++j) {
        Bits c = cur[j] & ~nused;
        if (later_nbrs_[depth] & bit(j)) c &= nv;
        if (c == 0) {
          ok = false;
          break;
        }
        next[j] = c;
        pool |= c;
      }
      if (!ok || popcount(pool) < k_ - depth - 1) continue;
      map_[depth] = v;
      if (search(depth + 1, nused)) return true;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& h_;
  const Graph& p_;
  int k_;
  Meter meter_;
  std::vector<int> order_;
  std::vector<Bits> later_nbrs_;
  std::array<Bits, kMaxOrder> twins_{};
  std::vector<std::array<Bits, kMaxOrder>> levels_;
  std::vector<int> map_;
};

// Greedy colouring of `cand` in ascending vertex order; bounds[i] is the
// number of colours in use once verts[i] is placed.
void colour_sort(const Graph& g, Bits cand, std::vector<int>& verts, std::vector<int>& bounds) {
  verts.clear();
  bounds.clear();
  int colour = 0;
  while (cand) {
    ++colour;
    Bits avail = cand;
    while (avail) {
      const int v = lowest(avail);
      avail &= ~bit(v) & ~g.neighbors(v);
      cand &= ~bit(v);
      verts.push_back(v);
      bounds.push_back(colour);
    }
  }
}

void expand_clique(const Graph& g, Bits current, int size, Bits cand, Bits& best, int& best_size) {
  std::vector<int> verts;
  std::vector<int> bounds;
  colour_sort(g, cand, verts, bounds);
  for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
    if (size + bounds[i] <= best_size) return;
    const int v = verts[i];
    const Bits grown = current | bit(v);
    const Bits next = cand & g.neighbors(v);
    if (next == 0) {
      if (size + 1 > best_size) {
        best_size = size + 1;
        best = grown;
      }
    } else {
      expand_clique(g, grown, size + 1, next, best, best_size);
    }
    cand &= ~bit(v);
  }
}

// DSATUR greedy colouring; returns the number of colours used.
int dsatur_colours(const Graph& g) {
  std::vector<Bits> classes;
  Bits uncoloured = g.vertex_mask();
  while (uncoloured) {
    int pick = -1;
    std::pair<int, int> key{-1, -1};
    for (int v : bits_of(uncoloured)) {
      int sat = 0;
      for (Bits c : classes)
        if (g.neighbors(v) & c) ++sat;
      const std::pair<int, int> mine{sat, popcount(g.neighbors(v) & uncoloured)};
      if (mine > key) {
        key = mine;
        pick = v;
      }
    }
    std::size_t c = 0;
    while (c < classes.size() && (g.neighbors(pick) & classes[c])) ++c;
    if (c == classes.size()) classes.push_back(0);
    classes[c] |= bit(pick);
    uncoloured &= ~bit(pick);
  }
  return static_cast<int>(classes.size());
}

bool colour_search(const Graph& g, int k, std::vector<Bits>& classes, int used, Bits uncoloured) {
  if (uncoloured == 0) return true;
  int pick = -1;
  std::pair<int, int> key{-1, -1};
  for (int v : bits_of(uncoloured)) {
    int sat = 0;
    for (int c = 0; c < used; ++c)
      if (g.neighbors(v) & classes[c]) ++sat;
    if (sat == k) return false;
    const std::pair<int, int> mine{sat, popcount(g.neighbors(v) & uncoloured)};
    if (mine > key) {
      key = mine;
      pick = v;
    }
  }
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (g.neighbors(pick) & classes[c]) continue;
    classes[c] |= bit(pick);
    const bool ok = colour_search(g, k, classes, std::max(used, c + 1), uncoloured & ~bit(pick));
    classes[c] &= ~bit(pick);
    if (ok) return true;
  }
  return false;
}

}  // namespace

Containment find_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget) {
  return Matcher(host, pattern, budget).run();
}

std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern) {
  Containment c = find_subgraph(host, pattern);
  if (c.decision == Decision::yes) return std::move(c.witness);
  return std::nullopt;
}

bool is_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& witness) {
  if (static_cast<int>(witness.size()) != pattern.order()) return false;
  Bits seen = 0;
  for (int v : witness) {
    if (v < 0 || v >= host.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (auto [u, v] : edges(pattern))
    if (!host.has_edge(witness[u], witness[v])) return false;
  return true;
}

Bits maximum_clique(const Graph& g) {
  if (g.order() == 0) return 0;
  Bits best = bit(0);
  int best_size = 1;
  expand_clique(g, 0, 0, g.vertex_mask(), best, best_size);
  return best;
}

int clique_number(const Graph& g) { return g.order() == 0 ? 0 : popcount(maximum_clique(g)); }

bool is_colourable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  std::vector<Bits> classes(k, 0);
  return colour_search(g, k, classes, 0, g.vertex_mask());
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lower = clique_number(g);
  const int upper = dsatur_colours(g);
  for (int k = lower; k < upper; ++k)
    if (is_colourable(g, k)) return k;
  return upper;
}

int covering_number(const Graph& g) { return g.order() - clique_number(complement(g)); }

int independent_covering_order(const Graph& g) {
  Bits side = 0;
  if (!bipartition(g, side)) throw std::invalid_argument("independent covering order needs a bipartite graph");
  // On a connected bipartite component an independent cover is one whole side.
  int total = 0;
  for (Bits comp : connected_components(g)) {
    if (popcount(comp) < 2) continue;
    const int a = popcount(comp & side);
    total += std::min(a, popcount(comp) - a);
  }
  return total;
}

struct ForbiddenFamily::Cache {
  std::once_flag once;
  int q = 0;
};

ForbiddenFamily::ForbiddenFamily(std::vector<Graph> members, std::string name)
    : members_(std::move(members)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  if (members_.empty()) throw std::invalid_argument("forbidden family is empty");
  r_ = kMaxOrder;
  for (const Graph& f : members_) {
    if (f.edge_count() == 0) throw std::invalid_argument("forbidden family member without edges");
    chi_.push_back(chromatic_number(f));
    r_ = std::min(r_, chi_.back() - 1);
    t_ = std::max(t_, f.order());
  }
}

int ForbiddenFamily::q() const {
  std::call_once(cache_->once, [this] { cache_->q = family_q(*this); });
  return cache_->q;
}

FreenessCheck check_family_free(const Graph& host, const ForbiddenFamily& fam, const SearchBudget& budget) {
  FreenessCheck out;
  bool undecided = false;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Containment c = find_subgraph(host, fam[i], budget);
    out.nodes += c.nodes;
    if (c.decision == Decision::yes) {
      out.free = Decision::no;
      out.member = static_cast<int>(i);
      out.witness = std::move(c.witness);
      return out;
    }
    if (c.decision == Decision::undecided) undecided = true;
  }
  out.free = undecided ? Decision::undecided : Decision::yes;
  return out;
}

bool is_family_free(const Graph& host, const ForbiddenFamily& fam) {
  return check_family_free(host, fam).free == Decision::yes;
}

int family_q(const ForbiddenFamily& fam) {
  const int r = fam.r();
  const int t = fam.t();
  const Graph base = turan_graph(t * r, r);
  for (int s = 0; s <= t; ++s) {
    if (base.order() + s > kMaxOrder)
      throw CapacityError("q(family) needs a host on " + std::to_string(base.order() + s) + " vertices");
    const Graph host = join(empty_graph(s), base);
    for (const Graph& f : fam.members())
      if (contains_subgraph(host, f)) return s;
  }
  throw std::logic_error("q(family): no member embeds even with s = t");
}

std::optional<int> family_q_bipartite(const ForbiddenFamily& fam) {
  std::optional<int> best;
  for (const Graph& f : fam.members()) {
    if (!is_bipartite(f)) continue;
    const int q = independent_covering_order(f);
    if (!best || q < *best) best = q;
  }
  return best;
}

}  // namespace turanlab
