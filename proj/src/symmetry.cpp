#include "turanlab/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"

namespace turanlab {

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  Meter(const SearchBudget& b, bool active) : budget_(b), active_(active) {
    if (active_ && b.max_ms > 0) deadline_ = Clock::now() + std::chrono::milliseconds(b.max_ms);
  }
  bool tick() {
    ++count_;
    if (!active_) return true;
    if (budget_.max_nodes > 0 && count_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_ms > 0 && (count_ & 255) == 0 && Clock::now() > deadline_) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::int64_t count() const { return count_; }

 private:
  SearchBudget budget_;
  bool active_;
  Clock::time_point deadline_{};
  std::int64_t count_ = 0;
  bool exhausted_ = false;
};

bool connected_within(const Graph& g, Bits s) {
  if (s == 0) return false;
  Bits seen = bit(lowest(s));
  Bits frontier = seen;
  while (frontier) {
    const int v = lowest(frontier);
    frontier &= frontier - 1;
    const Bits fresh = g.neighbors(v) & s & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == s;
}

// Backtracking search for psi : a -> b that is an isomorphism of the induced
// subgraphs and preserves adjacency to every vertex of `outside`.
bool find_block_isomorphism(const Graph& g, Bits a, Bits b, Bits outside, std::vector<int>* image) {
  if (popcount(a) != popcount(b)) return false;
  const std::vector<int> av = vertices_of(a);
  const int k = static_cast<int>(av.size());
  std::vector<int> map(k, -1);
  std::function<bool(int, Bits)> step = [&](int i, Bits used) {
    if (i == k) return true;
    const int u = av[i];
    const Bits sig = g.neighbors(u) & outside;
    for (int w : bits_of(b & ~used)) {
      if ((g.neighbors(w) & outside) != sig) continue;
      if (popcount(g.neighbors(w) & b) != popcount(g.neighbors(u) & a)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.has_edge(u, av[j]) == g.has_edge(w, map[j]);
      if (!ok) continue;
      map[i] = w;
      if (step(i + 1, used | bit(w))) return true;
    }
    return false;
  };
  if (!step(0, 0)) return false;
  if (image) *image = map;
  return true;
}

bool pairwise_symmetric(const Graph& g, const std::vector<Bits>& blocks, Bits outside) {
  for (std::size_t j = 1; j < blocks.size(); ++j)
    if (!find_block_isomorphism(g, blocks[0], blocks[j], outside, nullptr)) return false;
  return true;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool lex_less(Bits a, Bits b) { return vertices_of(a) < vertices_of(b); }

}  // namespace

std::vector<Bits> find_symmetric_vertices(const Graph& g) {
  std::vector<Bits> classes;
  Bits left = g.vertex_mask();
  while (left) {
    const int v = lowest(left);
    Bits cls = 0;
    for (int u : bits_of(left))
      if (g.neighbors(u) == g.neighbors(v)) cls |= bit(u);
    classes.push_back(cls);
    left &= ~cls;
  }
  return classes;
}

bool is_symmetric_family(const Graph& g, const SymmetricFamily& fam) {
  if (fam.blocks.empty() || fam.isos.size() != fam.blocks.size()) return false;
  Bits all = 0;
  for (Bits b : fam.blocks) {
    if ((b & ~g.vertex_mask()) || (b & all) || !connected_within(g, b)) return false;
    all |= b;
  }
  const std::vector<int> base = vertices_of(fam.blocks[0]);
  if (fam.isos[0] != base) return false;
  const Bits outside = g.vertex_mask() & ~all;
  for (std::size_t j = 1; j < fam.blocks.size(); ++j) {
    const std::vector<int>& psi = fam.isos[j];
    if (psi.size() != base.size()) return false;
    Bits image = 0;
    for (int w : psi) {
      if (w < 0 || w >= g.order()) return false;
      image |= bit(w);
    }
    if (image != fam.blocks[j]) return false;
    for (std::size_t a = 0; a < base.size(); ++a) {
      if ((g.neighbors(base[a]) & outside) != (g.neighbors(psi[a]) & outside)) return false;
      for (std::size_t b = a + 1; b < base.size(); ++b)
        if (g.has_edge(base[a], base[b]) != g.has_edge(psi[a], psi[b])) return false;
    }
  }
  return true;
}

SymmetricSearch find_symmetric_families(const Graph& g, int k, int tau_min, const SearchBudget& budget) {
  if (k < 1) throw std::invalid_argument("block order must be at least 1");
  SymmetricSearch out;
  const int n = g.order();
  if (k > n) return out;
  Meter meter(budget, k > 3 || n > 24);
  const std::vector<std::vector<int>> perms = k <= 6 ? all_permutations(k) : std::vector<std::vector<int>>{};

  struct Entry {
    Bits set;
    std::vector<int> aligned;  // vertices in the ordering that attains the signature
  };
  std::map<std::string, std::vector<Entry>> groups;

  auto record = [&](Bits q) {
    const std::vector<int> qv = vertices_of(q);
    const Graph sub = induced_subgraph(g, q);
    const CanonicalForm cf = canonical_form(sub);
    const Graph canon = relabel(sub, cf.order);
    std::vector<Bits> best_sig;
    std::vector<int> best_order;
    auto consider = [&](const std::vector<int>& pi) {
      std::vector<Bits> sig(k);
      for (int i = 0; i < k; ++i) sig[i] = g.neighbors(qv[pi[i]]) & ~q;
      if (best_order.empty() || sig < best_sig) {
        best_sig = std::move(sig);
        best_order = pi;
      }
    };
    if (k <= 6) {
      for (const std::vector<int>& pi : perms)
        if (relabel(sub, pi) == canon) consider(pi);
    } else {
      consider(cf.order);
    }
    std::string key = cf.cert;
    key.push_back('|');
    for (Bits s : best_sig) key.append(reinterpret_cast<const char*>(&s), sizeof s);
    std::vector<int> aligned(k);
    for (int i = 0; i < k; ++i) aligned[i] = qv[best_order[i]];
    groups[key].push_back(Entry{q, std::move(aligned)});
  };

  // Connected k-sets, each once, grown from their smallest vertex.
  std::function<void(Bits, Bits, int)> grow = [&](Bits sub, Bits ext, int root) {
    if (meter.exhausted()) return;
    if (popcount(sub) == k) {
      if (meter.tick()) record(sub);
      return;
    }
    Bits nbhd = 0;
    for (int v : bits_of(sub)) nbhd |= g.neighbors(v);
    while (ext) {
      const int w = lowest(ext);
      ext &= ext - 1;
      const Bits above = ~low_mask(root + 1);
      const Bits fresh = g.neighbors(w) & above & ~sub & ~nbhd;
      grow(sub | bit(w), ext | fresh, root);
      if (meter.exhausted()) return;
    }
  };
  for (int v = 0; v < n && !meter.exhausted(); ++v) grow(bit(v), g.neighbors(v) & ~low_mask(v + 1), v);

  std::vector<Entry> best;
  std::vector<std::vector<int>> best_key;
  for (auto& [key, entries] : groups) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return lex_less(a.set, b.set); });
    std::vector<Entry> chosen;
    Bits used = 0;
    for (const Entry& e : entries) {
      if (e.set & used) continue;
      chosen.push_back(e);
      used |= e.set;
    }
    std::vector<std::vector<int>> lex;
    for (const Entry& e : chosen) lex.push_back(vertices_of(e.set));
    if (chosen.size() > best.size() || (chosen.size() == best.size() && !chosen.empty() && lex < best_key)) {
      best = std::move(chosen);
      best_key = std::move(lex);
    }
  }
  out.sets_examined = meter.count();
  if (static_cast<int>(best.size()) >= std::max(tau_min, 1)) {
    SymmetricFamily fam;
    const std::vector<int> base = vertices_of(best[0].set);
    for (const Entry& e : best) {
      fam.blocks.push_back(e.set);
      std::vector<int> psi(k);
      for (int i = 0; i < k; ++i) {
        const int pos = static_cast<int>(std::find(base.begin(), base.end(), best[0].aligned[i]) - base.begin());
        psi[pos] = e.aligned[i];
      }
      fam.isos.push_back(std::move(psi));
    }
    out.family = std::move(fam);
    out.found = Decision::yes;
  }
  if (meter.exhausted()) out.found = Decision::undecided;
  return out;
}

Graph replicate(const Graph& g, const SymmetricFamily& fam) {
  if (!is_symmetric_family(g, fam)) throw std::invalid_argument("replicate: not a symmetric family");
  Bits all = 0;
  for (Bits b : fam.blocks) all |= b;
  for (Bits b : fam.blocks)
    for (int v : bits_of(b))
      if (g.neighbors(v) & all & ~b) throw std::invalid_argument("replicate: blocks are adjacent to each other");
  const std::vector<int> base = vertices_of(fam.blocks[0]);
  if (g.order() + static_cast<int>(base.size()) > kMaxOrder)
    throw CapacityError("replicate: result would exceed 64 vertices");
  const Bits outside = g.vertex_mask() & ~all;
  Graph out = g;
  const int first = g.order();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Bits nbhd = g.neighbors(base[i]) & outside;
    for (std::size_t j = 0; j < i; ++j)
      if (g.has_edge(base[i], base[j])) nbhd |= bit(first + static_cast<int>(j));
    out.add_vertex(nbhd);
  }
  return out;
}

// ---------------------------------------------------------------------------
// D(n, r, c)

namespace {

class SymmetryClassSearch {
 public:
  SymmetryClassSearch(const Graph& g, int r, int c, Meter& meter) : g_(g), n_(g.order()), r_(r), c_(c), meter_(meter) {}

  bool size_ok(int size) const { return std::abs(r_ * size - n_) <= r_ * c_; }

  // Whether `part` is a valid part on its own: components of order <= c,
  // pairwise symmetric with respect to everything outside the part.
  bool single_part_ok(Bits part, std::vector<Bits>* blocks) const {
    std::vector<Bits> comps = connected_components(g_, part);
    for (Bits b : comps)
      if (popcount(b) > c_) return false;
    if (!pairwise_symmetric(g_, comps, g_.vertex_mask() & ~part)) return false;
    if (blocks) *blocks = std::move(comps);
    return true;
  }

  std::optional<SymmetryClassCertificate> try_omission(Bits omitted) {
    const Bits rest = g_.vertex_mask() & ~omitted;
    if (rest == 0) return std::nullopt;
    // Co-components of G[rest].
    const Graph co = complement(g_);
    cocomps_ = connected_components(co, rest);
    if (static_cast<int>(cocomps_.size()) < r_) return std::nullopt;
    std::sort(cocomps_.begin(), cocomps_.end(), [](Bits a, Bits b) {
      if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
      return lex_less(a, b);
    });
    alone_ok_.assign(cocomps_.size(), 0);
    for (std::size_t i = 0; i < cocomps_.size(); ++i) alone_ok_[i] = single_part_ok(cocomps_[i], nullptr) ? 1 : 0;
    groups_.clear();
    group_members_.clear();
    if (!assign(0)) return std::nullopt;
    SymmetryClassCertificate cert;
    cert.omitted = omitted;
    for (Bits p : groups_) {
      cert.parts.push_back(p);
      std::vector<Bits> blocks;
      single_part_ok(p, &blocks);
      cert.blocks.push_back(std::move(blocks));
    }
    return cert;
  }

 private:
  bool group_valid(std::size_t j) const {
    if (!size_ok(popcount(groups_[j]))) return false;
    if (group_members_[j] == 1) return alone_ok_[first_member_[j]] != 0;
    return popcount(groups_[j]) <= c_;
  }

  bool assign(std::size_t i) {
    if (!meter_.tick()) return false;
    const std::size_t open = groups_.size();
    if (i == cocomps_.size()) {
      if (static_cast<int>(open) != r_) return false;
      for (std::size_t j = 0; j < open; ++j)
        if (!group_valid(j)) return false;
      return true;
    }
    const std::size_t remaining = cocomps_.size() - i;
    if (static_cast<int>(open) + static_cast<int>(remaining) < r_) return false;
    const Bits cc = cocomps_[i];
    // Join an existing group: only small groups may hold several co-components.
    for (std::size_t j = 0; j < open; ++j) {
      if (popcount(groups_[j] | cc) > c_) continue;
      groups_[j] |= cc;
      ++group_members_[j];
      if (assign(i + 1)) return true;
      groups_[j] &= ~cc;
      --group_members_[j];
      if (meter_.exhausted()) return false;
    }
    if (static_cast<int>(open) < r_) {
      groups_.push_back(cc);
      group_members_.push_back(1);
      first_member_.resize(groups_.size());
      first_member_[open] = i;
      if (assign(i + 1)) return true;
      groups_.pop_back();
      group_members_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int r_;
  int c_;
  Meter& meter_;
  std::vector<Bits> cocomps_;
  std::vector<char> alone_ok_;
  std::vector<Bits> groups_;
  std::vector<int> group_members_;
  std::vector<std::size_t> first_member_;
};

// Vertices ranked for omission: small twin class first, then distance of
// the degree from the mean (largest first), then index.
std::vector<int> omission_ranking(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls_size(n, 1);
  for (Bits cls : find_symmetric_vertices(g))
    for (int v : bits_of(cls)) cls_size[v] = popcount(cls);
  const double mean = n ? 2.0 * g.edge_count() / n : 0.0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (cls_size[a] != cls_size[b]) return cls_size[a] < cls_size[b];
    const double da = std::abs(g.degree(a) - mean);
    const double db = std::abs(g.degree(b) - mean);
    if (da != db) return da > db;
    return a < b;
  });
  return order;
}

}  // namespace

SymmetryClassResult in_symmetry_class(const Graph& g, int r, int c, const SearchBudget& budget) {
  if (r < 1) throw std::invalid_argument("in_symmetry_class needs r >= 1");
  if (c < 0) throw std::invalid_argument("in_symmetry_class needs c >= 0");
  SymmetryClassResult out;
  Meter meter(budget, c > 2);
  SymmetryClassSearch search(g, r, c, meter);
  const std::vector<int> rank = omission_ranking(g);
  const int n = g.order();
  const int max_omit = std::min(c, n);

  auto attempt = [&](Bits omitted) {
    if (auto cert = search.try_omission(omitted)) {
      out.member = Decision::yes;
      out.certificate = std::move(cert);
      return true;
    }
    return false;
  };
  if (attempt(0)) return out;
  // Subsets grouped by their highest-ranked element; inside a group, smaller
  // subsets first.
  std::vector<int> pick;
  std::function<bool(int, int, int, Bits)> choose = [&](int from, int limit, int need, Bits acc) -> bool {
    if (meter.exhausted()) return false;
    if (need == 0) return attempt(acc);
    for (int i = from; i <= limit - need; ++i)
      if (choose(i + 1, limit, need - 1, acc | bit(rank[i]))) return true;
    return false;
  };
  for (int top = 0; top < n && max_omit > 0; ++top) {
    for (int extra = 0; extra < max_omit; ++extra)
      if (choose(0, top, extra, bit(rank[top]))) return out;
    if (meter.exhausted()) break;
  }
  if (meter.exhausted()) out.member = Decision::undecided;
  return out;
}

bool is_valid_symmetry_certificate(const Graph& g, int r, int c, const SymmetryClassCertificate& cert) {
  const int n = g.order();
  if (popcount(cert.omitted) > c || static_cast<int>(cert.parts.size()) != r || cert.blocks.size() != cert.parts.size())
    return false;
  Bits covered = cert.omitted;
  for (Bits p : cert.parts) {
    if (p == 0 || (p & covered) || (p & ~g.vertex_mask())) return false;
    covered |= p;
  }
  if (covered != g.vertex_mask()) return false;
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    const Bits p = cert.parts[i];
    if (std::abs(r * popcount(p) - n) > r * c) return false;
    for (int v : bits_of(p))
      if ((g.neighbors(v) & (covered & ~cert.omitted & ~p)) != (covered & ~cert.omitted & ~p)) return false;
    std::vector<Bits> comps = connected_components(g, p);
    std::vector<Bits> given = cert.blocks[i];
    std::sort(comps.begin(), comps.end());
    std::sort(given.begin(), given.end());
    if (comps != given) return false;
    for (Bits b : comps)
      if (popcount(b) > c) return false;
    if (!pairwise_symmetric(g, cert.blocks[i], g.vertex_mask() & ~p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Extremal shape

namespace {

Bits maximal_core(const Graph& g, Bits part) {
  const Bits rest = g.vertex_mask() & ~part;
  Bits core = 0;
  for (int v : bits_of(part))
    if (g.neighbors(v) == rest) core |= bit(v);
  return core;
}

}  // namespace

bool is_valid_shape(const Graph& g, const ShapeCertificate& cert, int max_defect) {
  const int r = static_cast<int>(cert.parts.size());
  if (r < 1 || cert.cores.size() != cert.parts.size()) return false;
  Bits covered = cert.w;
  if (cert.w & ~g.vertex_mask()) return false;
  for (Bits p : cert.parts) {
    if ((p & covered) || (p & ~g.vertex_mask())) return false;
    covered |= p;
  }
  if (covered != g.vertex_mask()) return false;
  const int m = g.order() - popcount(cert.w);
  const int lo = m / r;
  const int hi = (m + r - 1) / r;
  for (int i = 0; i < r; ++i) {
    const Bits p = cert.parts[i];
    const int s = popcount(p);
    if (s != lo && s != hi) return false;
    if (cert.cores[i] & ~p) return false;
    const Bits rest = g.vertex_mask() & ~p;
    for (int v : bits_of(cert.cores[i]))
      if (g.neighbors(v) != rest) return false;
    if (max_defect >= 0 && s - popcount(cert.cores[i]) > max_defect) return false;
  }
  return true;
}

std::optional<ShapeCertificate> verify_extremal_shape(const Graph& g, int q, int r, int t) {
  if (q < 1) throw std::invalid_argument("verify_extremal_shape needs q >= 1");
  if (r < 2) throw std::invalid_argument("verify_extremal_shape needs r >= 2");
  if (t < 0) throw std::invalid_argument("verify_extremal_shape needs t >= 0");
  const int n = g.order();
  const int m = n - (q - 1);
  if (m < 0) return std::nullopt;
  const int lo = m / r;
  const int hi = (m + r - 1) / r;
  const int defect = t * t;
  const int hi_parts = m - r * lo;  // parts of size hi when hi != lo

  std::vector<Bits> candidates;
  for (int v = 0; v < n; ++v) {
    const Bits part = g.vertex_mask() & ~g.neighbors(v);
    const int s = popcount(part);
    if (s != lo && s != hi) continue;
    if (s - popcount(maximal_core(g, part)) > defect) continue;
    if (std::find(candidates.begin(), candidates.end(), part) == candidates.end()) candidates.push_back(part);
  }

  std::vector<Bits> chosen;
  std::optional<ShapeCertificate> found;
  // Completes the certificate with free parts (empty core, at most t^2
  // vertices) cut from the leftover, and W from what remains.
  auto complete = [&](Bits used) -> bool {
    int big = 0;
    for (Bits p : chosen)
      if (popcount(p) == hi && hi != lo) ++big;
    const int free_parts = r - static_cast<int>(chosen.size());
    int big_needed = (hi != lo ? hi_parts : 0) - big;
    if (big_needed < 0 || big_needed > free_parts) return false;
    std::vector<int> sizes;
    for (int i = 0; i < free_parts; ++i) sizes.push_back(i < big_needed ? hi : lo);
    for (int s : sizes)
      if (s > defect) return false;
    std::vector<int> left = vertices_of(g.vertex_mask() & ~used);
    int total = 0;
    for (int s : sizes) total += s;
    if (static_cast<int>(left.size()) != total + (q - 1)) return false;
    ShapeCertificate cert;
    std::size_t pos = 0;
    std::vector<Bits> parts = chosen;
    for (int s : sizes) {
      Bits p = 0;
      for (int k = 0; k < s; ++k) p |= bit(left[pos++]);
      parts.push_back(p);
    }
    for (; pos < left.size(); ++pos) cert.w |= bit(left[pos]);
    std::sort(parts.begin(), parts.end(), lex_less);
    for (Bits p : parts) {
      cert.parts.push_back(p);
      cert.cores.push_back(maximal_core(g, p));
    }
    if (!is_valid_shape(g, cert, defect)) return false;
    found = std::move(cert);
    return true;
  };
  std::function<bool(std::size_t, Bits)> pick = [&](std::size_t i, Bits used) -> bool {
    if (static_cast<int>(chosen.size()) == r || i == candidates.size()) return complete(used);
    // Without room for free parts every remaining part must be a candidate.
    if (lo > defect && static_cast<int>(chosen.size() + (candidates.size() - i)) < r) return false;
    if (!(candidates[i] & used)) {
      chosen.push_back(candidates[i]);
      if (pick(i + 1, used | candidates[i])) return true;
      chosen.pop_back();
    }
    return pick(i + 1, used);
  };
  pick(0, 0);
  return found;
}

// ---------------------------------------------------------------------------
// Path blocks

const char* to_string(PathBlockBranch b) {
  switch (b) {
    case PathBlockBranch::clique_blocks:
      return "clique-blocks";
    case PathBlockBranch::star_apexes:
      return "star-apexes";
    case PathBlockBranch::neither:
      return "neither";
  }
  return "?";
}

PathBlockReport classify_path_block_configuration(const Graph& g, int l, const SymmetricFamily& fam) {
  if (l < 3) throw std::invalid_argument("path block configuration needs l >= 3");
  PathBlockReport out;
  Bits s = 0;
  for (Bits b : fam.blocks) s |= b;
  const Bits rest = g.vertex_mask() & ~s;
  bool blocks_apart = true;
  for (Bits b : fam.blocks)
    for (int v : bits_of(b))
      if (g.neighbors(v) & s & ~b) blocks_apart = false;
  long long inside = 0;
  long long across = 0;
  for (int v : bits_of(s)) {
    inside += popcount(g.neighbors(v) & s);
    across += popcount(g.neighbors(v) & rest);
  }
  inside /= 2;
  const long long size = popcount(s);
  const long long lhs = 2 * (inside + across);
  const long long rhs = (l - 2) * size;
  const int tau = static_cast<int>(fam.blocks.size());
  out.hypotheses = blocks_apart && is_symmetric_family(g, fam) && tau >= l && size % (l - 1) == 0 && lhs >= rhs &&
                   !contains_subgraph(g, path_graph(l));
  out.tight = lhs == rhs;

  bool cliques = across == 0;
  for (Bits b : fam.blocks) {
    const int k = popcount(b);
    if (k != l - 1) cliques = false;
    for (int v : bits_of(b))
      if (popcount(g.neighbors(v) & b) != k - 1) cliques = false;
  }
  if (cliques) {
    out.branch = PathBlockBranch::clique_blocks;
    return out;
  }
  if (l % 2 == 0) {
    bool singletons = true;
    for (Bits b : fam.blocks)
      if (popcount(b) != 1) singletons = false;
    Bits touching = 0;
    for (int v : bits_of(s)) touching |= g.neighbors(v) & rest;
    bool all_adjacent = true;
    for (int v : bits_of(s))
      if ((g.neighbors(v) & rest) != touching) all_adjacent = false;
    if (singletons && all_adjacent && popcount(touching) == (l - 2) / 2) out.branch = PathBlockBranch::star_apexes;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_vertex_set(Bits s) {
  std::string out = "{";
  bool first = true;
  for (int v : bits_of(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string describe(const SymmetricFamily& fam) {
  std::string out;
  for (std::size_t j = 0; j < fam.blocks.size(); ++j) {
    out += "block " + std::to_string(j + 1) + " " + format_vertex_set(fam.blocks[j]) + " image";
    for (int v : fam.isos[j]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string describe(const SymmetryClassCertificate& cert) {
  std::string out = "omitted " + format_vertex_set(cert.omitted) + "\n";
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    out += "part " + std::to_string(i + 1) + " " + format_vertex_set(cert.parts[i]) + " blocks";
    for (Bits b : cert.blocks[i]) out += " " + format_vertex_set(b);
    out += "\n";
  }
  return out;
}

std::string describe(const ShapeCertificate& cert) {
  std::string out = "W " + format_vertex_set(cert.w) + "\n";
  for (std::size_t i = 0; i < cert.parts.size(); ++i)
    out += "S" + std::to_string(i + 1) + " " + format_vertex_set(cert.parts[i]) + " core " +
           format_vertex_set(cert.cores[i]) + "\n";
  return out;
}

namespace detail {

long long intersection_lower_bound(std::span<const long long> sizes, long long union_size) {
  if (sizes.size() < 2) throw std::invalid_argument("intersection bound needs at least two sets");
  long long total = 0;
  for (long long s : sizes) total += s;
  return total - static_cast<long long>(sizes.size() - 1) * union_size;
}

}  // namespace detail

}  // namespace turanlab
