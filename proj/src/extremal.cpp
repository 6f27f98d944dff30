#include "turanlab/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/generate.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

const char* to_string(ExtremalMethod m) {
  return m == ExtremalMethod::exhaustive ? "exhaustive" : "labeled-bruteforce";
}

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

// Containment answers keyed by canonical certificate, shared by workers and
// by the runs for smaller orders.
class ContainmentMemo {
 public:
  explicit ContainmentMemo(const ForbiddenFamily& fam) : fam_(fam) {}

  bool contains_member(const Graph& g, const std::string& cert) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = memo_.find(cert); it != memo_.end()) return it->second;
    }
    bool hit = false;
    for (const Graph& f : fam_.members())
      if (contains_subgraph(g, f)) {
        hit = true;
        break;
      }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(cert, hit);
    return hit;
  }

 private:
  const ForbiddenFamily& fam_;
  std::mutex mutex_;
  std::unordered_map<std::string, bool> memo_;
};

struct OrderResult {
  int ex = 0;
  std::vector<std::string> certs;
  std::int64_t visited = 0;
};

OrderResult extremal_at_order(int k, const std::vector<int>& ex_below, ContainmentMemo& memo, int threads) {
  const int workers = std::max(threads, 1);
  const int seed = k > 0 ? ex_below[k - 1] : 0;
  std::vector<int> best(workers, -1);
  std::vector<std::vector<std::string>> found(workers);
  const GenerationStats stats = generate_classes(
      k,
      [&](const Graph& g, const CanonicalForm& form, int w) {
        const int j = g.order();
        const int e = g.edge_count();
        if (j > 0 && memo.contains_member(g, form.cert)) return false;
        if (j == k) {
          if (e > best[w]) {
            best[w] = e;
            found[w] = {form.cert};
          } else if (e == best[w]) {
            found[w].push_back(form.cert);
          }
          return false;
        }
        if (j == 0) return true;  // ex_below[k] is what is being computed
        const long long bound = static_cast<long long>(e) + static_cast<long long>(k - j) * j + ex_below[k - j];
        return bound >= std::max(seed, best[w]);
      },
      workers);
  OrderResult out;
  out.visited = stats.visited;
  out.ex = *std::max_element(best.begin(), best.end());
  for (int w = 0; w < workers; ++w)
    if (best[w] == out.ex) out.certs.insert(out.certs.end(), found[w].begin(), found[w].end());
  std::sort(out.certs.begin(), out.certs.end());
  out.certs.erase(std::unique(out.certs.begin(), out.certs.end()), out.certs.end());
  return out;
}

// Labeled engine ---------------------------------------------------------

struct LabeledSpace {
  explicit LabeledSpace(int n) : n(n) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::array<std::array<int, kMaxLabeledOrder>, kMaxLabeledOrder> index{};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
      index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      // Byte-wise lookup tables for the induced permutation of pair slots.
      std::array<std::array<std::uint32_t, 256>, 2> table{};
      for (int chunk = 0; chunk < 2; ++chunk)
        for (int byte = 0; byte < 256; ++byte) {
          std::uint32_t image = 0;
          for (int b = 0; b < 8; ++b) {
            const std::size_t slot = static_cast<std::size_t>(chunk * 8 + b);
            if (!((byte >> b) & 1) || slot >= pairs.size()) continue;
            image |= std::uint32_t{1} << index[p[pairs[slot].first]][p[pairs[slot].second]];
          }
          table[chunk][byte] = image;
        }
      tables.push_back(table);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::uint32_t min_code(std::uint32_t mask) const {
    std::uint32_t best = mask;
    for (const auto& t : tables) best = std::min(best, t[0][mask & 255] | t[1][(mask >> 8) & 255]);
    return best;
  }

  Graph graph(std::uint32_t mask) const {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    return g;
  }

  std::uint32_t count() const { return std::uint32_t{1} << pairs.size(); }

  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<std::array<std::uint32_t, 256>, 2>> tables;
};

// Tries every injective map; no pruning beyond checking edges as they close.
bool naive_contains(const Graph& host, const Graph& pattern) {
  const int k = pattern.order();
  if (k > host.order()) return false;
  std::vector<int> map(k, -1);
  std::function<bool(int, Bits)> step = [&](int i, Bits used) {
    if (i == k) return true;
    for (int v = 0; v < host.order(); ++v) {
      if (used & bit(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(i, j) && !host.has_edge(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      if (step(i + 1, used | bit(v))) return true;
    }
    return false;
  };
  return step(0, 0);
}

Bits compress(Bits mask, Bits removed) {
  Bits out = 0;
  for (int v : bits_of(mask & ~removed)) out |= bit(v - popcount(removed & low_mask(v)));
  return out;
}

}  // namespace

ExtremalReport enumerate_extremal(int n, const ForbiddenFamily& fam, const ExtremalOptions& options) {
  if (n < 0 || n > kMaxExhaustiveOrder)
    throw std::invalid_argument("exhaustive enumeration supports 0 <= n <= " + std::to_string(kMaxExhaustiveOrder));
  ContainmentMemo memo(fam);
  std::vector<int> ex(n + 1, 0);
  OrderResult last;
  for (int k = 0; k <= n; ++k) {
    last = extremal_at_order(k, ex, memo, options.threads);
    ex[k] = last.ex;
  }
  ExtremalReport report;
  report.n = n;
  report.family = fam.name();
  report.ex = last.ex;
  report.extremal_set = std::move(last.certs);
  report.graphs_examined = last.visited;
  report.method = ExtremalMethod::exhaustive;
  return report;
}

ExtremalReport enumerate_extremal_labeled(int n, const ForbiddenFamily& fam) {
  if (n < 0 || n > kMaxLabeledOrder)
    throw std::invalid_argument("labeled enumeration supports 0 <= n <= " + std::to_string(kMaxLabeledOrder));
  const LabeledSpace space(n);
  ExtremalReport report;
  report.n = n;
  report.family = fam.name();
  report.method = ExtremalMethod::labeled_bruteforce;
  report.ex = -1;
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < space.count(); ++mask) {
    ++report.graphs_examined;
    if (space.min_code(mask) != mask) continue;
    const Graph g = space.graph(mask);
    bool free = true;
    for (const Graph& f : fam.members())
      if (naive_contains(g, f)) {
        free = false;
        break;
      }
    if (!free) continue;
    const int e = g.edge_count();
    if (e > report.ex) {
      report.ex = e;
      reps.clear();
    }
    if (e == report.ex) reps.push_back(mask);
  }
  for (std::uint32_t mask : reps) report.extremal_set.push_back(canonical_form(space.graph(mask)).cert);
  std::sort(report.extremal_set.begin(), report.extremal_set.end());
  return report;
}

std::int64_t count_classes(int n) {
  if (n < 0 || n > kMaxExhaustiveOrder) throw std::invalid_argument("count_classes supports 0 <= n <= 10");
  std::int64_t count = 0;
  generate_classes(n, [&](const Graph& g, const CanonicalForm&, int) {
    if (g.order() == n) ++count;
    return true;
  });
  return count;
}

std::int64_t count_classes_labeled(int n) {
  if (n < 0 || n > kMaxLabeledOrder) throw std::invalid_argument("count_classes_labeled supports 0 <= n <= 6");
  const LabeledSpace space(n);
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < space.count(); ++mask)
    if (space.min_code(mask) == mask) ++count;
  return count;
}

PathExtremal path_extremal_oracle(int n, int l) {
  if (l < 2) throw std::invalid_argument("path oracle needs l >= 2");
  if (n < 0) throw std::invalid_argument("path oracle needs n >= 0");
  if (n > kMaxOrder) throw CapacityError("path oracle catalog limited to 64 vertices");
  const int t = n / (l - 1);
  const int s = n % (l - 1);
  PathExtremal out;
  out.bound = t * choose2(l - 1) + choose2(s);

  auto copies = [&](int count) {
    Graph g(0);
    for (int i = 0; i < count; ++i) g = disjoint_union(g, complete_graph(l - 1));
    return g;
  };
  std::vector<Graph> graphs{disjoint_union(copies(t), complete_graph(s))};
  if (l % 2 == 0 && l >= 4 && (s == l / 2 - 1 || s == l / 2)) {
    for (int t0 = 1; t0 <= t; ++t0) {
      const int b = (l - 1) * t0 - l / 2 + s + 1;
      graphs.push_back(disjoint_union(copies(t - t0), join(complete_graph(l / 2 - 1), empty_graph(b))));
    }
  }
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> keyed;
  for (const Graph& g : graphs) {
    if (g.order() != n || g.edge_count() != out.bound) throw std::logic_error("path oracle: catalog graph misses the bound");
    std::string cert = canonical_form(g).cert;
    if (seen.insert(cert).second) keyed.emplace_back(std::move(cert), g);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [cert, g] : keyed) out.catalog.push_back(std::move(g));
  return out;
}

GrownShape d_operation(const Graph& g, const ShapeCertificate& cert) {
  if (!is_valid_shape(g, cert)) throw std::invalid_argument("d_operation: certificate does not fit the graph");
  const int m = g.order();
  const int r = static_cast<int>(cert.parts.size());
  if (m + r > kMaxOrder) throw CapacityError("d_operation: result would exceed 64 vertices");
  GrownShape out{g, cert};
  for (int i = 0; i < r; ++i) {
    const Bits nbhd = (g.vertex_mask() & ~cert.parts[i]) | (low_mask(m + i) & ~low_mask(m));
    const int x = out.graph.add_vertex(nbhd);
    out.cert.parts[i] |= bit(x);
    out.cert.cores[i] |= bit(x);
  }
  const long long q = popcount(cert.w) + 1;
  const long long gained = static_cast<long long>(out.graph.edge_count()) - g.edge_count();
  if (gained != (q - 1) + static_cast<long long>(m) * (r - 1) + choose2(r))
    throw std::logic_error("d_operation: edge identity violated");
  return out;
}

GrownShape d_inverse(const Graph& g, const ShapeCertificate& cert) {
  if (!is_valid_shape(g, cert)) throw std::invalid_argument("d_inverse: certificate does not fit the graph");
  Bits removed = 0;
  for (Bits core : cert.cores) {
    if (core == 0) throw std::invalid_argument("d_inverse: every core must be non-empty");
    removed |= bit(63 - std::countl_zero(core));
  }
  const int m = g.order();
  const int r = static_cast<int>(cert.parts.size());
  GrownShape out{remove_vertices(g, removed), {}};
  out.cert.w = compress(cert.w, removed);
  for (int i = 0; i < r; ++i) {
    out.cert.parts.push_back(compress(cert.parts[i], removed));
    out.cert.cores.push_back(compress(cert.cores[i], removed));
  }
  const long long q = popcount(cert.w) + 1;
  const long long lost = static_cast<long long>(g.edge_count()) - out.graph.edge_count();
  if (lost != (q - 1) + static_cast<long long>(m - r) * (r - 1) + choose2(r))
    throw std::logic_error("d_inverse: edge identity violated");
  return out;
}

CandidateVerdict certify_candidate(const Graph& g, const ForbiddenFamily& fam, long long claimed_edges,
                                   const SearchBudget& budget, bool cross_check) {
  CandidateVerdict v;
  v.freeness = check_family_free(g, fam, budget);
  v.edges = g.edge_count();
  v.claimed_edges = claimed_edges;
  v.edge_count_matches = v.edges == claimed_edges;
  if (cross_check && g.order() <= kMaxExhaustiveOrder) {
    const ExtremalReport report = enumerate_extremal(g.order(), fam);
    const std::string cert = canonical_form(g).cert;
    v.in_extremal_set = std::binary_search(report.extremal_set.begin(), report.extremal_set.end(), cert);
  }
  return v;
}

}  // namespace turanlab
