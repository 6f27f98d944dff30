// Acceptance run: one PASS/FAIL line per criterion.  Library results are
// compared with the slow references in oracles.hpp wherever those are
// affordable.

#include <array>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/decomposition.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/suite.hpp"
#include "turanlab/symmetry.hpp"

using namespace turanlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::set<std::string> oracle_classes(const std::vector<std::string>& g6s) {
  std::set<std::string> out;
  for (const auto& s : g6s) out.insert(oracle::canonical(parse_graph6(s)));
  return out;
}

void turan_exactness(Outcome& o) {
  int cases = 0;
  for (int r = 2; r <= 3; ++r)
    for (int n = r + 1; n <= 8; ++n) {
      const ExtremalReport rep = enumerate_extremal(n, ForbiddenFamily({complete_graph(r + 1)}));
      const std::vector<std::string> expected{canonical_form(turan_graph(n, r)).cert};
      if (rep.ex != oracle::turan_edges(n, r) || rep.extremal_set != expected)
        o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n));
      if (n <= 6) {
        const oracle::Extremal ref = oracle::extremal(n, {complete_graph(r + 1)});
        if (ref.ex != rep.ex || ref.classes != oracle_classes(rep.extremal_set))
          o.fail("brute force disagrees at r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
      ++cases;
    }
  o.detail << cases << " (r,n) pairs";
}

void path_cross_oracle(Outcome& o) {
  int cases = 0, special = 0;
  for (int l = 3; l <= 6; ++l)
    for (int n = l; n <= 8; ++n) {
      const PathExtremal closed = path_extremal_oracle(n, l);
      const ExtremalReport rep = enumerate_extremal(n, ForbiddenFamily({path_graph(l)}));
      std::vector<std::string> catalog;
      for (const Graph& g : closed.catalog) catalog.push_back(canonical_form(g).cert);
      std::sort(catalog.begin(), catalog.end());
      if (rep.ex != closed.bound || rep.extremal_set != catalog)
        o.fail("l=" + std::to_string(l) + " n=" + std::to_string(n));
      if (n <= 6) {
        const oracle::Extremal ref = oracle::extremal(n, {path_graph(l)});
        if (ref.ex != rep.ex || ref.classes != oracle_classes(rep.extremal_set))
          o.fail("brute force disagrees at l=" + std::to_string(l) + " n=" + std::to_string(n));
      }
      special += catalog.size() > 1;
      ++cases;
    }
  o.detail << cases << " (l,n) pairs, " << special << " with more than one extremal graph";
}

void replication(Outcome& o) {
  int preserved = 0;
  for (int i = 0; i < 500; ++i) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(i));
    const ReplicationInstance inst = random_replication_instance(rng);
    const bool valid = oracle::symmetric_blocks(inst.host, inst.family.isos, true) &&
                       static_cast<int>(inst.family.blocks.size()) >= inst.pattern.order() &&
                       inst.pattern.order() <= 5 && !oracle::contains(inst.host, inst.pattern);
    if (!valid) {
      o.fail("instance " + std::to_string(i) + " is not a valid triple");
      continue;
    }
    const Graph grown = replicate(inst.host, inst.family);
    const bool free_lib = !contains_subgraph(grown, inst.pattern);
    const bool free_ref = !oracle::contains(grown, inst.pattern);
    if (free_lib != free_ref) o.fail("containment engines disagree on instance " + std::to_string(i));
    if (free_lib && free_ref) ++preserved;
  }
  if (preserved != 500) o.fail("pattern appeared after replication");
  o.detail << preserved << "/500 preserved";
}

void growth_identity(Outcome& o) {
  int good = 0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng(1000003ULL * static_cast<std::uint64_t>(i + 1));
    const int q = draw(rng, 1, 3);
    const int r = draw(rng, 2, 3);
    const int m = q - 1 + r * draw(rng, 1, 3) + draw(rng, 0, r - 1);
    const ShapedInstance h = random_shaped_graph(q, r, m, rng);
    const GrownShape up = d_operation(h.graph, h.cert);
    const int gained = oracle::edges(up.graph) - oracle::edges(h.graph);
    const int formula = (q - 1) + m * (r - 1) + r * (r - 1) / 2;
    const GrownShape down = d_inverse(up.graph, up.cert);
    if (h.graph.order() == m && gained == formula && down.graph == h.graph) ++good;
    else o.fail("instance " + std::to_string(i));
  }
  o.detail << good << "/50 satisfy the identity and invert exactly";
}

// Freeness by the library; by the brute-force oracle as well when small.
bool free_of(const Graph& host, const std::vector<Graph>& members, Outcome& o, const std::string& label) {
  const bool lib = is_family_free(host, ForbiddenFamily(members));
  if (host.order() <= 10) {
    bool ref = true;
    for (const Graph& f : members) ref = ref && !oracle::contains(host, f);
    if (ref != lib) o.fail("containment engines disagree on " + label);
  }
  return lib;
}

void certificates(Outcome& o) {
  const Graph c33 = blow_up(complete_graph(3), 2);
  int checked = 0;
  for (int n = 8; n <= 24; ++n) {
    const int a = n / 2, b = n - n / 2;
    const Graph kp = k_plus(std::vector<int>{a, b});
    if (!free_of(kp, {c33}, o, "K+ n=" + std::to_string(n)) || oracle::edges(kp) != a * b + a / 2 + b / 2)
      o.fail("K+ n=" + std::to_string(n));
    const Graph kt = join(complete_graph(1), turan_graph(n - 1, 2));
    if (!free_of(kt, {c33}, o, "K1+T n=" + std::to_string(n)) ||
        oracle::edges(kt) != (n - 1) + oracle::turan_edges(n - 1, 2))
      o.fail("K1+T n=" + std::to_string(n));
    checked += 2;
  }
  const std::vector<Graph> ico = named_family("icosahedron").members;
  for (int n = 14; n <= 20; ++n) {
    const Graph g = join(complete_graph(2), turan_graph(n - 2, 3));
    if (!free_of(g, ico, o, "K2+T3") || oracle::edges(g) != 1 + 2 * (n - 2) + oracle::turan_edges(n - 2, 3))
      o.fail("K2+T(n-2,3) n=" + std::to_string(n));
    ++checked;
  }
  for (auto [s, t, n] : std::vector<std::array<int, 3>>{{2, 4, 20}, {3, 3, 21}}) {
    const Graph g = named_family("gst", std::vector<int>{n, s, t}).members.at(0);
    const Graph f = named_family("fst", std::vector<int>{s, t}).members.at(0);
    const int a = n - s + 1;
    const int formula = ((a + 1) / 2) * (a / 2) + (s - 1) * a + (s - 1) * (s - 2) / 2 + t * t - 3 * t + 3;
    SearchBudget budget;
    if (f.order() > 14) budget.max_ms = 10000;
    const FreenessCheck c = check_family_free(g, ForbiddenFamily({f}), budget);
    if (oracle::edges(g) != formula || c.free == Decision::no) o.fail("gst s=" + std::to_string(s));
    o.detail << "gst(" << n << "," << s << "," << t << ") edges " << oracle::edges(g) << "=" << formula
             << " freeness " << to_string(c.free) << "; ";
  }
  o.detail << checked << " freeness certificates";
}

void decomposition(Outcome& o) {
  const std::vector<std::string> k2{canonical_form(complete_graph(2)).cert};
  for (int k : {3, 4}) {
    const ForbiddenFamily fam({complete_graph(k)});
    const DecompositionResult res = decomposition_family(fam);
    if (!res.complete || res.minimal_members != k2) o.fail("K" + std::to_string(k) + " family");
    for (const auto& s : res.minimal_members) {
      const Graph m = parse_graph6(s);
      const int t = fam.t(), r = fam.r();
      auto host = [&](const Graph& x) {
        return join(disjoint_union(x, Graph(t)), turan_graph((r - 1) * t, r - 1));
      };
      if (!oracle::contains(host(m), complete_graph(k))) o.fail("member lacks the property");
      for (auto [a, b] : edges(m)) {
        Graph smaller = m;
        smaller.remove_edge(a, b);
        smaller = remove_vertices(smaller, isolated_vertices(smaller));
        if (oracle::contains(host(smaller), complete_graph(k))) o.fail("member is not minimal");
      }
    }
    o.detail << "M(K" << k << ") = {" << (res.minimal_members.empty() ? "" : res.minimal_members[0]) << "}; ";
  }
}

void shape_soundness(Outcome& o) {
  for (auto [q, r, n] : std::vector<std::array<int, 3>>{{1, 2, 10}, {3, 2, 13}, {2, 3, 14}}) {
    const Graph g = join(empty_graph(q - 1), turan_graph(n - q + 1, r));
    const auto cert = verify_extremal_shape(g, q, r, 1);
    if (!cert || !is_valid_shape(g, *cert, 1)) o.fail("rejected a join of an independent set and T");
  }
  if (verify_extremal_shape(cycle_graph(7), 1, 2, 1) || oracle::has_shape(cycle_graph(7), 1, 2, 1))
    o.fail("accepted C7");
  int false_accepts = 0;
  for (int i = 0; i < 20; ++i) {
    std::mt19937_64 rng(7919ULL * static_cast<std::uint64_t>(i + 1));
    const int n = i % 2 == 0 ? 8 : 10;
    const int q = 1 + (i / 2) % 2;
    const int r = 2 + (i / 4) % 2;
    const Graph g = random_regular_graph(n, 3, rng);
    const bool accepted = verify_extremal_shape(g, q, r, 1).has_value();
    const bool exists = oracle::has_shape(g, q, r, 1);
    if (accepted && !exists) ++false_accepts;
    if (accepted != exists) o.fail("disagreement with the exhaustive search on instance " + std::to_string(i));
  }
  o.detail << "3 accepted, C7 rejected, 20 cubic instances with " << false_accepts << " false accepts";
}

void enumerator(Outcome& o) {
  const std::array<std::int64_t, 7> known{1, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    const std::int64_t aug = count_classes(n), lab = count_classes_labeled(n), ref = oracle::class_count(n);
    if (aug != lab || lab != known[n] || ref != known[n]) o.fail("n=" + std::to_string(n));
    o.detail << aug << (n < 6 ? "," : "");
  }
}

SymmetricFamily family_of(const std::vector<std::vector<int>>& blocks) {
  SymmetricFamily fam;
  for (const auto& b : blocks) {
    fam.blocks.push_back(mask_of(b));
    fam.isos.push_back(b);
  }
  return fam;
}

void dichotomy(Outcome& o) {
  for (int l : {4, 6}) {
    Graph cliques(0);
    std::vector<std::vector<int>> cblocks;
    for (int j = 0; j < l; ++j) {
      std::vector<int> b;
      for (int i = 0; i < l - 1; ++i) b.push_back(cliques.order() + i);
      cliques = disjoint_union(cliques, complete_graph(l - 1));
      cblocks.push_back(b);
    }
    cliques = disjoint_union(cliques, path_graph(2));
    const PathBlockReport a = classify_path_block_configuration(cliques, l, family_of(cblocks));
    if (oracle::contains(cliques, path_graph(l)) || !oracle::symmetric_blocks(cliques, cblocks, true))
      o.fail("clique instance is malformed");
    if (!a.hypotheses || !a.tight || a.branch != PathBlockBranch::clique_blocks)
      o.fail("clique instance l=" + std::to_string(l));

    const int apex = (l - 2) / 2, tau = 2 * (l - 1);
    const Graph star = join(complete_graph(apex), empty_graph(tau));
    std::vector<std::vector<int>> sblocks;
    for (int j = 0; j < tau; ++j) sblocks.push_back({apex + j});
    const PathBlockReport b = classify_path_block_configuration(star, l, family_of(sblocks));
    if (oracle::contains(star, path_graph(l)) || !oracle::symmetric_blocks(star, sblocks, true))
      o.fail("apex instance is malformed");
    if (!b.hypotheses || !b.tight || b.branch != PathBlockBranch::star_apexes)
      o.fail("apex instance l=" + std::to_string(l));
    o.detail << "l=" << l << ": " << to_string(a.branch) << ", " << to_string(b.branch) << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria{
      {"turan exactness", turan_exactness},
      {"path extremal cross-check", path_cross_oracle},
      {"replication preserves freeness", replication},
      {"growth identity", growth_identity},
      {"construction certificates", certificates},
      {"decomposition of cliques", decomposition},
      {"shape verifier soundness", shape_soundness},
      {"enumerator class counts", enumerator},
      {"path block dichotomy", dichotomy}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::string detail = o.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << detail
              << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
