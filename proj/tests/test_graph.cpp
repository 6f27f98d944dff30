#include <doctest.h>

#include <sstream>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/suite.hpp"

using namespace turanlab;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[draw(rng, 0, i)]);
  return p;
}

}  // namespace

TEST_CASE("graph keeps its invariants") {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(4, 1);
  CHECK(g.has_edge(3, 0));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(Graph(65), CapacityError);
  g.remove_edge(0, 3);
  CHECK(g.edge_count() == 1);
  const int v = g.add_vertex(bit(0) | bit(4));
  CHECK(v == 5);
  CHECK(g.degree(5) == 2);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  CHECK(complement(Graph(0)).order() == 0);
  // The complement of the 5-cycle 0-1-2-3-4 is the cycle 0-2-4-1-3.
  const Graph c5c = oracle::make(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(complement(cycle_graph(5)) == c5c);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(draw(rng, 0, 20), 1, 2, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs") {
  CHECK(induced_subgraph(complete_graph(5), bit(0) | bit(2) | bit(4)) == complete_graph(3));
  CHECK(induced_subgraph(cycle_graph(6), bit(0) | bit(2) | bit(4)) == empty_graph(3));
  // T(6,3) has parts {0,1} {2,3} {4,5}; part one plus vertex 2 is a cherry at 2.
  const Graph cherry = induced_subgraph(turan_graph(6, 3), bit(0) | bit(1) | bit(2));
  CHECK(cherry == oracle::make(3, {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), bit(7)), std::out_of_range);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(12, 1, 2, rng);
    const Bits s = rng() & g.vertex_mask();
    CHECK(induced_subgraph(g, s).edge_count() <= g.edge_count());
  }
}

TEST_CASE("joins, unions and components") {
  const Graph a = path_graph(3), b = cycle_graph(4);
  CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + 12);
  CHECK(disjoint_union(a, b).edge_count() == 6);
  CHECK(connected_components(disjoint_union(a, b)).size() == 2);
  Bits side = 0;
  CHECK(bipartition(cycle_graph(6), side));
  CHECK(side == (bit(0) | bit(2) | bit(4)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(isolated_vertices(disjoint_union(a, empty_graph(2))) == (bit(3) | bit(4)));
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  const Graph p4 = path_graph(4);
  std::vector<int> p{0, 1, 2, 3};
  do {
    CHECK(canonical_form(relabel(p4, p)).cert == canonical_form(p4).cert);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(canonical_form(complete_multipartite(std::vector<int>{1, 3})).cert != canonical_form(p4).cert);

  std::set<std::string> certs;
  for (std::uint32_t m = 0; m < 64; ++m) certs.insert(canonical_form(oracle::from_code(4, m)).cert);
  CHECK(certs.size() == 11);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int n = draw(rng, 1, 7);
    const Graph a = random_graph(n, 1, 2, rng);
    const Graph b = random_graph(n, 1, 2, rng);
    CHECK((canonical_form(a).cert == canonical_form(b).cert) == (oracle::canonical(a) == oracle::canonical(b)));
  }
  for (int i = 0; i < 100; ++i) {
    const int n = draw(rng, 1, 30);
    const Graph g = random_graph(n, draw(rng, 1, 3), 4, rng);
    const CanonicalForm form = canonical_form(g);
    CHECK(canonical_form(relabel(g, shuffled(n, rng))).cert == form.cert);
    CHECK(write_graph6(relabel(g, form.order)) == form.cert);
    for (const auto& gen : form.automorphisms) CHECK(relabel(g, gen) == g);
  }
}

TEST_CASE("canonical form on highly symmetric graphs") {
  for (const Graph& g : {turan_graph(24, 4), complete_graph(20), empty_graph(30), cycle_graph(40),
                         disjoint_union(cycle_graph(5), cycle_graph(5)), blow_up(complete_graph(4), 3)}) {
    std::mt19937_64 rng(g.order());
    CHECK(canonical_form(relabel(g, shuffled(g.order(), rng))).cert == canonical_form(g).cert);
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("graph6 round trips and matches a direct encoder") {
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(write_graph6(Graph(0)) == "?");
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const int n = draw(rng, 0, 64);
    const Graph g = random_graph(n, 1, 2, rng);
    const std::string s = write_graph6(g);
    CHECK(s == oracle::graph6(g));
    CHECK(parse_graph6(s) == g);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
  CHECK(parse_graph6(">>graph6<<DQc\n") == parse_graph6("DQc"));
  const Graph big = complete_graph(64);
  CHECK(write_graph6(big).substr(0, 4) == "~?@?");
}

TEST_CASE("graph6 errors are told apart") {
  auto kind_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  using K = Graph6Error::Kind;
  CHECK(kind_of("") == static_cast<int>(K::malformed_header));
  CHECK(kind_of("D?\x20") == static_cast<int>(K::invalid_character));
  CHECK(kind_of("D?") == static_cast<int>(K::truncated_body));
  CHECK(kind_of("D???") == static_cast<int>(K::trailing_data));
  CHECK(kind_of("B@") == static_cast<int>(K::nonzero_padding));
  CHECK(kind_of("~?@@") == static_cast<int>(K::too_many_vertices));
}

TEST_CASE("graph6 files") {
  std::istringstream in("A_\n\nBw\n");
  const std::vector<Graph> gs = read_graph6_lines(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == complete_graph(3));
}
