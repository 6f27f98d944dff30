#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/subgraph.hpp"
#include "turanlab/suite.hpp"

using namespace turanlab;

TEST_CASE("containment examples") {
  const auto w = contains_subgraph(complete_graph(4), cycle_graph(4));
  REQUIRE(w);
  CHECK(is_embedding(complete_graph(4), cycle_graph(4), *w));
  CHECK_FALSE(contains_subgraph(turan_graph(9, 3), complete_graph(4)));
  const Graph c33 = blow_up(complete_graph(3), 2);
  CHECK_FALSE(contains_subgraph(g_nr(8, 2), c33));
  CHECK_FALSE(oracle::contains(g_nr(8, 2), c33));
  CHECK(contains_subgraph(complete_graph(6), c33));
  CHECK(contains_subgraph(Graph(3), Graph(0)));
}

TEST_CASE("containment agrees with the injective-map oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const Graph host = random_graph(draw(rng, 1, 8), draw(rng, 1, 3), 4, rng);
    const Graph pattern = random_graph(draw(rng, 1, 5), 1, 2, rng);
    const auto w = contains_subgraph(host, pattern);
    CHECK(w.has_value() == oracle::contains(host, pattern));
    if (w) CHECK(is_embedding(host, pattern, *w));
  }
}

TEST_CASE("containment is monotone and isomorphism invariant") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Graph host = random_graph(10, 1, 3, rng);
    const Graph pattern = random_graph(draw(rng, 2, 6), 1, 2, rng);
    const bool before = contains_subgraph(host, pattern).has_value();
    const int u = draw(rng, 0, 9), v = draw(rng, 0, 9);
    if (u != v) host.add_edge(u, v);
    if (before) CHECK(contains_subgraph(host, pattern));
    const Graph relabeled = canonical_graph(pattern);
    CHECK(contains_subgraph(host, relabeled).has_value() == contains_subgraph(host, pattern).has_value());
  }
}

TEST_CASE("budgets never turn into a wrong answer") {
  const Graph host = turan_graph(30, 4);
  const Graph pattern = complete_graph(5);
  const Containment tiny = find_subgraph(host, pattern, SearchBudget{1, 0});
  CHECK(tiny.decision != Decision::yes);
  const Containment full = find_subgraph(host, pattern);
  CHECK(full.decision == Decision::no);
  const Containment easy = find_subgraph(complete_graph(8), complete_graph(5), SearchBudget{1000, 0});
  CHECK(easy.decision == Decision::yes);
}

TEST_CASE("family freeness") {
  for (int n = 1; n <= 20; ++n)
    for (int r = 1; r <= 4; ++r) CHECK(is_family_free(turan_graph(n, r), ForbiddenFamily({complete_graph(r + 1)})));
  CHECK_FALSE(is_family_free(complete_graph(5), ForbiddenFamily({complete_graph(4)})));
  const ForbiddenFamily ico(named_family("icosahedron").members);
  CHECK(is_family_free(join(complete_graph(2), turan_graph(16, 3)), ico));
  const FreenessCheck c = check_family_free(complete_graph(12), ForbiddenFamily({cycle_graph(5), complete_graph(3)}));
  CHECK(c.free == Decision::no);
  CHECK(c.member == 0);
  CHECK(is_embedding(complete_graph(12), cycle_graph(5), c.witness));
  CHECK_THROWS(ForbiddenFamily(std::vector<Graph>{}));
  CHECK_THROWS(ForbiddenFamily({empty_graph(3)}));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  for (int r = 1; r <= 5; ++r) CHECK(chromatic_number(turan_graph(3 * r, r)) == r);
  const Graph c33 = blow_up(complete_graph(3), 2);
  CHECK(chromatic_number(c33) == oracle::chromatic_number(c33));
  CHECK(chromatic_number(c33) == 3);
  CHECK(chromatic_number(Graph(0)) == 0);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(draw(rng, 1, 9), draw(rng, 1, 3), 4, rng);
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
    CHECK(chromatic_number(g) >= clique_number(g));
    CHECK(clique_number(g) == oracle::clique_number(g));
  }
  for (int i = 0; i < 20; ++i) {
    const Graph a = random_graph(draw(rng, 1, 6), 1, 2, rng), b = random_graph(draw(rng, 1, 6), 1, 2, rng);
    CHECK(chromatic_number(join(a, b)) == chromatic_number(a) + chromatic_number(b));
  }
}

TEST_CASE("covering numbers") {
  CHECK(covering_number(complete_multipartite(std::vector<int>{2, 3})) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(covering_number(complete_graph(n)) == n - 1);
  CHECK(covering_number(path_graph(5)) == 2);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(draw(rng, 1, 10), 1, 3, rng);
    CHECK(covering_number(g) == oracle::covering_number(g));
    const auto q = oracle::independent_covering(g);
    if (q) CHECK(independent_covering_order(g) == *q);
    else CHECK_THROWS_AS(independent_covering_order(g), std::invalid_argument);
  }
}

TEST_CASE("independent covering order") {
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t)
      CHECK(independent_covering_order(complete_multipartite(std::vector<int>{s, t})) == std::min(s, t));
  CHECK(independent_covering_order(path_graph(4)) == 2);
  CHECK(oracle::independent_covering(path_graph(4)) == 2);
  for (int t = 1; t <= 6; ++t) {
    Graph m(0);
    for (int i = 0; i < t; ++i) m = disjoint_union(m, complete_graph(2));
    CHECK(independent_covering_order(m) == t);
  }
  CHECK_THROWS(independent_covering_order(cycle_graph(5)));
}

TEST_CASE("q of a family, both ways") {
  for (int r = 2; r <= 4; ++r) CHECK(family_q(ForbiddenFamily({complete_graph(r + 1)})) == 1);
  CHECK(family_q(ForbiddenFamily({blow_up(complete_graph(3), 2)})) == 2);
  CHECK(ForbiddenFamily(named_family("icosahedron").members).q() == 3);

  Graph matching(0);
  for (int i = 0; i < 3; ++i) matching = disjoint_union(matching, complete_graph(2));
  const Graph star = complete_multipartite(std::vector<int>{1, 3});
  const Graph p5 = path_graph(5);
  const std::vector<std::vector<Graph>> families{{matching}, {star}, {p5}, {matching, star}, {matching, p5},
                                                 {cycle_graph(6)}, {complete_multipartite(std::vector<int>{2, 3})}};
  for (const auto& members : families) {
    const ForbiddenFamily fam(members);
    REQUIRE(fam.r() == 1);
    const auto qb = family_q_bipartite(fam);
    REQUIRE(qb);
    CHECK(family_q(fam) == *qb);
    int brute = 64;
    for (const Graph& f : members) brute = std::min(brute, *oracle::independent_covering(f));
    CHECK(*qb == brute);
  }
  CHECK_FALSE(family_q_bipartite(ForbiddenFamily({complete_graph(3)})));
}
