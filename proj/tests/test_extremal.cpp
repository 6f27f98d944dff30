#include <doctest.h>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph6.hpp"

using namespace turanlab;

namespace {

std::set<std::string> oracle_classes(const std::vector<std::string>& g6s) {
  std::set<std::string> out;
  for (const auto& s : g6s) out.insert(oracle::canonical(parse_graph6(s)));
  return out;
}

std::vector<std::vector<Graph>> small_families() {
  return {{complete_graph(3)},
          {complete_graph(4)},
          {path_graph(4)},
          {cycle_graph(4)},
          {cycle_graph(4), complete_graph(3)},
          {path_graph(3)},
          {complete_multipartite(std::vector<int>{1, 3})},
          {cycle_graph(5)},
          {join(complete_graph(1), path_graph(3))}};
}

}  // namespace

TEST_CASE("class counts") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_classes(n) == oracle::class_count(n));
    CHECK(count_classes_labeled(n) == oracle::class_count(n));
  }
  CHECK(count_classes(7) == 1044);
  CHECK(count_classes(8) == 12346);
}

TEST_CASE("exhaustive ex and EX agree with labeled brute force") {
  for (const auto& members : small_families()) {
    const ForbiddenFamily fam(members);
    for (int n = 1; n <= 6; ++n) {
      const ExtremalReport a = enumerate_extremal(n, fam);
      const ExtremalReport b = enumerate_extremal_labeled(n, fam);
      const oracle::Extremal o = oracle::extremal(n, members);
      CHECK(a.ex == o.ex);
      CHECK(b.ex == o.ex);
      CHECK(oracle_classes(a.extremal_set) == o.classes);
      CHECK(a.extremal_set == b.extremal_set);
      CHECK(a.method == ExtremalMethod::exhaustive);
    }
  }
}

TEST_CASE("extremal numbers are monotone and thread independent") {
  const ForbiddenFamily fam({cycle_graph(4)});
  int last = 0;
  for (int n = 1; n <= 9; ++n) {
    const ExtremalReport one = enumerate_extremal(n, fam);
    const ExtremalReport two = enumerate_extremal(n, fam, ExtremalOptions{2});
    CHECK(one.ex == two.ex);
    CHECK(one.extremal_set == two.extremal_set);
    CHECK(one.ex >= last);
    last = one.ex;
  }
  // Known values of ex(n, C4).
  CHECK(enumerate_extremal(9, fam).ex == 13);
  for (int n = 1; n <= 9; ++n)
    CHECK(enumerate_extremal(n, ForbiddenFamily({complete_graph(3)})).ex == oracle::turan_edges(n, 2));
}

TEST_CASE("extremal enumeration rejects out-of-range orders") {
  const ForbiddenFamily fam({complete_graph(3)});
  CHECK_THROWS_AS(enumerate_extremal(11, fam), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_extremal(-1, fam), std::invalid_argument);
  CHECK_THROWS(enumerate_extremal_labeled(7, fam));
  CHECK(enumerate_extremal(0, fam).ex == 0);
}

TEST_CASE("path extremal catalog") {
  const PathExtremal a = path_extremal_oracle(7, 4);
  CHECK(a.bound == 6);
  const PathExtremal b = path_extremal_oracle(6, 3);
  CHECK(b.bound == 3);
  REQUIRE(b.catalog.size() == 1);
  CHECK(oracle::isomorphic(b.catalog[0], oracle::make(6, {{0, 1}, {2, 3}, {4, 5}})));
  for (int l = 2; l <= 6; ++l)
    for (int n = 1; n <= 6; ++n) {
      const PathExtremal p = path_extremal_oracle(n, l);
      const oracle::Extremal o = oracle::extremal(n, {path_graph(l)});
      CHECK(p.bound == o.ex);
      std::set<std::string> got;
      for (const Graph& g : p.catalog) got.insert(oracle::canonical(g));
      CHECK(got == o.classes);
    }
}

TEST_CASE("growth operation and its inverse") {
  // H = complement(K_1) + T(10, 2): W is the single extra vertex.
  const Graph h = join(empty_graph(1), turan_graph(10, 2));
  ShapeCertificate cert;
  cert.w = bit(0);
  cert.parts = {low_mask(6) & ~bit(0), low_mask(11) & ~low_mask(6)};
  cert.cores = cert.parts;
  REQUIRE(is_valid_shape(h, cert));
  const GrownShape up = d_operation(h, cert);
  CHECK(up.graph.order() == 13);
  CHECK(oracle::edges(up.graph) - oracle::edges(h) == 1 + 11 * 1 + 1);
  CHECK(is_valid_shape(up.graph, up.cert));
  const GrownShape down = d_inverse(up.graph, up.cert);
  CHECK(down.graph == h);

  ShapeCertificate plain;
  const Graph t = turan_graph(8, 2);
  plain.parts = {low_mask(4), low_mask(8) & ~low_mask(4)};
  plain.cores = plain.parts;
  CHECK(isomorphic(d_operation(t, plain).graph, turan_graph(10, 2)));

  ShapeCertificate hollow = plain;
  hollow.cores[1] = 0;
  CHECK_THROWS_AS(d_inverse(t, hollow), std::invalid_argument);
}

TEST_CASE("candidate certification") {
  const ForbiddenFamily k3({complete_graph(3)});
  const CandidateVerdict good = certify_candidate(turan_graph(8, 2), k3, 16, {}, true);
  CHECK(good.freeness.free == Decision::yes);
  CHECK(good.edge_count_matches);
  CHECK(good.in_extremal_set == true);
  const CandidateVerdict low = certify_candidate(path_graph(8), k3, 7, {}, true);
  CHECK(low.edge_count_matches);
  CHECK(low.in_extremal_set == false);
  const CandidateVerdict bad = certify_candidate(complete_graph(4), k3, 6);
  CHECK(bad.freeness.free == Decision::no);
  CHECK_FALSE(bad.in_extremal_set.has_value());
}
