#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wpi/lattice.hpp"

using namespace wpi;

namespace {
MultiIndex mi(std::vector<int> e) { return MultiIndex{std::move(e)}; }
}  // namespace

TEST_CASE("index set listings") {
  auto s01 = build_index_set(0, 1);
  REQUIRE(s01.size() == 2);
  CHECK(s01[0] == mi({2}));
  CHECK(s01[1] == mi({1}));

  auto s11 = build_index_set(1, 1);
  REQUIRE(s11.size() == 4);
  CHECK(s11[0] == mi({2, 2}));
  CHECK(s11[1] == mi({2, 1}));
  CHECK(s11[2] == mi({1, 2}));
  CHECK(s11[3] == mi({1, 1}));

  CHECK(build_index_set(2, 1).size() == 8);
  CHECK(build_index_set(1, 2).size() == 10);
}

TEST_CASE("index set cardinality 2(3d-1)^n") {
  for (int n = 0; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      long long expect = 2;
      for (int k = 0; k < n; ++k) expect *= 3 * d - 1;
      CHECK(static_cast<long long>(build_index_set(n, d).size()) == expect);
    }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(build_index_set(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_index_set(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_indices(1, 1, OrderTag{2}), std::invalid_argument);
}

TEST_CASE("compare") {
  CHECK(compare(OrderTag{0}, mi({2, 2}), mi({2, 1})) == Ordering::Less);
  CHECK(compare(OrderTag{1}, mi({2, 1}), mi({1, 1})) == Ordering::Less);
  CHECK(compare(OrderTag{1}, mi({1, 1}), mi({2, 2})) == Ordering::Less);
  CHECK(compare(OrderTag{0}, mi({1, 2}), mi({1, 2})) == Ordering::Equal);
  CHECK(compare(OrderTag{0}, mi({1, 1}), mi({2, 2})) == Ordering::Greater);
  CHECK_THROWS_AS(compare(OrderTag{0}, mi({1}), mi({1, 1})), std::invalid_argument);
}

TEST_CASE("enumerations are sorted bijections") {
  auto e1 = enumerate_indices(1, 1, OrderTag{1});
  REQUIRE(e1.size() == 4);
  CHECK(e1[0] == mi({2, 1}));
  CHECK(e1[1] == mi({1, 1}));
  CHECK(e1[2] == mi({2, 2}));
  CHECK(e1[3] == mi({1, 2}));

  for (int kappa = 0; kappa <= 2; ++kappa) {
    auto e = enumerate_indices(2, 2, OrderTag{kappa});
    auto base = build_index_set(2, 2);
    CHECK(std::is_permutation(e.begin(), e.end(), base.begin()));
    for (std::size_t k = 0; k + 1 < e.size(); ++k)
      CHECK(compare(OrderTag{kappa}, e[k], e[k + 1]) == Ordering::Less);
  }
}

TEST_CASE("edge predicate") {
  CHECK(is_edge(mi({1, 1}), mi({2, 2})));
  CHECK_FALSE(is_edge(mi({1, 2}), mi({2, 1})));
  CHECK_FALSE(is_edge(mi({1, 2}), mi({1, 2})));
  CHECK(is_edge(mi({2, 2}), mi({1, 1})));  // symmetric
}

TEST_CASE("graph fixtures") {
  LatticeGraph g = build_graph(1, 1);
  GraphStats s = graph_stats(g);
  CHECK(s.vertex_count == 4);
  CHECK(s.edge_count == 5);
  CHECK(s.connected);
  CHECK(triangles(g).size() == 2);

  CHECK(build_graph(1, 2).vertices.size() == 10);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 2; ++d) CHECK(graph_stats(build_graph(n, d)).connected);
}

TEST_CASE("triangles are prec0-ordered edge triples") {
  LatticeGraph g = build_graph(2, 1);
  for (auto [i, j, k] : triangles(g)) {
    CHECK(i < j);
    CHECK(j < k);
    CHECK(is_edge(g.vertices[i], g.vertices[j]));
    CHECK(is_edge(g.vertices[i], g.vertices[k]));
    CHECK(is_edge(g.vertices[j], g.vertices[k]));
  }
}

TEST_CASE("coordinate permutation symmetry") {
  // swapping positions 1 and 2 preserves the edge relation at (2,2)
  auto swapped = [](const MultiIndex& a) {
    return MultiIndex{{a.entries[0], a.entries[2], a.entries[1]}};
  };
  auto verts = build_index_set(2, 2);
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      CHECK(is_edge(verts[a], verts[b]) == is_edge(swapped(verts[a]), swapped(verts[b])));
}

TEST_CASE("exports") {
  LatticeGraph g = build_graph(1, 1);
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph Gamma_1_1") != std::string::npos);
  CHECK(dot.find("\"2.2\" -- ") != std::string::npos);
  std::string js = graph_to_json(g);
  CHECK(js.find("\"vertices\"") != std::string::npos);
  CHECK(js.find("\"edges\"") != std::string::npos);
}
