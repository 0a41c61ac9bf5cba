#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sdcay/cayley.hpp"
#include "sdcay/isomorphism.hpp"
#include "testutil.hpp"

using namespace sdcay;

TEST_CASE("basic constructions") {
  // Cay({1,3}:Z4) is the 4-cycle
  Graph c4 = build_cayley({make_group("Z4"), {1, 3}});
  CHECK(are_isomorphic(c4, standard_graph(GraphKind::Cycle, 4)).has_value());

  // S = G\{e} gives the complete graph
  FiniteGroup klein = make_group("Z2xZ2");
  Graph k4 = build_cayley({klein, {1, 2, 3}});
  CHECK(k4.edge_count() == 6);

  // transpositions of S3 give K_{3,3}
  FiniteGroup s3 = make_group("S3");
  std::vector<int> transpositions;
  for (int x = 0; x < 6; ++x)
    if (x != s3.identity && s3.mul(x, x) == s3.identity) transpositions.push_back(x);
  Graph hex = build_cayley({s3, transpositions});
  CHECK(complete_multipartite_parts(hex) == std::vector<int>{3, 3});
}

TEST_CASE("spec validation errors name the offender") {
  FiniteGroup z4 = make_group("Z4");
  CHECK_THROWS_WITH_AS(build_cayley({z4, {0, 2}}),
                       doctest::Contains("identity"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_cayley({z4, {1}}), doctest::Contains("1"),
                       std::invalid_argument);
}

TEST_CASE("every cayley graph is |S|-regular; connected iff generating") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& g : groups_of_order(n))
      for (const auto& s : inverse_closed_subsets(g)) {
        Graph cay = build_cayley({g, s});
        if (!s.empty())
          CHECK(regular_degree(cay) == static_cast<int>(s.size()));
        CHECK(is_connected(cay) == is_generating(g, s));
      }
}

TEST_CASE("right translations are automorphisms") {
  for (const auto& g : groups_of_order(8)) {
    auto subsets = inverse_closed_subsets(g, 3, true);
    if (subsets.empty()) continue;
    Graph cay = build_cayley({g, subsets.front()});
    for (int t = 0; t < g.order; ++t) {
      for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
          CHECK(cay.has_edge(a, b) == cay.has_edge(g.mul(a, t), g.mul(b, t)));
    }
  }
}

TEST_CASE("adjacency is symmetric under the two product conventions") {
  // with S = S^-1, a*b^-1 in S iff b*a^-1 in S; spot check a nonabelian group
  FiniteGroup d10 = make_group("D10");
  for (const auto& s : inverse_closed_subsets(d10, 3, true)) {
    Graph cay = build_cayley({d10, s});
    std::vector<char> in_s(d10.order, 0);
    for (int x : s) in_s[x] = 1;
    for (int a = 0; a < d10.order; ++a)
      for (int b = 0; b < d10.order; ++b) {
        if (a == b) continue;
        CHECK(static_cast<bool>(in_s[d10.mul(b, d10.inverse(a))]) ==
              cay.has_edge(a, b));
      }
  }
}

TEST_CASE("coset multipartite structure") {
  FiniteGroup s3 = make_group("S3");
  std::vector<int> a3;
  for (int x = 0; x < 6; ++x)
    if (element_order(s3, x) != 2) a3.push_back(x);
  CHECK(verify_coset_multipartite(s3, a3));

  CHECK(verify_coset_multipartite(make_group("Z6"), {0, 3}));
  CHECK(verify_coset_multipartite(make_group("Z4"), {0, 2}));

  CHECK_THROWS_AS(verify_coset_multipartite(make_group("Z4"), {0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("triple complement classes") {
  FiniteGroup z8 = make_group("Z8");
  auto r1 = triple_complement_class(z8, {4, 2, 6});
  CHECK(r1.n_even);
  CHECK(r1.cls == TripleClass::Empty3);

  FiniteGroup z12 = make_group("Z12");
  auto r2 = triple_complement_class(z12, {6, 4, 8});
  CHECK(r2.n_even);
  CHECK(r2.cls == TripleClass::P3);

  FiniteGroup z10 = make_group("Z10");
  auto r3 = triple_complement_class(z10, {5, 2, 8});
  CHECK(r3.n_even);
  CHECK(r3.cls == TripleClass::K3);

  // not inverse-closed: S = Z8 \ {0,1,2,6} leaves 7 unmatched
  CHECK_THROWS_AS(triple_complement_class(z8, {1, 2, 6}), std::invalid_argument);
}

TEST_CASE("cayley spec strings") {
  CayleySpec spec = parse_cayley_spec("dihedral:8:s,rs,r2");
  CHECK(spec.group.catalog_name == "D8");
  CHECK(spec.connection_set.size() == 3);
  Graph cay = build_cayley(spec);
  CHECK(regular_degree(cay) == 3);

  CayleySpec z6 = parse_cayley_spec("Z6:1,5");
  CHECK(z6.connection_set == std::vector<int>{1, 5});

  // tuple names survive the comma split
  CayleySpec prod = parse_cayley_spec("Z2xZ6:(0,1),(0,5),(1,0)");
  CHECK(prod.connection_set.size() == 3);

  // numeric indices are accepted too
  CayleySpec nums = parse_cayley_spec("cyclic:8:1,4,7");
  CHECK(nums.connection_set == std::vector<int>{1, 4, 7});

  CHECK_THROWS_AS(parse_cayley_spec("Z6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_spec("Z6:7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_spec("Z6:nope"), std::invalid_argument);
}
