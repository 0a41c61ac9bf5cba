#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "sdcay/group.hpp"

using namespace sdcay;

namespace {

// order multiset + abelian flag + center size: enough to separate the catalog
struct InvariantVector {
  std::vector<int> orders;
  bool abelian;
  int center;

  bool operator==(const InvariantVector& o) const {
    return orders == o.orders && abelian == o.abelian && center == o.center;
  }
};

InvariantVector invariants(const FiniteGroup& g) {
  InvariantVector iv;
  for (int x = 0; x < g.order; ++x) iv.orders.push_back(element_order(g, x));
  std::sort(iv.orders.begin(), iv.orders.end());
  iv.abelian = g.is_abelian();
  iv.center = 0;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    iv.center += central;
  }
  return iv;
}

}  // namespace

TEST_CASE("every catalog group satisfies the full group axioms") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& g : groups_of_order(n)) {
      CAPTURE(g.catalog_name);
      CHECK_NOTHROW(validate_group(g));
      CHECK(g.order == n);
    }
}

TEST_CASE("catalog counts match the classification of small groups") {
  const int expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (int n = 1; n <= 12; ++n)
    CHECK(static_cast<int>(groups_of_order(n).size()) == expected[n - 1]);
  CHECK_THROWS_AS(groups_of_order(13), std::invalid_argument);
}

TEST_CASE("no two catalog entries of equal order are isomorphic") {
  for (int n = 1; n <= 12; ++n) {
    auto groups = groups_of_order(n);
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = i + 1; j < groups.size(); ++j) {
        CAPTURE(groups[i].catalog_name);
        CAPTURE(groups[j].catalog_name);
        CHECK(!(invariants(groups[i]) == invariants(groups[j])));
      }
  }
}

TEST_CASE("make_group families and examples") {
  FiniteGroup z6 = make_group("cyclic", 6);
  CHECK(z6.order == 6);
  CHECK(element_order(z6, z6.index_of("1")) == 6);

  FiniteGroup d8 = make_group("dihedral", 8);
  int involution_count = static_cast<int>(involutions(d8).size());
  CHECK(involution_count == 5);

  FiniteGroup q8 = make_group("quaternion8");
  CHECK(static_cast<int>(involutions(q8).size()) == 1);

  CHECK(make_group("S3").order == 6);
  CHECK(make_group("A4").order == 12);
  CHECK(make_group("Dic3").order == 12);
  CHECK(make_group("Z2xZ2xZ2").order == 8);

  CHECK_THROWS_AS(make_group("symmetric", 5), std::invalid_argument);
  CHECK_THROWS_AS(make_group("cyclic"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("direct_product", 4), std::invalid_argument);
}

TEST_CASE("element orders") {
  FiniteGroup z6 = make_group("Z6");
  CHECK(element_order(z6, z6.identity) == 1);
  CHECK(element_order(z6, z6.index_of("2")) == 3);
  FiniteGroup d8 = make_group("D8");
  CHECK(element_order(d8, d8.index_of("s")) == 2);

  // Lagrange: the order of every element divides the group order
  for (int n = 1; n <= 12; ++n)
    for (const auto& g : groups_of_order(n))
      for (int x = 0; x < g.order; ++x) CHECK(g.order % element_order(g, x) == 0);
}

TEST_CASE("even order groups have an odd number of involutions") {
  for (int n = 2; n <= 12; n += 2)
    for (const auto& g : groups_of_order(n)) {
      CAPTURE(g.catalog_name);
      CHECK(involutions(g).size() % 2 == 1);
    }
}

TEST_CASE("generation by closure") {
  FiniteGroup z6 = make_group("Z6");
  CHECK(!is_generating(z6, {2, 4}));
  CHECK(is_generating(z6, {1, 5}));

  FiniteGroup d8 = make_group("D8");
  CHECK(is_generating(d8, {d8.index_of("s"), d8.index_of("rs")}));
  CHECK(!is_generating(d8, {d8.index_of("r2")}));
}

TEST_CASE("inverse closed subsets") {
  FiniteGroup z4 = make_group("Z4");
  auto subsets = inverse_closed_subsets(z4);
  std::vector<std::vector<int>> expected{{}, {1, 2, 3}, {1, 3}, {2}};
  CHECK(subsets == expected);

  CHECK(inverse_closed_subsets(make_group("Z2xZ2")).size() == 8);

  auto z5_pairs = inverse_closed_subsets(make_group("Z5"), 2);
  CHECK(z5_pairs == std::vector<std::vector<int>>{{1, 4}, {2, 3}});

  // properties over the whole catalog: e is never present, set equals its
  // inverse image, and generating filter agrees with is_generating
  for (int n = 1; n <= 10; ++n)
    for (const auto& g : groups_of_order(n))
      for (const auto& s : inverse_closed_subsets(g)) {
        std::set<int> as_set(s.begin(), s.end());
        CHECK(!as_set.count(g.identity));
        for (int x : s) CHECK(as_set.count(g.inverse(x)));
      }

  FiniteGroup z6 = make_group("Z6");
  auto generating = inverse_closed_subsets(z6, std::nullopt, true);
  for (const auto& s : generating) CHECK(is_generating(z6, s));
  CHECK(generating.size() == 5);
}

TEST_CASE("cosets") {
  FiniteGroup s3 = make_group("S3");
  std::vector<int> a3;
  for (int x = 0; x < 6; ++x)
    if (element_order(s3, x) != 2) a3.push_back(x);
  CHECK(left_cosets(s3, a3).size() == 2);

  FiniteGroup z6 = make_group("Z6");
  CHECK(left_cosets(z6, {0, 3}).size() == 3);
  FiniteGroup z4 = make_group("Z4");
  CHECK(left_cosets(z4, {0, 2}).size() == 2);

  CHECK_THROWS_AS(left_cosets(z6, {0, 1}), std::invalid_argument);

  // |cosets| * |H| = n for every subgroup of every catalog group
  for (int n = 1; n <= 12; ++n)
    for (const auto& g : groups_of_order(n))
      for (const auto& h : all_subgroups(g)) {
        auto blocks = left_cosets(g, h);
        CHECK(blocks.size() * h.size() == static_cast<size_t>(n));
        for (const auto& b : blocks) CHECK(b.size() == h.size());
      }
}

TEST_CASE("nonabelian cosets can differ by side") {
  FiniteGroup s3 = make_group("S3");
  std::vector<int> h{s3.identity, s3.index_of("(12)")};
  auto left = left_cosets(s3, h);
  auto right = right_cosets(s3, h);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  CHECK(left != right);
}

TEST_CASE("group json round trip and validation") {
  FiniteGroup d8 = make_group("D8");
  FiniteGroup back = group_from_json(group_to_json(d8));
  CHECK(back.table == d8.table);
  CHECK(back.names == d8.names);
  CHECK(back.identity == d8.identity);

  // corrupt the table: no longer a latin square
  std::string text = group_to_json(make_group("Z2"));
  auto pos = text.rfind("1");
  text.replace(pos, 1, "0");
  CHECK_THROWS_AS(group_from_json(text), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json("{\"order\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json("not json"), std::invalid_argument);
}

TEST_CASE("dicyclic group matches its defining relations") {
  FiniteGroup t = make_group("Dic3");
  int a = t.index_of("a"), b = t.index_of("b");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(element_order(t, a) == 4);
  CHECK(element_order(t, b) == 3);
  // a^-1 b a = b^-1
  int conj = t.mul(t.mul(t.inverse(a), b), a);
  CHECK(conj == t.inverse(b));
  CHECK(static_cast<int>(involutions(t).size()) == 1);
}
