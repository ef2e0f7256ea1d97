#include <catch2/catch_amalgamated.hpp>

#include "ccn/catalog.hpp"
#include "ccn/linear_equivalence.hpp"

using namespace ccn;

TEST_CASE("equivalence is reflexive and symmetric") {
  const CatalogEntry* c = catalog_find("C");
  const CatalogEntry* f = catalog_find("F");
  REQUIRE((c && f));
  CHECK(linearly_equivalent(c->net, c->net));
  CHECK(linearly_equivalent(f->net, f->net));
  bool cf = linearly_equivalent(c->net, f->net);
  CHECK(cf == linearly_equivalent(f->net, c->net));
  CHECK_FALSE(cf);
}

TEST_CASE("relabelling the cells preserves the equivalence class") {
  // F with cells 1 and 3 swapped.
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  CHECK(f->net.sigma == std::vector<std::vector<int>>{{2, 1, 1}});
  Network swapped = make_network("F-relabelled", 3, {{3, 3, 2}});
  CHECK(linearly_equivalent(f->net, swapped));

  // M6 under a 3-cycle of the cells.
  const CatalogEntry* m6 = catalog_find("M6");
  REQUIRE(m6 != nullptr);
  std::vector<std::vector<int>> rot;
  auto fwd = [](int c) { return c % 3 + 1; };  // 1->2->3->1
  for (const auto& row : m6->net.sigma) {
    // Cell u becomes fwd(u) and reads from the image of its old source.
    std::vector<int> r(3);
    for (int i = 0; i < 3; ++i) r[fwd(i + 1) - 1] = fwd(row[i]);
    rot.push_back(r);
  }
  Network m6rot = make_network("M6-rot", 3, rot);
  CHECK(linearly_equivalent(m6->net, m6rot));
}

TEST_CASE("duplicating an input type changes nothing") {
  const CatalogEntry* d = catalog_find("D");
  REQUIRE(d != nullptr);
  std::vector<std::vector<int>> doubled = d->net.sigma;
  doubled.push_back(d->net.sigma[0]);
  Network twice = make_network("D-doubled", 3, doubled);
  CHECK(linearly_equivalent(d->net, twice));
  // Appending the identity input type also changes nothing.
  std::vector<std::vector<int>> with_id = d->net.sigma;
  with_id.push_back({1, 2, 3});
  CHECK(linearly_equivalent(d->net, make_network("D-id", 3, with_id)));
}

TEST_CASE("span dimension counts independent adjacency patterns") {
  const CatalogEntry* c = catalog_find("C");
  const CatalogEntry* m6 = catalog_find("M6");
  REQUIRE((c && m6));
  CHECK(adjacency_span_dimension(c->net) == 2);
  CHECK(adjacency_span_dimension(m6->net) == 7);
  Network dup = make_network("dup", 3, {{1, 1, 2}, {1, 1, 2}});
  CHECK(adjacency_span_dimension(dup) == 2);
}

TEST_CASE("cell count mismatch is rejected") {
  Network two = make_network("two", 2, {{2, 1}});
  const CatalogEntry* c = catalog_find("C");
  REQUIRE(c != nullptr);
  try {
    linearly_equivalent(two, c->net);
    FAIL("expected a throw");
  } catch (const CcnError& e) {
    CHECK(e.code() == ErrorCode::CellCountMismatch);
  }
}
