#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ccn/catalog.hpp"
#include "ccn/linear_equivalence.hpp"

using namespace ccn;

TEST_CASE("the catalog holds 53 well formed three cell networks") {
  const auto& entries = catalog();
  CHECK(entries.size() == 53);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK(!e.id.empty());
    CHECK(e.id.find('&') == std::string::npos);
    CHECK(ids.insert(e.id).second);
    CHECK(e.net.n == 3);
    CHECK(e.net.name == e.id);
    CHECK(is_connected(e.net));
    CHECK(!e.structure.empty());
    CHECK(!e.spectrum.empty());
    CHECK(!e.top_branch.empty());
  }
}

TEST_CASE("lookup accepts both id spellings") {
  const CatalogEntry* amp = catalog_find("C1&D1");
  const CatalogEntry* us = catalog_find("C1_D1");
  REQUIRE(us != nullptr);
  CHECK(amp == us);
  CHECK(catalog_find("nonsense") == nullptr);
}

TEST_CASE("spectrum clauses name the five generic patterns") {
  auto clause = [](const char* id) {
    const CatalogEntry* e = catalog_find(id);
    REQUIRE(e != nullptr);
    return spectrum_clause(classify_spectrum(e->net));
  };
  CHECK(clause("D") == "defective");
  CHECK(clause("C") == "semisimple-double");
  CHECK(clause("E6_E4") == "valency-double");
  CHECK(clause("F") == "distinct-real-always");
  CHECK(clause("M6") == "distinct-real-open");
  CHECK(clause("A") == "distinct-complex");
}

TEST_CASE("no two catalog networks are linearly equivalent") {
  const auto& entries = catalog();
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      CHECK_FALSE(linearly_equivalent(entries[i].net, entries[j].net));
}

TEST_CASE("the eigenvector fixtures cover 29 entries with 83 rows") {
  size_t rows = 0;
  int with_rows = 0;
  for (const auto& e : catalog()) {
    rows += e.eig_rows.size();
    if (!e.eig_rows.empty()) ++with_rows;
    for (const auto& r : e.eig_rows) {
      CHECK(!r.value.empty());
      CHECK(!r.vec[0].empty());
    }
  }
  CHECK(rows == 83);
  CHECK(with_rows == 29);
}

TEST_CASE("eigenvector sampling is deterministic") {
  const CatalogEntry* target = nullptr;
  for (const auto& e : catalog())
    if (!e.eig_rows.empty()) {
      target = &e;
      break;
    }
  REQUIRE(target != nullptr);
  CrossCheckItem a = detail::eig_sampling_item(*target, 50, 77);
  CrossCheckItem b = detail::eig_sampling_item(*target, 50, 77);
  CHECK(a.ok == b.ok);
  CHECK(a.detail == b.detail);
  CHECK(a.ok);
}

TEST_CASE("cross checks pass except the known discriminant mismatch") {
  std::vector<std::pair<std::string, std::string>> failures;
  for (const auto& e : catalog()) {
    CrossCheckReport rep = cross_check(e);
    CHECK(rep.id == e.id);
    for (const auto& it : rep.items)
      if (!it.ok) failures.push_back({e.id, it.aspect});
  }
  // One tabulated discriminant does not match what the network itself
  // yields; the checker must see exactly that single discrepancy.
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].first == "D1_D2");
  CHECK(failures[0].second == "discriminant");
  CrossCheckReport dd = cross_check(*catalog_find("D1_D2"));
  for (const auto& it : dd.items)
    if (it.aspect == "discriminant") {
      CHECK(it.detail.find("computed 4f1f2") != std::string::npos);
      CHECK(it.detail.find("tabulated") != std::string::npos);
    }
}

TEST_CASE("json export round trips the network definition") {
  for (const char* id : {"C", "D1_D2", "M6"}) {
    const CatalogEntry* e = catalog_find(id);
    REQUIRE(e != nullptr);
    nlohmann::json j = entry_network_json(*e);
    Network back = network_from_json(j, "roundtrip");
    CHECK(back.name == e->net.name);
    CHECK(back.n == e->net.n);
    CHECK(back.sigma == e->net.sigma);
  }
  const CatalogEntry* dd = catalog_find("D1_D2");
  nlohmann::json exp = entry_expected_json(*dd);
  CHECK(exp["id"] == "D1_D2");
  CHECK(exp.contains("two_dimensional"));
  CHECK(exp.contains("structure"));
  CHECK(exp.contains("spectrum"));
  CHECK(exp.contains("top_branch"));
  CHECK(exp.contains("discriminant"));
}
