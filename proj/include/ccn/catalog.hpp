#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccn/catalog_data.hpp"
#include "ccn/classify.hpp"
#include "ccn/expr.hpp"
#include "ccn/linear_equivalence.hpp"
#include "ccn/bifurcation.hpp"

namespace ccn {

struct EigExpectation {
  std::string value;
  bool defective = false;
  std::array<std::string, 3> vec;
};

struct CatalogEntry {
  std::string id;
  Network net;
  std::string jacobian;
  int two_dimensional = 0;
  std::string structure;
  std::string spectrum;
  std::string top_branch;
  std::optional<std::string> discriminant;
  std::vector<EigExpectation> eig_rows;
};

// Spectrum clause names as used in the catalog tables.
inline std::string spectrum_clause(const SpectralReport& rep) {
  switch (rep.kase) {
    case SpectrumCase::ValencyTriple: return "valency-triple";
    case SpectrumCase::ValencyDouble: return "valency-double";
    case SpectrumCase::SemisimplePair: return "semisimple-double";
    case SpectrumCase::DefectivePair: return "defective";
    case SpectrumCase::Distinct: break;
  }
  if (rep.disc.linear_factor ||
      rep.disc.cls == DiscClass::PositiveDefiniteOrPSD)
    return "distinct-real-always";
  if (rep.disc.cls == DiscClass::Indefinite)
    return "distinct-real-open";
  return "distinct-complex";
}

// Collapse the verdicts at the top node (fully asymmetric states) to the
// branching summary used in the catalog tables.
inline std::string branch_summary(const AnnotatedLattice& al,
                                  const std::vector<BranchPrediction>& preds) {
  bool open = false;
  for (const auto& p : preds) {
    if (p.node != al.lattice.top()) continue;
    if (p.verdict == Verdict::Supports) return "supports";
    if (p.verdict == Verdict::SupportsOnOpenSet) open = true;
  }
  return open ? "open" : "none";
}

namespace detail {

inline std::vector<int> parse_int_row(const std::string& s,
                                      const std::string& origin) {
  std::vector<int> row;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw CcnError(ErrorCode::CorruptFixture,
                     origin + ": bad integer '" + tok + "'");
    }
    if (used != tok.size())
      throw CcnError(ErrorCode::CorruptFixture,
                     origin + ": bad integer '" + tok + "'");
    row.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return row;
}

inline CatalogEntry build_entry(const RawEntry& raw) {
  CatalogEntry e;
  e.id = raw.id;
  std::string sigma = raw.sigma;
  std::vector<std::vector<int>> rows;
  size_t pos = 0;
  while (pos <= sigma.size()) {
    size_t bar = sigma.find('|', pos);
    std::string part = sigma.substr(pos, bar == std::string::npos
                                             ? std::string::npos
                                             : bar - pos);
    rows.push_back(parse_int_row(part, e.id));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (rows.empty())
    throw CcnError(ErrorCode::CorruptFixture, e.id + ": empty input table");
  int n = (int)rows[0].size();
  e.net = make_network(e.id, n, rows);
  e.jacobian = raw.jacobian;
  e.two_dimensional = raw.expected_2d;
  e.structure = raw.structure;
  e.spectrum = raw.spectrum;
  e.top_branch = raw.top_branch;
  if (raw.discriminant) e.discriminant = std::string(raw.discriminant);
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::kCatalog)
      out.push_back(detail::build_entry(raw));
    for (const auto& row : detail::kEigRows) {
      CatalogEntry* home = nullptr;
      for (auto& e : out)
        if (e.id == row.id) home = &e;
      if (!home)
        throw CcnError(ErrorCode::CorruptFixture,
                       std::string("eigenvalue row for unknown id ") + row.id);
      EigExpectation ex;
      ex.value = row.value;
      ex.defective = row.defective;
      ex.vec = {row.v1, row.v2, row.v3};
      home->eig_rows.push_back(ex);
    }
    for (const auto& e : out) {
      if (e.id.find('&') != std::string::npos)
        throw CcnError(ErrorCode::CorruptFixture, e.id + ": unnormalized id");
      if (!is_connected(e.net))
        throw CcnError(ErrorCode::CorruptFixture, e.id + ": disconnected");
    }
    return out;
  }();
  return entries;
}

inline const CatalogEntry* catalog_find(std::string id) {
  for (auto& ch : id)
    if (ch == '&') ch = '_';
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

struct CrossCheckItem {
  std::string aspect;
  bool ok = false;
  std::string detail;
};

struct CrossCheckReport {
  std::string id;
  std::vector<CrossCheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }
};

namespace detail {

// Residual of every tabulated eigenvector at randomly sampled coefficients.
// Samples whose expressions hit a small denominator are redrawn.
inline CrossCheckItem eig_sampling_item(const CatalogEntry& e, int samples,
                                        std::uint64_t seed) {
  CrossCheckItem item{"eigenvectors", true, ""};
  const int k = e.net.k();
  std::vector<Expr> values, vecs;
  for (const auto& row : e.eig_rows) {
    values.push_back(Expr::parse(row.value));
    for (const auto& c : row.vec) vecs.push_back(Expr::parse(c));
  }
  Rng rng(seed);
  double worst = 0;
  int done = 0, guard = 0;
  while (done < samples) {
    if (++guard > samples * 50) {
      item.ok = false;
      item.detail = "could not draw enough well-conditioned samples";
      return item;
    }
    std::vector<double> f(k + 1);
    for (auto& x : f) x = rng.symmetric();
    double min_den = 1e300;
    std::vector<double> mu(e.eig_rows.size());
    std::vector<double> comp(vecs.size());
    for (size_t i = 0; i < values.size(); ++i)
      mu[i] = values[i].eval(f, &min_den);
    for (size_t i = 0; i < vecs.size(); ++i)
      comp[i] = vecs[i].eval(f, &min_den);
    if (min_den < 0.05) continue;
    Eigen::MatrixXd J = jacobian_at(e.net, f);
    for (size_t i = 0; i < e.eig_rows.size(); ++i) {
      Eigen::Vector3d v(comp[3 * i], comp[3 * i + 1], comp[3 * i + 2]);
      double r = (J * v - mu[i] * v).cwiseAbs().maxCoeff() /
                 std::max(1.0, v.cwiseAbs().maxCoeff());
      worst = std::max(worst, r);
    }
    ++done;
  }
  char buf[96];
  snprintf(buf, sizeof buf, "%d samples, worst residual %.2e", done, worst);
  item.detail = buf;
  item.ok = worst < 1e-9;
  return item;
}

}  // namespace detail

// Recompute everything the catalog tabulates for one entry and compare.
inline CrossCheckReport cross_check(const CatalogEntry& e) {
  CrossCheckReport rep;
  rep.id = e.id;
  const int k = e.net.k();

  {
    CrossCheckItem item{"jacobian", true, ""};
    std::vector<std::vector<LinearForm>> want = jacobian_form(e.net);
    std::string text = e.jacobian;
    std::vector<std::string> cells;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t cut = text.find_first_of(";,", pos);
      cells.push_back(text.substr(
          pos, cut == std::string::npos ? std::string::npos : cut - pos));
      if (cut == std::string::npos) break;
      pos = cut + 1;
    }
    if ((int)cells.size() != e.net.n * e.net.n) {
      item.ok = false;
      item.detail = "entry count mismatch";
    } else {
      for (int i = 0; i < e.net.n && item.ok; ++i)
        for (int j = 0; j < e.net.n && item.ok; ++j) {
          LinearForm got =
              linear_form_from_expr(cells[i * e.net.n + j], k);
          if (got != want[i][j]) {
            item.ok = false;
            item.detail = "mismatch at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")";
          }
        }
    }
    rep.items.push_back(item);
  }

  AnnotatedLattice al = annotate(e.net);

  {
    CrossCheckItem item{"two-dimensional", false, ""};
    int got = (int)al.lattice.two_dimensional().size();
    item.ok = got == e.two_dimensional;
    item.detail = "counted " + std::to_string(got) + ", tabulated " +
                  std::to_string(e.two_dimensional);
    rep.items.push_back(item);
  }
  {
    CrossCheckItem item{"structure", false, ""};
    std::string got = structure_type(al);
    item.ok = got == e.structure;
    item.detail = "computed " + got;
    rep.items.push_back(item);
  }
  {
    CrossCheckItem item{"spectrum", false, ""};
    std::string got = spectrum_clause(al.report);
    item.ok = got == e.spectrum;
    item.detail = "computed " + got;
    rep.items.push_back(item);
  }
  if (e.discriminant) {
    CrossCheckItem item{"discriminant", false, ""};
    QuadraticForm want = quadratic_form_from_expr(*e.discriminant, k);
    item.ok = want == al.report.inv.discriminant;
    item.detail = "computed " + to_string(al.report.inv.discriminant) +
                  ", tabulated " + *e.discriminant;
    rep.items.push_back(item);
  }
  if (!e.eig_rows.empty()) {
    rep.items.push_back(detail::eig_sampling_item(e, 100, 77));
    CrossCheckItem item{"defective-marks", false, ""};
    bool marked = false;
    for (const auto& row : e.eig_rows) marked |= row.defective;
    bool computed = al.report.kase == SpectrumCase::DefectivePair;
    item.ok = marked == computed;
    item.detail = marked == computed ? "consistent" : "flag mismatch";
    rep.items.push_back(item);
  }
  {
    CrossCheckItem item{"top-branch", false, ""};
    std::string got = branch_summary(al, predict(al));
    item.ok = got == e.top_branch;
    item.detail = "computed " + got;
    rep.items.push_back(item);
  }
  return rep;
}

inline nlohmann::json entry_network_json(const CatalogEntry& e) {
  return network_to_json(e.net);
}

inline nlohmann::json entry_expected_json(const CatalogEntry& e) {
  nlohmann::json j;
  j["id"] = e.id;
  j["two_dimensional"] = e.two_dimensional;
  j["structure"] = e.structure;
  j["spectrum"] = e.spectrum;
  j["top_branch"] = e.top_branch;
  if (e.discriminant) j["discriminant"] = *e.discriminant;
  if (!e.eig_rows.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : e.eig_rows) {
      nlohmann::json row;
      row["value"] = r.value;
      row["defective"] = r.defective;
      row["vector"] = {r.vec[0], r.vec[1], r.vec[2]};
      rows.push_back(row);
    }
    j["eigenvalues"] = rows;
  }
  return j;
}

}  // namespace ccn
