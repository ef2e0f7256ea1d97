// Acceptance harness: one check per catalog-level claim, one PASS/FAIL line
// each.  Run with --criterion N for a single check, or no arguments for all.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccn/catalog.hpp"
#include "ccn/verify.hpp"

using namespace ccn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// --- 1: two-dimensional synchrony node counts --------------------------------

Outcome criterion1() {
  Outcome out;
  int checked = 0;
  for (const auto& e : catalog()) {
    SynchronyLattice lat = enumerate_synchrony(e.net);
    int got = (int)lat.two_dimensional().size();
    ++checked;
    if (got != e.two_dimensional)
      out.fail(e.id + ": counted " + std::to_string(got) + ", expected " +
               std::to_string(e.two_dimensional));
  }
  if (out.ok) out.detail = std::to_string(checked) + " entries match";
  return out;
}

// --- 2: balanced enumeration vs filter-all-partitions oracle -----------------

// Independent balance test: same-class cells must draw their type-l inputs
// from a single class, checked via explicit source-class sets.
bool oracle_balanced(const Network& net, const std::vector<int>& p) {
  int classes = 1 + *std::max_element(p.begin(), p.end());
  for (size_t l = 0; l < net.sigma.size(); ++l) {
    for (int c = 0; c < classes; ++c) {
      std::set<int> sources;
      for (int i = 0; i < net.n; ++i)
        if (p[i] == c) sources.insert(p[net.sigma[l][i] - 1]);
      if (sources.size() > 1) return false;
    }
  }
  return true;
}

Outcome check_against_oracle(const Network& net, Outcome& out) {
  SynchronyLattice lat = enumerate_synchrony(net);
  std::set<std::vector<int>> got;
  for (const auto& node : lat.nodes) got.insert(node.partition);
  std::set<std::vector<int>> want;
  for (const auto& p : all_partitions(net.n))
    if (oracle_balanced(net, p)) want.insert(p);
  if (got != want)
    out.fail(net.name + ": lattice has " + std::to_string(got.size()) +
             " nodes, oracle " + std::to_string(want.size()));
  // Join and meet must be the least upper / greatest lower bounds found by
  // scanning the node list.
  for (int a = 0; a < lat.size(); ++a)
    for (int b = a + 1; b < lat.size(); ++b) {
      int j = lat.join(a, b);
      for (int c = 0; c < lat.size(); ++c)
        if (lat.leq(a, c) && lat.leq(b, c) && lat.leq(c, j) && c != j)
          out.fail(net.name + ": join(" + std::to_string(a) + "," +
                   std::to_string(b) + ") not least");
      int m = lat.meet(a, b);
      for (int c = 0; c < lat.size(); ++c)
        if (lat.leq(c, a) && lat.leq(c, b) && lat.leq(m, c) && c != m)
          out.fail(net.name + ": meet(" + std::to_string(a) + "," +
                   std::to_string(b) + ") not greatest");
    }
  return out;
}

Outcome criterion2() {
  Outcome out;
  for (const auto& e : catalog()) check_against_oracle(e.net, out);
  Rng rng(999);
  for (int t = 0; t < 50; ++t) {
    int n = 3 + (int)rng.pick(4);
    int k = 1 + (int)rng.pick(3);
    std::vector<std::vector<int>> sigma(k, std::vector<int>(n));
    for (auto& row : sigma)
      for (int& v : row) v = 1 + (int)rng.pick(n);
    Network net = make_network("random" + std::to_string(t), n, sigma);
    check_against_oracle(net, out);
  }
  if (out.ok) out.detail = "53 catalog + 50 random networks agree";
  return out;
}

// --- 3: spectrum clauses and canonical discriminant strings ------------------

Outcome criterion3() {
  Outcome out;
  for (const auto& e : catalog()) {
    SpectralReport rep = classify_spectrum(e.net);
    std::string clause = spectrum_clause(rep);
    if (clause != e.spectrum)
      out.fail(e.id + ": computed " + clause + ", expected " + e.spectrum);
    if (e.discriminant) {
      std::string got = to_string(rep.inv.discriminant);
      if (got != *e.discriminant)
        out.fail(e.id + ": discriminant computed " + got + ", tabulated " +
                 *e.discriminant);
    }
  }
  if (out.ok) out.detail = "all clauses and discriminant strings match";
  return out;
}

// --- 4: structure types ------------------------------------------------------

Outcome criterion4() {
  Outcome out;
  std::map<std::string, int> seen;
  for (const auto& e : catalog()) {
    AnnotatedLattice al = annotate(e.net);
    std::string got = structure_type(al);
    ++seen[got];
    if (got != e.structure)
      out.fail(e.id + ": computed " + got + ", expected " + e.structure);
  }
  if (seen.count("C2L0d"))
    out.fail("a catalog network received type C2L0d");
  if (out.ok) {
    out.detail = "types:";
    for (const auto& [t, c] : seen)
      out.detail += " " + t + "=" + std::to_string(c);
  }
  return out;
}

// --- 5: eigen-expression residuals -------------------------------------------

Outcome criterion5() {
  Outcome out;
  int tables = 0;
  for (const auto& e : catalog()) {
    if (e.eig_rows.empty()) continue;
    ++tables;
    CrossCheckItem item = detail::eig_sampling_item(e, 100, 77);
    if (!item.ok) out.fail(e.id + ": " + item.detail);
  }
  if (out.ok)
    out.detail = std::to_string(tables) +
                 " entries sampled, all residuals below 1e-9";
  return out;
}

// --- 6: branch-support verdicts ----------------------------------------------

Outcome criterion6() {
  Outcome out;
  for (const auto& e : catalog()) {
    AnnotatedLattice al = annotate(e.net);
    auto preds = predict(al);
    for (const auto& p : preds)
      if (p.verdict == Verdict::Unhandled)
        out.fail(e.id + ": unhandled verdict at " +
                 partition_label(al.lattice.nodes[p.node].partition));
    // The fully synchronous subspace and every two-dimensional subspace
    // must support a branch.
    std::set<int> must_support = {al.lattice.bottom()};
    for (int node : al.lattice.two_dimensional()) must_support.insert(node);
    for (int node : must_support) {
      bool ok = false;
      for (const auto& p : preds)
        if (p.node == node && p.verdict == Verdict::Supports) ok = true;
      if (!ok)
        out.fail(e.id + ": no supporting branch at " +
                 partition_label(al.lattice.nodes[node].partition));
    }
    std::string top = branch_summary(al, preds);
    if (top != e.top_branch)
      out.fail(e.id + ": top-level " + top + ", expected " + e.top_branch);
  }
  if (out.ok)
    out.detail = "all verdicts match; no unhandled configurations";
  return out;
}

// --- 7: second-order determinacy sweep ---------------------------------------

Outcome criterion7() {
  Outcome out;
  const std::set<std::pair<std::string, std::string>> expected = {
      {"B1_F1", "f0 + f1 - f2"}, {"E6_F4", "f0 + f1 - f2"},
      {"E6_F5", "f0 + f1 - f2"}, {"E6_F6", "f0 + f1 - f2"},
      {"C1_B1", "f0 - f2"},      {"F", "f0 - f1"},
      {"F1_F2", "f0 - f1 - f2"}, {"F1_F6", "f0 - f1 - f2"},
  };
  std::set<std::pair<std::string, std::string>> vanishing;
  Rng rng(12345);
  for (const auto& e : catalog()) {
    SpectralReport rep = classify_spectrum(e.net);
    for (const auto& mu : rep.eigenfunctions) {
      if (mu.kind == Eigenfunction::Kind::QuadraticRoot) continue;
      if (mu.alg != 1) continue;
      int order = determinacy_order(e.net, rep.degeneracies, mu, rng, 50);
      if (order != 2) vanishing.insert({e.id, value_string(mu)});
    }
  }
  if (vanishing != expected) {
    for (const auto& pr : vanishing)
      if (!expected.count(pr))
        out.fail("unexpected vanishing pair " + pr.first + ":(" + pr.second +
                 ")");
    for (const auto& pr : expected)
      if (!vanishing.count(pr))
        out.fail("missing vanishing pair " + pr.first + ":(" + pr.second +
                 ")");
  }
  if (out.ok)
    out.detail = "exactly the eight expected pairs vanish at second order";
  return out;
}

// --- 8: defective second-order witness ---------------------------------------

Outcome criterion8() {
  Outcome out;
  const std::vector<std::string> ids = {"C1_D1", "C1_D4", "C1_D6", "D1_D4",
                                        "D"};
  for (const auto& id : ids) {
    const CatalogEntry* e = catalog_find(id);
    SpectralReport rep = classify_spectrum(e->net);
    const Eigenfunction* mu = nullptr;
    for (const auto& g : rep.eigenfunctions)
      if (g.alg == 2 && g.geo == 1) mu = &g;
    if (!mu) {
      out.fail(id + ": no defective eigenvalue");
      continue;
    }
    for (int t = 0; t < 20; ++t) {
      DerivativeProfile prof = synthesize(e->net, rep, *mu, (std::uint64_t)t);
      ReducedSystem rs = reduced_coefficients(e->net, *mu, prof);
      DefectiveWitness w = defective_condition(e->net, rs);
      if (!w.nonzero || w.p != 0 || w.q != 0) {
        out.fail(id + ": seed " + std::to_string(t) + " witness (" +
                 std::to_string(w.p) + "," + std::to_string(w.q) + ")" +
                 (w.nonzero ? "" : " zero"));
        break;
      }
    }
  }
  if (out.ok) out.detail = "witness (0,0) nonzero at 20 profiles for all 5";
  return out;
}

// --- 9: end-to-end numerical corroboration -----------------------------------

Outcome criterion9() {
  Outcome out;
  int lines = 0, conts = 0;
  for (const auto& e : catalog()) {
    AnnotatedLattice al = annotate(e.net);
    auto preds = predict(al);
    VerifyReport rep = verify_predictions(al, preds);
    conts += rep.continuations;
    for (const auto& l : rep.lines) {
      ++lines;
      if (l.status == VerifyLine::Status::Fail)
        out.fail(e.id + ": " +
                 partition_label(al.lattice.nodes[l.pred.node].partition) +
                 " :: " + value_string(l.pred.condition) + " :: " +
                 to_cstr(l.pred.verdict) + " :: " + l.detail);
    }
  }
  if (out.ok)
    out.detail = std::to_string(lines) + " verdict lines, " +
                 std::to_string(conts) + " continuation runs, no mismatch";
  return out;
}

// --- 10: semisimple ray-solution count ---------------------------------------

Outcome criterion10() {
  Outcome out;
  for (const auto& id : {"C", "C1_C2"}) {
    const CatalogEntry* e = catalog_find(id);
    SpectralReport rep = classify_spectrum(e->net);
    const Eigenfunction* mu = nullptr;
    for (const auto& g : rep.eigenfunctions)
      if (g.alg == 2 && g.geo == 2) mu = &g;
    if (!mu) {
      out.fail(std::string(id) + ": no semisimple double eigenvalue");
      continue;
    }
    for (int t = 0; t < 20; ++t) {
      DerivativeProfile prof = synthesize(e->net, rep, *mu, (std::uint64_t)t);
      ReducedSystem rs = reduced_coefficients(e->net, *mu, prof);
      QuadBranchReport qb = quadratic_branch_system(rs);
      if (qb.solutions.size() != 4)
        out.fail(std::string(id) + ": seed " + std::to_string(t) + " found " +
                 std::to_string(qb.solutions.size()) + " solutions");
      if (qb.common_factor)
        out.fail(std::string(id) + ": seed " + std::to_string(t) +
                 " quadratics share a factor");
    }
  }
  if (out.ok) out.detail = "exactly 4 ray solutions at all 40 profiles";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!strcmp(argv[i], "--criterion") && i + 1 < argc)
      only = atoi(argv[++i]);
    else {
      fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 64;
    }
  }
  Outcome (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8,
                           criterion9, criterion10};
  bool all_ok = true;
  for (int c = 1; c <= 10; ++c) {
    if (only && c != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = checks[c - 1]();
    } catch (const CcnError& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    printf("criterion %d: %s - %s (%.1fs)\n", c, out.ok ? "PASS" : "FAIL",
           out.detail.c_str(), secs);
    fflush(stdout);
    all_ok = all_ok && out.ok;
  }
  return all_ok ? 0 : 1;
}
