#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccn/classify.hpp"
#include "ccn/ls_reduction.hpp"
#include "ccn/network.hpp"
#include "ccn/rng.hpp"
#include "ccn/spectrum.hpp"
#include "ccn/synchrony.hpp"

namespace ccn {

enum class Verdict {
  Supports,
  DoesNotSupport,
  SupportsOnOpenSet,
  NoRealCondition,
  Unhandled,
};

inline const char* to_cstr(Verdict v) {
  switch (v) {
    case Verdict::Supports: return "Supports";
    case Verdict::DoesNotSupport: return "DoesNotSupport";
    case Verdict::SupportsOnOpenSet: return "SupportsOnOpenSet";
    case Verdict::NoRealCondition: return "NoRealCondition";
    case Verdict::Unhandled: return "Unhandled";
  }
  return "?";
}

// Whether steady-state bifurcation from the fully synchronous state can
// produce a branch whose exact synchrony is the given node, per eigenvalue
// crossing condition.
struct BranchPrediction {
  int node = -1;
  Eigenfunction condition;
  Verdict verdict = Verdict::Unhandled;
  std::string rule;
  std::vector<std::string> caveats;
};

// Nodes where a multiple valency can break: minimal subspaces whose quotient
// splits a pair of source components into exactly two, with disjoint images.
inline std::vector<int> valency_breaking_subspaces(const AnnotatedLattice& al) {
  auto srcs = source_components(al.net).sources;
  std::set<int> out;
  for (size_t i = 0; i < srcs.size(); ++i)
    for (size_t j = i + 1; j < srcs.size(); ++j) {
      std::vector<int> cands;
      for (int idx = 0; idx < al.lattice.size(); ++idx) {
        const auto& node = al.lattice.nodes[idx];
        if ((int)source_components(node.quotient).sources.size() != 2)
          continue;
        std::set<int> c1, c2;
        for (int c : srcs[i]) c1.insert(node.partition[c]);
        for (int c : srcs[j]) c2.insert(node.partition[c]);
        bool disjoint = true;
        for (int c : c1)
          if (c2.count(c)) disjoint = false;
        if (disjoint) cands.push_back(idx);
      }
      for (int a : cands) {
        bool minimal = true;
        for (int b : cands)
          if (b != a && al.lattice.leq(b, a)) minimal = false;
        if (minimal) out.insert(a);
      }
    }
  return std::vector<int>(out.begin(), out.end());
}

namespace detail {

// The strictly smaller nodes counted by a submaximal order: the eigenvalue
// is simple there and not present further down.
inline std::vector<int> counted_support_nodes(const AnnotatedLattice& al,
                                              int node,
                                              const Eigenfunction& mu) {
  std::vector<int> out;
  for (int q : al.lattice.strictly_below(node)) {
    if (!node_has(al, q, mu)) continue;
    bool simple = false;
    for (const auto& e : al.annotations[q])
      if (same_function(e, mu)) {
        simple = e.alg == 1;
        break;
      }
    if (!simple) continue;
    bool maximal_there = true;
    for (int r : al.lattice.strictly_below(q))
      if (node_has(al, r, mu)) maximal_there = false;
    if (maximal_there) out.push_back(q);
  }
  return out;
}

// Certification for ruling out a branch at a semisimple double eigenvalue:
// the reduced quadratic system must be nondegenerate with full-rank
// nontrivial zeros and no shared factor, and the smaller nodes must be
// second-order determined.
inline bool certify_semisimple(const AnnotatedLattice& al, int node,
                               const Eigenfunction& mu,
                               const std::vector<int>& counted,
                               int profiles = 20) {
  Eigenfunction simple_mu = mu;
  simple_mu.alg = simple_mu.geo = 1;
  for (int q : counted) {
    const Network& qnet = al.lattice.nodes[q].quotient;
    Rng rng(12345);
    if (determinacy_order(qnet, generic_degeneracies(qnet), simple_mu, rng,
                          20) != 2)
      return false;
  }
  const Network& net = al.lattice.nodes[node].quotient;
  for (int t = 0; t < profiles; ++t) {
    Rng rng(5000 + t);
    int k = net.k();
    DerivativeProfile prof;
    prof.f.assign(k + 1, 0.0);
    double c0 = mu.lin.c[0].to_double();
    int guard = 0;
    for (;;) {
      if (++guard > 500) return false;
      for (int l = 1; l <= k; ++l) prof.f[l] = rng.away_from_zero(0.25);
      double rest = 0;
      for (int l = 1; l <= k; ++l) rest += mu.lin.c[l].to_double() * prof.f[l];
      prof.f[0] = -rest / c0;
      bool degenerate = false;
      for (const auto& d : al.report.degeneracies)
        if (std::fabs(d.eval(prof.f)) < 0.05) degenerate = true;
      if (!degenerate) break;
    }
    prof.fpq.assign(k + 1, std::vector<double>(k + 1, 0.0));
    for (int p = 0; p <= k; ++p)
      for (int q = p; q <= k; ++q)
        prof.fpq[p][q] = prof.fpq[q][p] = rng.symmetric();
    prof.f000 = rng.sign() * rng.uniform(0.3, 1.0);
    try {
      ReducedSystem rs = reduced_coefficients(net, mu, prof);
      QuadBranchReport qb = quadratic_branch_system(rs);
      if (qb.common_factor) return false;
      for (size_t s = 0; s < qb.solutions.size(); ++s)
        if (qb.solutions[s].norm() > 1e-8 && qb.rank[s] != 2) return false;
    } catch (const CcnError&) {
      return false;
    }
  }
  return true;
}

// Certification that the second-order term acts on the generalized kernel
// direction at a defective double eigenvalue.
inline bool certify_defective(const AnnotatedLattice& al, int node,
                              const Eigenfunction& mu, int profiles = 20) {
  const Network& net = al.lattice.nodes[node].quotient;
  int k = net.k();
  double c0 = mu.lin.c[0].to_double();
  for (int t = 0; t < profiles; ++t) {
    Rng rng(6000 + t);
    DerivativeProfile prof;
    prof.f.assign(k + 1, 0.0);
    int guard = 0;
    for (;;) {
      if (++guard > 500) return false;
      for (int l = 1; l <= k; ++l) prof.f[l] = rng.away_from_zero(0.25);
      double rest = 0;
      for (int l = 1; l <= k; ++l) rest += mu.lin.c[l].to_double() * prof.f[l];
      prof.f[0] = -rest / c0;
      bool degenerate = false;
      for (const auto& d : al.report.degeneracies)
        if (std::fabs(d.eval(prof.f)) < 0.05) degenerate = true;
      if (!degenerate) break;
    }
    prof.fpq.assign(k + 1, std::vector<double>(k + 1, 0.0));
    for (int p = 0; p <= k; ++p)
      for (int q = p; q <= k; ++q)
        prof.fpq[p][q] = prof.fpq[q][p] = rng.symmetric();
    prof.f000 = rng.sign() * rng.uniform(0.3, 1.0);
    try {
      ReducedSystem rs = reduced_coefficients(net, mu, prof);
      if (!defective_condition(net, rs).nonzero) return false;
    } catch (const CcnError&) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Predicted branching behaviour for every (node, eigenvalue condition) pair
// of the lattice. Deterministic: certifications use fixed seeds.
inline std::vector<BranchPrediction> predict(const AnnotatedLattice& al) {
  std::vector<BranchPrediction> out;
  std::vector<int> vbreak = valency_breaking_subspaces(al);
  auto is_vbreak = [&](int node) {
    for (int b : vbreak)
      if (b == node) return true;
    return false;
  };
  for (int node = 0; node < al.lattice.size(); ++node) {
    for (const auto& mu : al.annotations[node]) {
      BranchPrediction bp;
      bp.node = node;
      bp.condition = mu;
      if (mu.kind == Eigenfunction::Kind::Valency) {
        if (mu.alg == 1) {
          SubspaceRole role = subspace_role(al, node, mu);
          if (role.kind == SubspaceRole::Kind::Maximal) {
            bp.verdict = Verdict::Supports;
            bp.rule = "simple-maximal";
          } else {
            bp.verdict = Verdict::DoesNotSupport;
            bp.rule = "simple-submaximal";
          }
        } else if (is_vbreak(node)) {
          bp.verdict = Verdict::Supports;
          bp.rule = "valency-breaking";
          bp.caveats.push_back(
              "branch splits a pair of source components");
        } else {
          bp.verdict = Verdict::Unhandled;
          bp.rule = "multiple-valency";
          bp.caveats.push_back(
              "no source pair breaks at this node; not covered by the "
              "implemented rules");
        }
        out.push_back(std::move(bp));
        continue;
      }
      if (mu.real == RealClass::Never) {
        bp.verdict = Verdict::NoRealCondition;
        bp.rule = "no-real-condition";
        out.push_back(std::move(bp));
        continue;
      }
      if (mu.alg == 1) {
        SubspaceRole role = subspace_role(al, node, mu);
        if (role.kind == SubspaceRole::Kind::Maximal) {
          bp.verdict = mu.real == RealClass::OnOpenSet
                           ? Verdict::SupportsOnOpenSet
                           : Verdict::Supports;
          bp.rule = "simple-maximal";
          if (mu.real == RealClass::OnOpenSet)
            bp.caveats.push_back(
                "crossing is real on an open coefficient region only");
        } else {
          bp.verdict = Verdict::DoesNotSupport;
          bp.rule = "simple-submaximal";
        }
        out.push_back(std::move(bp));
        continue;
      }
      // Double eigenvalues.
      if (mu.geo == 2) {
        auto counted = detail::counted_support_nodes(al, node, mu);
        if ((int)counted.size() == 3 &&
            detail::certify_semisimple(al, node, mu, counted)) {
          bp.verdict = Verdict::DoesNotSupport;
          bp.rule = "semisimple-2det";
          bp.caveats.push_back(
              "quadratic reduction certified nondegenerate at 20 sampled "
              "profiles; all branches lie in smaller subspaces");
        } else {
          bp.verdict = Verdict::Unhandled;
          bp.rule = "semisimple-2det";
          bp.caveats.push_back(
              "reduction hypotheses not certified for this configuration");
        }
        out.push_back(std::move(bp));
        continue;
      }
      // Defective double.
      {
        SubspaceRole role = subspace_role(al, node, mu);
        if (role.kind == SubspaceRole::Kind::Maximal) {
          bp.verdict = Verdict::Supports;
          bp.rule = "defective-maximal";
        } else if (role.order == 1 &&
                   detail::certify_defective(al, node, mu)) {
          bp.verdict = Verdict::Supports;
          bp.rule = "defective-2det";
          bp.caveats.push_back(
              "two branches: a second one lies in the smaller subspace");
          bp.caveats.push_back(
              "second-order coefficient certified nonzero at 20 sampled "
              "profiles");
        } else {
          bp.verdict = Verdict::Unhandled;
          bp.rule = "defective-2det";
          bp.caveats.push_back(
              "defective configuration not covered by the implemented rules");
        }
        out.push_back(std::move(bp));
      }
    }
  }
  return out;
}

inline std::string predictions_text(const AnnotatedLattice& al,
                                    const std::vector<BranchPrediction>& preds) {
  std::string out = "network " + al.net.name + "\n";
  for (const auto& bp : preds) {
    out += "  " + partition_label(al.lattice.nodes[bp.node].partition) +
           " :: " + value_string(bp.condition) + " = 0 :: " +
           to_cstr(bp.verdict) + " :: " + bp.rule;
    for (const auto& c : bp.caveats) out += " :: note: " + c;
    out += "\n";
  }
  return out;
}

inline nlohmann::json predictions_json(
    const AnnotatedLattice& al, const std::vector<BranchPrediction>& preds) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& bp : preds) {
    nlohmann::json j;
    j["node"] = partition_label(al.lattice.nodes[bp.node].partition);
    j["partition"] = al.lattice.nodes[bp.node].partition;
    j["condition"] = value_string(bp.condition);
    j["algebraic"] = bp.condition.alg;
    j["geometric"] = bp.condition.geo;
    j["verdict"] = to_cstr(bp.verdict);
    j["rule"] = bp.rule;
    j["caveats"] = bp.caveats;
    arr.push_back(std::move(j));
  }
  nlohmann::json out;
  out["network"] = al.net.name;
  out["predictions"] = std::move(arr);
  return out;
}

}  // namespace ccn
