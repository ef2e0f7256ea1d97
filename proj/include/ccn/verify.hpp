#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccn/bifurcation.hpp"
#include "ccn/numerics.hpp"

namespace ccn {

struct VerifyOptions {
  int seeds = 20;
  ContinuationOptions cont;
  double residual_limit = 1e-10;
};

struct VerifyLine {
  BranchPrediction pred;
  enum class Status { Pass, Fail, Skip } status = Status::Skip;
  std::string detail;
};

inline const char* to_cstr(VerifyLine::Status s) {
  switch (s) {
    case VerifyLine::Status::Pass: return "PASS";
    case VerifyLine::Status::Fail: return "FAIL";
    case VerifyLine::Status::Skip: return "SKIP";
  }
  return "?";
}

struct VerifyReport {
  std::string network;
  std::vector<VerifyLine> lines;
  int continuations = 0;

  bool ok() const {
    for (const auto& l : lines)
      if (l.status == VerifyLine::Status::Fail) return false;
    return true;
  }
};

// Check each prediction against forward continuation: a supporting verdict
// needs a seed whose bifurcating branch has exactly the predicted synchrony;
// an excluding verdict must survive the whole seed budget without one.
// Continuation runs are shared across all predictions with the same
// eigenvalue condition.
inline VerifyReport verify_predictions(const AnnotatedLattice& al,
                                       const std::vector<BranchPrediction>& preds,
                                       const VerifyOptions& vo = {}) {
  VerifyReport out;
  out.network = al.net.name;
  out.lines.resize(preds.size());
  for (size_t i = 0; i < preds.size(); ++i) out.lines[i].pred = preds[i];

  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < preds.size(); ++i)
    groups[eig_key(preds[i].condition)].push_back(i);

  for (auto& [key, members] : groups) {
    const Eigenfunction& mu = preds[members.front()].condition;
    bool skip_all = mu.real == RealClass::Never;
    bool any_negative = false;
    std::set<int> positive_nodes;
    for (size_t i : members) {
      if (preds[i].verdict == Verdict::NoRealCondition ||
          preds[i].verdict == Verdict::Unhandled)
        continue;
      if (preds[i].verdict == Verdict::DoesNotSupport)
        any_negative = true;
      else
        positive_nodes.insert(preds[i].node);
    }
    if (skip_all) {
      for (size_t i : members) {
        out.lines[i].status = VerifyLine::Status::Skip;
        out.lines[i].detail = "no real crossing to test";
      }
      continue;
    }

    std::set<int> found;
    std::map<int, std::string> witness;
    int seeds_run = 0;
    for (int seed = 0; seed < vo.seeds; ++seed) {
      DerivativeProfile prof;
      try {
        prof = synthesize(al.net, al.report, mu, (std::uint64_t)seed);
      } catch (const CcnError&) {
        continue;
      }
      BranchObservation obs =
          continue_equilibria(al.net, al.lattice, prof, vo.cont);
      ++out.continuations;
      ++seeds_run;
      for (const auto& br : obs.branches) {
        if (!br.through_origin || !br.nontrivial()) continue;
        double worst = 0;
        for (const auto& p : br.points)
          worst = std::max(worst, p.residual);
        if (worst > vo.residual_limit) continue;
        if (!found.count(br.node)) {
          char buf[128];
          snprintf(buf, sizeof buf,
                   "branch at seed %d, %d points, max |x| %.3g, residual %.2g",
                   seed, (int)br.points.size(), br.max_norm(), worst);
          witness[br.node] = buf;
        }
        found.insert(br.node);
      }
      if (!any_negative) {
        bool done = true;
        for (int node : positive_nodes)
          if (!found.count(node)) done = false;
        if (done) break;
      }
    }

    for (size_t i : members) {
      VerifyLine& line = out.lines[i];
      switch (preds[i].verdict) {
        case Verdict::NoRealCondition:
          line.status = VerifyLine::Status::Skip;
          line.detail = "no real crossing to test";
          break;
        case Verdict::Unhandled:
          line.status = VerifyLine::Status::Skip;
          line.detail = "no verdict to test";
          break;
        case Verdict::Supports:
        case Verdict::SupportsOnOpenSet:
          if (found.count(preds[i].node)) {
            line.status = VerifyLine::Status::Pass;
            line.detail = witness[preds[i].node];
          } else {
            line.status = VerifyLine::Status::Fail;
            line.detail = "no branch with exactly this synchrony across " +
                          std::to_string(seeds_run) + " seeds";
          }
          break;
        case Verdict::DoesNotSupport:
          if (found.count(preds[i].node)) {
            line.status = VerifyLine::Status::Fail;
            line.detail = "unexpected " + witness[preds[i].node];
          } else {
            line.status = VerifyLine::Status::Pass;
            line.detail = "no such branch across " +
                          std::to_string(seeds_run) + " seeds";
          }
          break;
      }
    }
  }
  return out;
}

inline std::string verify_text(const AnnotatedLattice& al,
                               const VerifyReport& rep) {
  std::string out = "network " + rep.network + "\n";
  for (const auto& l : rep.lines) {
    out += std::string("  [") + to_cstr(l.status) + "] " +
           partition_label(al.lattice.nodes[l.pred.node].partition) + " :: " +
           value_string(l.pred.condition) + " = 0 :: " +
           to_cstr(l.pred.verdict);
    if (!l.detail.empty()) out += " :: " + l.detail;
    out += "\n";
  }
  return out;
}

}  // namespace ccn
