#pragma once

#include <string>
#include <vector>

#include "ccn/network.hpp"
#include "ccn/spectrum.hpp"
#include "ccn/synchrony.hpp"

namespace ccn {

// The synchrony lattice of a three-cell network with every node annotated by
// the spectrum of its quotient.
struct AnnotatedLattice {
  Network net;
  SynchronyLattice lattice;
  SpectralReport report;  // spectrum at the top node (the network itself)
  std::vector<std::vector<Eigenfunction>> annotations;  // per lattice node
};

inline AnnotatedLattice annotate(const Network& net) {
  AnnotatedLattice out;
  out.net = net;
  out.lattice = enumerate_synchrony(net);
  out.report = classify_spectrum(net);
  for (const auto& node : out.lattice.nodes)
    out.annotations.push_back(quotient_eigenfunctions(node.quotient));
  return out;
}

// Where a bifurcation condition can first be met going down the lattice.
struct SubspaceRole {
  enum class Kind { NotPresent, Maximal, Submaximal } kind;
  int order = 0;  // Submaximal: number of strictly smaller maximal nodes
                  // where the eigenvalue is simple
};

inline bool node_has(const AnnotatedLattice& al, int node,
                     const Eigenfunction& mu) {
  return is_member(mu, al.lattice.nodes[node].quotient);
}

inline SubspaceRole subspace_role(const AnnotatedLattice& al, int node,
                                  const Eigenfunction& mu) {
  SubspaceRole out;
  if (!node_has(al, node, mu)) {
    out.kind = SubspaceRole::Kind::NotPresent;
    return out;
  }
  std::vector<int> smaller_with;
  for (int q : al.lattice.strictly_below(node))
    if (node_has(al, q, mu)) smaller_with.push_back(q);
  if (smaller_with.empty()) {
    out.kind = SubspaceRole::Kind::Maximal;
    return out;
  }
  out.kind = SubspaceRole::Kind::Submaximal;
  for (int q : smaller_with) {
    bool simple = false;
    for (const auto& e : al.annotations[q])
      if (same_function(e, mu)) {
        simple = e.alg == 1;
        break;
      }
    if (!simple) continue;
    bool maximal_there = true;
    for (int r : al.lattice.strictly_below(q))
      if (node_has(al, r, mu)) {
        maximal_there = false;
        break;
      }
    if (maximal_there) ++out.order;
  }
  return out;
}

// Structure tag CxLy: number of synchrony subspaces of dimension two, split
// by the multiplicity pattern of the generic spectrum.
inline std::string structure_type(const AnnotatedLattice& al) {
  if (!is_connected(al.net))
    throw CcnError(ErrorCode::DisconnectedNetwork,
                   "structure type is defined for connected networks only");
  int n2 = (int)al.lattice.two_dimensional().size();
  switch (al.report.kase) {
    case SpectrumCase::ValencyDouble:
      if (n2 == 1) return "C2L1v";
      break;
    case SpectrumCase::SemisimplePair:
      if (n2 == 3) return "C2L3s";
      break;
    case SpectrumCase::DefectivePair:
      if (n2 == 1) return "C2L1d";
      if (n2 == 0) return "C2L0d";
      break;
    case SpectrumCase::Distinct:
      if (n2 <= 2) return "C3L" + std::to_string(n2);
      break;
    case SpectrumCase::ValencyTriple:
      break;
  }
  throw CcnError(ErrorCode::UnclassifiableLattice,
                 "network '" + al.net.name + "' (" +
                     to_cstr(al.report.kase) + ", " + std::to_string(n2) +
                     " two-dimensional nodes) falls outside the classified "
                     "families");
}

// DOT rendering with eigenvalues per node; a defective eigenvalue (geometric
// multiplicity below algebraic) carries a '*'.
inline std::string annotated_dot(const AnnotatedLattice& al) {
  std::vector<std::string> lines(al.lattice.size());
  for (int i = 0; i < al.lattice.size(); ++i) {
    std::string s;
    for (const auto& e : al.annotations[i]) {
      for (int copy = 0; copy < e.alg; ++copy) {
        if (!s.empty()) s += ", ";
        s += value_string(e);
        if (e.geo < e.alg) s += "*";
      }
    }
    lines[i] = s;
  }
  return lattice_dot(al.lattice, &lines);
}

}  // namespace ccn
