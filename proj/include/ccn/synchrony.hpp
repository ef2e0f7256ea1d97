#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccn/network.hpp"

namespace ccn {

// Partitions are restricted growth strings: partition[i] is the class of
// cell i+1, classes numbered 0,1,... in order of first appearance.
using Partition = std::vector<int>;

inline int num_classes(const Partition& p) {
  int m = -1;
  for (int c : p) m = std::max(m, c);
  return m + 1;
}

inline Partition normalize_partition(const std::vector<int>& raw) {
  Partition out(raw.size());
  std::map<int, int> relabel;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = relabel.insert({raw[i], (int)relabel.size()});
    out[i] = it->second;
    (void)fresh;
  }
  return out;
}

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition p(n, 0);
  // Iterative restricted-growth enumeration.
  auto rec = [&](auto&& self, int i, int maxc) -> void {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      p[i] = c;
      self(self, i + 1, std::max(maxc, c));
    }
  };
  rec(rec, 1, 0);
  return out;
}

inline void check_partition(const Network& net, const Partition& p) {
  if ((int)p.size() != net.n)
    throw CcnError(ErrorCode::PartitionSizeMismatch,
                   "partition has " + std::to_string(p.size()) +
                       " entries for a " + std::to_string(net.n) +
                       "-cell network");
}

// A partition is balanced when cells in a common class receive their type-l
// inputs from a common class, for every l.
inline bool is_balanced(const Network& net, const Partition& p) {
  check_partition(net, p);
  int nc = num_classes(p);
  for (const auto& row : net.sigma) {
    std::vector<int> cls_src(nc, -1);
    for (int i = 0; i < net.n; ++i) {
      int c = p[i], s = p[row[i] - 1];
      if (cls_src[c] == -1)
        cls_src[c] = s;
      else if (cls_src[c] != s)
        return false;
    }
  }
  return true;
}

// The quotient network on the classes of a balanced partition.
struct SynchronySubspace {
  Partition partition;
  Network quotient;
  int classes = 0;
};

inline SynchronySubspace quotient(const Network& net, const Partition& p) {
  check_partition(net, p);
  if (!is_balanced(net, p))
    throw CcnError(ErrorCode::UnbalancedPartition,
                   "partition is not balanced for network '" + net.name + "'");
  int nc = num_classes(p);
  std::vector<int> rep(nc, -1);
  for (int i = 0; i < net.n; ++i)
    if (rep[p[i]] == -1) rep[p[i]] = i;
  std::vector<std::vector<int>> qsigma(net.k(), std::vector<int>(nc));
  for (int l = 0; l < net.k(); ++l)
    for (int c = 0; c < nc; ++c)
      qsigma[l][c] = p[net.sigma[l][rep[c]] - 1] + 1;
  SynchronySubspace out;
  out.partition = p;
  out.quotient = make_network(net.name + "/" + std::to_string(nc), nc,
                              std::move(qsigma));
  out.classes = nc;
  return out;
}

// Subspace containment: the polydiagonal of p sits inside that of q exactly
// when every equality imposed by q is also imposed by p.
inline bool subspace_leq(const Partition& p, const Partition& q) {
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (q[i] == q[j] && p[i] != p[j]) return false;
  return true;
}

class SynchronyLattice {
 public:
  Network net;
  std::vector<SynchronySubspace> nodes;  // sorted by (classes, partition)

  int size() const { return (int)nodes.size(); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  int index_of(const Partition& p) const {
    for (int i = 0; i < size(); ++i)
      if (nodes[i].partition == p) return i;
    return -1;
  }

  bool leq(int a, int b) const {
    return subspace_leq(nodes[a].partition, nodes[b].partition);
  }

  std::vector<int> strictly_below(int a) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (i != a && leq(i, a)) out.push_back(i);
    return out;
  }

  std::vector<int> two_dimensional() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (nodes[i].classes == 2) out.push_back(i);
    return out;
  }

  // Smallest subspace containing both: intersect the partitions blockwise.
  // The result of intersecting balanced partitions is balanced.
  int join(int a, int b) const {
    const auto& pa = nodes[a].partition;
    const auto& pb = nodes[b].partition;
    std::vector<int> raw(pa.size());
    for (size_t i = 0; i < pa.size(); ++i)
      raw[i] = pa[i] * (int)pb.size() + pb[i];
    int idx = index_of(normalize_partition(raw));
    if (idx < 0)
      throw CcnError(ErrorCode::CorruptFixture,
                     "join fell outside the balanced lattice");
    return idx;
  }

  // Largest subspace inside both: close the union of the two equality
  // relations transitively. Again automatically balanced.
  int meet(int a, int b) const {
    const auto& pa = nodes[a].partition;
    const auto& pb = nodes[b].partition;
    int n = (int)pa.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pa[i] == pa[j] || pb[i] == pb[j]) parent[find(i)] = find(j);
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = find(i);
    int idx = index_of(normalize_partition(raw));
    if (idx < 0)
      throw CcnError(ErrorCode::CorruptFixture,
                     "meet fell outside the balanced lattice");
    return idx;
  }

  // Immediate inclusions (a, b) with a strictly below b, by transitive
  // reduction of leq.
  std::vector<std::pair<int, int>> cover_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (int c = 0; c < size() && direct; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        if (direct) out.push_back({a, b});
      }
    return out;
  }
};

inline SynchronyLattice enumerate_synchrony(const Network& net) {
  if (net.n > 10)
    throw CcnError(ErrorCode::TooManyCells,
                   "lattice enumeration limited to 10 cells, got " +
                       std::to_string(net.n));
  SynchronyLattice lat;
  lat.net = net;
  for (const auto& p : all_partitions(net.n))
    if (is_balanced(net, p)) lat.nodes.push_back(quotient(net, p));
  std::sort(lat.nodes.begin(), lat.nodes.end(),
            [](const SynchronySubspace& a, const SynchronySubspace& b) {
              if (a.classes != b.classes) return a.classes < b.classes;
              return a.partition < b.partition;
            });
  return lat;
}

// Human label for a node: its defining equalities, or R^n for the top.
inline std::string partition_label(const Partition& p) {
  int nc = num_classes(p);
  std::vector<std::vector<int>> blocks(nc);
  for (size_t i = 0; i < p.size(); ++i) blocks[p[i]].push_back((int)i + 1);
  std::string out;
  for (const auto& blk : blocks) {
    if (blk.size() < 2) continue;
    if (!out.empty()) out += ", ";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) out += "=";
      out += "x" + std::to_string(blk[i]);
    }
  }
  if (out.empty()) out = "R^" + std::to_string(p.size());
  return out;
}

inline std::string lattice_dot(
    const SynchronyLattice& lat,
    const std::vector<std::string>* extra_lines = nullptr) {
  std::string out = "graph synchrony {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lat.size(); ++i) {
    std::string label = partition_label(lat.nodes[i].partition);
    if (extra_lines && !(*extra_lines)[i].empty())
      label += "\\n" + (*extra_lines)[i];
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [a, b] : lat.cover_edges())
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ccn
