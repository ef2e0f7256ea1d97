#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ccn/network.hpp"
#include "ccn/rational.hpp"

namespace ccn {

namespace detail {

// Reduced row echelon form over the rationals; zero rows dropped. The result
// is the canonical basis of the row space.
inline std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return rows;
  size_t cols = rows[0].size(), lead = 0;
  size_t r = 0;
  for (; r < rows.size() && lead < cols; ++lead) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][lead].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = Rat(1) / rows[r][lead];
    for (auto& v : rows[r]) v *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead].is_zero()) continue;
      Rat factor = rows[i][lead];
      for (size_t c = 0; c < cols; ++c)
        rows[i][c] -= factor * rows[r][c];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline std::vector<std::vector<Rat>> adjacency_span(
    const Network& net, const std::vector<int>& relabel) {
  std::vector<std::vector<Rat>> rows;
  for (int l = 0; l <= net.k(); ++l) {
    auto a = adjacency(net, l);
    std::vector<Rat> flat(net.n * net.n);
    for (int i = 0; i < net.n; ++i)
      for (int j = 0; j < net.n; ++j)
        flat[i * net.n + j] = Rat(a[relabel[i]][relabel[j]]);
    rows.push_back(std::move(flat));
  }
  return rref(std::move(rows));
}

}  // namespace detail

// Dimension of the span of {Id, A_1, ..., A_k} over the rationals.
inline int adjacency_span_dimension(const Network& net) {
  std::vector<int> id(net.n);
  std::iota(id.begin(), id.end(), 0);
  return (int)detail::adjacency_span(net, id).size();
}

// Two networks are linearly equivalent when some relabelling of cells makes
// their adjacency spans coincide. Exact rational comparison over all n!
// relabellings.
inline bool linearly_equivalent(const Network& a, const Network& b) {
  if (a.n != b.n)
    throw CcnError(ErrorCode::CellCountMismatch,
                   "'" + a.name + "' has " + std::to_string(a.n) +
                       " cells, '" + b.name + "' has " + std::to_string(b.n));
  std::vector<int> id(a.n);
  std::iota(id.begin(), id.end(), 0);
  auto base = detail::adjacency_span(a, id);
  std::vector<int> perm = id;
  do {
    if (detail::adjacency_span(b, perm) == base) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ccn
