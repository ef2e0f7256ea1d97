#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ccn {

enum class ErrorCode {
  NonPositiveCellCount,
  EmptyInputList,
  CellIndexOutOfRange,
  CellCountMismatch,
  WrongCellCount,
  PartitionSizeMismatch,
  UnbalancedPartition,
  TooManyCells,
  KernelDimensionMismatch,
  NotDefectiveHere,
  SingularRangeRestriction,
  DegenerateQuadratic,
  NotRealAtThisPoint,
  NotRealizableReal,
  UnclassifiableLattice,
  UnhandledConfiguration,
  DisconnectedNetwork,
  CorruptFixture,
  ParseError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPositiveCellCount: return "NonPositiveCellCount";
    case ErrorCode::EmptyInputList: return "EmptyInputList";
    case ErrorCode::CellIndexOutOfRange: return "CellIndexOutOfRange";
    case ErrorCode::CellCountMismatch: return "CellCountMismatch";
    case ErrorCode::WrongCellCount: return "WrongCellCount";
    case ErrorCode::PartitionSizeMismatch: return "PartitionSizeMismatch";
    case ErrorCode::UnbalancedPartition: return "UnbalancedPartition";
    case ErrorCode::TooManyCells: return "TooManyCells";
    case ErrorCode::KernelDimensionMismatch: return "KernelDimensionMismatch";
    case ErrorCode::NotDefectiveHere: return "NotDefectiveHere";
    case ErrorCode::SingularRangeRestriction: return "SingularRangeRestriction";
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::NotRealAtThisPoint: return "NotRealAtThisPoint";
    case ErrorCode::NotRealizableReal: return "NotRealizableReal";
    case ErrorCode::UnclassifiableLattice: return "UnclassifiableLattice";
    case ErrorCode::UnhandledConfiguration: return "UnhandledConfiguration";
    case ErrorCode::DisconnectedNetwork: return "DisconnectedNetwork";
    case ErrorCode::CorruptFixture: return "CorruptFixture";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class CcnError : public std::runtime_error {
 public:
  CcnError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A homogeneous coupled cell network: n identical cells, each receiving one
// input of every type. sigma[l][i] is the 1-indexed source cell feeding the
// type-(l+1) input of cell i+1.
struct Network {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> sigma;

  int k() const { return (int)sigma.size(); }
};

inline Network make_network(std::string name, int n,
                            std::vector<std::vector<int>> sigma) {
  if (n <= 0)
    throw CcnError(ErrorCode::NonPositiveCellCount,
                   "cell count " + std::to_string(n) + " in network '" + name +
                       "'");
  if (sigma.empty())
    throw CcnError(ErrorCode::EmptyInputList,
                   "network '" + name + "' declares no input types");
  for (size_t l = 0; l < sigma.size(); ++l) {
    if ((int)sigma[l].size() != n)
      throw CcnError(ErrorCode::ParseError,
                     "inputs[" + std::to_string(l) + "] of network '" + name +
                         "' has " + std::to_string(sigma[l].size()) +
                         " entries, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      int s = sigma[l][i];
      if (s < 1 || s > n)
        throw CcnError(ErrorCode::CellIndexOutOfRange,
                       "inputs[" + std::to_string(l) + "][" +
                           std::to_string(i) + "] = " + std::to_string(s) +
                           " outside 1.." + std::to_string(n) +
                           " in network '" + name + "'");
    }
  }
  return Network{std::move(name), n, std::move(sigma)};
}

// 0/1 adjacency of input type l (1-indexed); l == 0 gives the identity.
inline std::vector<std::vector<int>> adjacency(const Network& net, int l) {
  std::vector<std::vector<int>> a(net.n, std::vector<int>(net.n, 0));
  if (l == 0) {
    for (int i = 0; i < net.n; ++i) a[i][i] = 1;
    return a;
  }
  for (int i = 0; i < net.n; ++i) a[i][net.sigma[l - 1][i] - 1] = 1;
  return a;
}

inline bool is_connected(const Network& net) {
  // Undirected reachability over all input edges.
  std::vector<std::vector<int>> adj(net.n);
  for (const auto& row : net.sigma)
    for (int i = 0; i < net.n; ++i) {
      adj[i].push_back(row[i] - 1);
      adj[row[i] - 1].push_back(i);
    }
  std::vector<char> seen(net.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Strongly connected components with no incoming edge from outside.
// Components are sorted internally and by smallest member.
struct SourceDecomposition {
  std::vector<std::vector<int>> sources;  // 0-indexed cells
  std::vector<std::vector<int>> all_sccs;
};

inline SourceDecomposition source_components(const Network& net) {
  int n = net.n;
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (const auto& row : net.sigma)
    for (int i = 0; i < n; ++i) {
      // edge source -> target: cell row[i]-1 feeds cell i
      fwd[row[i] - 1].push_back(i);
      rev[i].push_back(row[i] - 1);
    }
  // Kosaraju.
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < fwd[v].size()) {
        int w = fwd[v][idx++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> stack{*it};
    comp[*it] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : rev[v])
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> groups(nc);
  for (int i = 0; i < n; ++i) groups[comp[i]].push_back(i);
  std::vector<char> has_external_in(nc, 0);
  for (const auto& row : net.sigma)
    for (int i = 0; i < n; ++i)
      if (comp[row[i] - 1] != comp[i]) has_external_in[comp[i]] = 1;
  SourceDecomposition out;
  for (int c = 0; c < nc; ++c) {
    std::sort(groups[c].begin(), groups[c].end());
    if (!has_external_in[c]) out.sources.push_back(groups[c]);
    out.all_sccs.push_back(groups[c]);
  }
  auto by_min = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.front() < b.front();
  };
  std::sort(out.sources.begin(), out.sources.end(), by_min);
  std::sort(out.all_sccs.begin(), out.all_sccs.end(), by_min);
  return out;
}

inline Network network_from_json(const nlohmann::json& j,
                                 const std::string& origin) {
  if (!j.is_object())
    throw CcnError(ErrorCode::ParseError, origin + ": expected an object");
  for (const char* key : {"cells", "inputs"})
    if (!j.contains(key))
      throw CcnError(ErrorCode::ParseError,
                     origin + ": missing required field \"" + key + "\"");
  if (!j["cells"].is_number_integer())
    throw CcnError(ErrorCode::ParseError,
                   origin + ": \"cells\" must be an integer");
  if (!j["inputs"].is_array())
    throw CcnError(ErrorCode::ParseError,
                   origin + ": \"inputs\" must be an array of arrays");
  std::string name = j.value("name", origin);
  int n = j["cells"].get<int>();
  std::vector<std::vector<int>> sigma;
  for (const auto& row : j["inputs"]) {
    if (!row.is_array())
      throw CcnError(ErrorCode::ParseError,
                     origin + ": \"inputs\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw CcnError(ErrorCode::ParseError,
                       origin + ": input entries must be integers");
      r.push_back(v.get<int>());
    }
    sigma.push_back(std::move(r));
  }
  return make_network(std::move(name), n, std::move(sigma));
}

inline Network parse_network_text(const std::string& text,
                                  const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CcnError(ErrorCode::ParseError, origin + ": " + e.what());
  }
  return network_from_json(j, origin);
}

inline nlohmann::json network_to_json(const Network& net) {
  nlohmann::json j;
  j["name"] = net.name;
  j["cells"] = net.n;
  j["inputs"] = net.sigma;
  return j;
}

}  // namespace ccn
