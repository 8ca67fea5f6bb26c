#pragma once

// Test-only brute-force oracles. These deliberately avoid the flow engine:
// paths come from plain depth-first search, cut values from subset
// enumeration, so they can certify the library's answers independently.

#include <algorithm>
#include <functional>
#include <vector>

#include "tpack/paths.hpp"

namespace tpack::oracles {

inline std::vector<Path> all_ab_paths(const Graft& g, const VertexSet& a, const VertexSet& b) {
  std::vector<Path> out;
  std::vector<EdgeId> cur;
  VertexSet visited;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId at) {
    for (EdgeId e : g.incident(at)) {
      if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
      VertexId next = g.other_end(e, at);
      if (visited.count(next) || a.count(next)) continue;
      cur.push_back(e);
      if (b.count(next)) {
        out.push_back(Path::from_edges(g, cur, start));
      } else {
        visited.insert(next);
        dfs(start, next);
        visited.erase(next);
      }
      cur.pop_back();
    }
  };
  for (VertexId s : a) {
    visited = {s};
    cur.clear();
    dfs(s, s);
  }
  return out;
}

inline void disjoint_families(const std::vector<Path>& paths, size_t idx, EdgeSet& used,
                              std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& emit) {
  if (idx == paths.size()) {
    emit(cur);
    return;
  }
  disjoint_families(paths, idx + 1, used, cur, emit);
  if (set_intersect(paths[idx].edge_set(), used).empty()) {
    EdgeSet more = set_union(used, paths[idx].edge_set());
    cur.push_back(static_cast<int>(idx));
    disjoint_families(paths, idx + 1, more, cur, emit);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> all_disjoint_families(const std::vector<Path>& paths) {
  std::vector<std::vector<int>> out;
  EdgeSet used;
  std::vector<int> cur;
  disjoint_families(paths, 0, used, cur, [&](const std::vector<int>& f) { out.push_back(f); });
  return out;
}

/// Every linkage of a toward b: edge-disjoint families covering boundary(a).
inline std::vector<std::vector<Path>> all_linkages(const Graft& g, const VertexSet& a,
                                                   const VertexSet& b) {
  std::vector<Path> paths = all_ab_paths(g, a, b);
  size_t want = g.boundary(a).size();
  std::vector<std::vector<Path>> out;
  for (const auto& family : all_disjoint_families(paths)) {
    if (family.size() != want) continue;
    std::vector<Path> sys;
    for (int i : family) sys.push_back(paths[i]);
    out.push_back(std::move(sys));
  }
  return out;
}

inline int exhaustive_min_cut(const Graft& g, const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> free_vertices;
  for (VertexId v : g.vertices())
    if (!a.count(v) && !b.count(v)) free_vertices.push_back(v);
  int best = g.edge_count() + 1;
  for (uint64_t mask = 0; mask < (1ull << free_vertices.size()); ++mask) {
    VertexSet x(a);
    for (size_t i = 0; i < free_vertices.size(); ++i)
      if (mask & (1ull << i)) x.insert(free_vertices[i]);
    best = std::min(best, static_cast<int>(g.boundary(x).size()));
  }
  return best;
}

inline bool orthogonal(const EdgeSet& cut, const std::vector<Path>& paths) {
  EdgeSet hit;
  for (const Path& p : paths) {
    EdgeSet meet = set_intersect(cut, p.edge_set());
    if (meet.size() != 1) return false;
    hit.insert(*meet.begin());
  }
  return hit == cut;
}

}  // namespace tpack::oracles
