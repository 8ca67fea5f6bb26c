#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tpack/error.hpp"

namespace tpack {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

class Graft;

/// A family of pairwise disjoint vertex sets, one per terminal, each
/// containing its terminal and no other. Contracting collapses every set
/// onto its terminal and drops the edges that end up as loops.
class ContractionFamily {
public:
  /// Validates against `g` and fills in {t} for terminals without an entry.
  static ContractionFamily build(const Graft& g, std::map<VertexId, VertexSet> sets);

  const std::map<VertexId, VertexSet>& sets() const { return sets_; }
  const EdgeSet& deleted_edges() const { return deleted_; }

  /// The total relabeling map: members of X_t go to t, everything else is fixed.
  VertexId relabel(VertexId v) const;
  bool absorbs(VertexId v) const { return relabel_.count(v) != 0; }

private:
  ContractionFamily() = default;
  std::map<VertexId, VertexSet> sets_;
  std::map<VertexId, VertexId> relabel_;  // only non-identity entries
  EdgeSet deleted_;
};

/// Finite multigraph with a distinguished terminal set. Parallel edges are
/// allowed, loops are not. Edge ids are assigned densely at construction and
/// are never reused: deletion keeps surviving ids, splitting off appends a
/// fresh id. Contraction retires vertex ids without reusing them. Values are
/// immutable after construction; every operation returns a new graft.
class Graft {
public:
  /// An empty placeholder; real grafts come from build().
  Graft() = default;

  static Graft build(int vertex_count, const std::vector<VertexId>& terminals,
                     const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_universe() const { return static_cast<int>(incidence_.size()); }
  int edge_universe() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_universe() && alive_[v]; }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_universe() && edges_[e].has_value(); }
  bool is_terminal(VertexId v) const { return terminals_.count(v) != 0; }

  const VertexSet& vertices() const { return vertex_set_; }
  const VertexSet& terminals() const { return terminals_; }
  EdgeSet edge_ids() const;
  int edge_count() const { return edge_count_; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  bool incident_to(EdgeId e, VertexId v) const;

  /// Incident edge ids in ascending order.
  const std::vector<EdgeId>& incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  /// The edges with exactly one endpoint in X.
  EdgeSet boundary(const VertexSet& x) const;
  int boundary_size(const VertexSet& x) const { return static_cast<int>(boundary(x).size()); }

  /// Edges incident to at least one terminal.
  EdgeSet terminal_boundary() const;

  /// Same vertices and terminals, edges restricted to `keep`; ids preserved.
  Graft restricted(const EdgeSet& keep) const;
  /// Convenience: drop the given edges.
  Graft without(const EdgeSet& drop) const;

  /// The quotient graft: members of each X_t are relabeled to t, edges
  /// internal to one X_t are removed, surviving edge ids are unchanged.
  Graft contracted(const ContractionFamily& family) const;

  /// Replaces the incident pair e0 = (s, x), f0 = (x, y) by one fresh edge
  /// s-y. Boundary parities of vertex sets avoiding the terminals are
  /// preserved. Returns the new graft and the fresh edge id.
  std::pair<Graft, EdgeId> split_off(VertexId s, EdgeId e0, EdgeId f0) const;

  bool operator==(const Graft& other) const;

private:
  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  std::vector<std::optional<std::pair<VertexId, VertexId>>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<char> alive_;
  VertexSet vertex_set_;
  VertexSet terminals_;
  int edge_count_ = 0;
};

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b);

}  // namespace tpack
