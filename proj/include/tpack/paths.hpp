#pragma once

#include <vector>

#include "tpack/graft.hpp"

namespace tpack {

/// A simple path stored as an ordered edge sequence together with its vertex
/// sequence. Nonempty, consecutive edges share a vertex, no vertex repeats.
class Path {
public:
  /// Walks `edges` starting at `start` and validates simplicity.
  static Path from_edges(const Graft& g, const std::vector<EdgeId>& edges, VertexId start);

  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId first() const { return vertices_.front(); }
  VertexId last() const { return vertices_.back(); }
  int length() const { return static_cast<int>(edges_.size()); }

  bool contains_edge(EdgeId e) const;
  bool contains_vertex(VertexId v) const;
  EdgeSet edge_set() const { return EdgeSet(edges_.begin(), edges_.end()); }

  Path reversed() const;
  /// The prefix ending at the first occurrence of v (v must lie on the path).
  Path prefix_to_vertex(VertexId v) const;
  /// The prefix ending with edge e (inclusive).
  Path prefix_through_edge(EdgeId e) const;
  /// The suffix starting at the first occurrence of v.
  Path suffix_from_vertex(VertexId v) const;

  bool operator==(const Path& o) const {
    return edges_ == o.edges_ && vertices_ == o.vertices_;
  }

private:
  Path() = default;
  std::vector<EdgeId> edges_;
  std::vector<VertexId> vertices_;  // edges_.size() + 1 entries
};

/// A family of pairwise edge-disjoint paths between two vertex sets. For
/// T-path systems both sides equal the terminal set.
struct PathSystem {
  std::vector<Path> paths;
  VertexSet source_side;
  VertexSet sink_side;

  int size() const { return static_cast<int>(paths.size()); }
  EdgeSet edge_union() const;
  /// Edges of the system incident to a vertex of `side`.
  EdgeSet side_edges(const VertexSet& side) const;
};

/// An edge cut delta(X) with its recorded source side X.
struct Cut {
  EdgeSet edges;
  VertexSet source_region;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Designates a splice point that lies on both paths.
struct Pivot {
  enum class Kind { vertex, edge };
  Kind kind;
  int id;

  static Pivot at_vertex(VertexId v) { return {Kind::vertex, v}; }
  static Pivot at_edge(EdgeId e) { return {Kind::edge, e}; }
};

/// True iff p runs between two distinct terminals with no terminal inside.
bool is_tpath(const Graft& g, const Path& p);

/// Validates that `sys` is an AB-path system of g for sides (a, b): every
/// path simple and alive in g, endpoints on opposite sides, no internal
/// vertices in a or b, pairwise edge-disjoint. Returns a copy with every
/// path oriented from a to b.
PathSystem oriented_path_system(const Graft& g, const VertexSet& a, const VertexSet& b,
                                const PathSystem& sys);

}  // namespace tpack
