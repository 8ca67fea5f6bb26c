#pragma once

#include <optional>

#include "tpack/paths.hpp"

namespace tpack {

/// One piece of an edge partition: a simple cycle (closed vertex sequence,
/// through at most one terminal) or a path between two distinct terminals
/// with no terminal inside.
struct PartitionPiece {
  enum class Kind { cycle, t_path };
  Kind kind;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // edges.size() + 1 entries; closed for cycles
};

/// A non-terminal vertex of odd degree, if any.
std::optional<VertexId> odd_inner_vertex(const Graft& g);

/// True iff no non-terminal vertex has odd degree (for finite grafts the
/// singleton check settles all inner vertex sets).
bool is_inner_eulerian(const Graft& g);

/// Partitions the edge set of an inner-Eulerian graft into cycles and
/// T-paths. Deterministic: walks take the lowest unused edge id; segments
/// closing back on their own terminal are re-paired with a neighbouring
/// piece when that turns them into T-paths, otherwise kept as cycles
/// through that terminal.
std::vector<PartitionPiece> cycle_tpath_partition(const Graft& g);

/// Checks shape, simplicity and edge-disjoint coverage of a partition.
bool valid_partition(const Graft& g, const std::vector<PartitionPiece>& pieces);

}  // namespace tpack
