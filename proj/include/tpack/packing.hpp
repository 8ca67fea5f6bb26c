#pragma once

#include "tpack/euler.hpp"
#include "tpack/linkage.hpp"

namespace tpack {

/// A T-path packing together with one cut per terminal: C_t separates t from
/// the other terminals and consists of exactly one edge from each path
/// ending at t, nothing else.
struct Certificate {
  PathSystem paths;
  std::map<VertexId, Cut> cuts;
};

/// For a two-terminal inner-Eulerian graft with s linked: a linkage of s
/// plus edge-disjoint cycles in the rest covering the remaining boundary
/// of t.
std::pair<PathSystem, std::vector<PartitionPiece>> linkage_with_cycle_cover(const Graft& g,
                                                                            VertexId s,
                                                                            VertexId t);

/// Which terminals stay linked after deleting f and g (f == g deletes one).
std::map<VertexId, bool> linked_after_deletions(const Graft& g, EdgeId f, EdgeId g2);

/// Extracts a T-path through the terminal-incident edge e0 such that the
/// rest of the graft is still inner-Eulerian and satisfies the linkability
/// condition. Recursion: contract the largest-cut sides of the other
/// terminals, split off e0 with its successor on a carried linkage path,
/// recurse on the fresh edge, translate back and lift through the boundary
/// routes. The carried witness shrinks at every level.
Path extract_tpath(const Graft& g, EdgeId e0);

/// Covers every terminal-incident edge by pairwise edge-disjoint T-paths,
/// extracting one path at a time.
PathSystem perfect_linkage(const Graft& g);

/// The structural packing certificate of an inner-Eulerian graft: contract
/// all terminal sides, solve the contracted graft (linkable by
/// construction), lift, and read the cuts off the contracted sides. No
/// linkability premise on g.
Certificate packing_certificate(const Graft& g);

}  // namespace tpack
