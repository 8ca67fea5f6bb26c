#pragma once

#include <utility>
#include <variant>

#include "tpack/paths.hpp"

namespace tpack {

/// One augmentation step. Either returns a path system with one more path
/// (the endpoint edge sets each grow by exactly one edge), or a cut
/// orthogonal to `sys` certifying that `sys` is maximum. The cut's source
/// region is the residual-reachable closure of `a`.
std::variant<Cut, PathSystem> augment(const Graft& g, const VertexSet& a, const VertexSet& b,
                                      const PathSystem& sys);

/// A maximum system of edge-disjoint ab-paths together with an orthogonal
/// minimum cut, the smallest one in the first-crossing order.
std::pair<PathSystem, Cut> max_path_system(const Graft& g, const VertexSet& a, const VertexSet& b);

/// The maximum number of pairwise edge-disjoint paths between x and y.
int local_edge_connectivity(const Graft& g, const VertexSet& x, const VertexSet& y);

/// The first-crossing order on minimum cuts: c precedes c2 iff along every
/// ab-path the first edge of c comes no later than the first edge of c2;
/// canonically, iff the reachable source region of c is contained in that of
/// c2. Both cuts must be orthogonal to some maximum system (i.e. minimum).
bool cut_leq(const Graft& g, const VertexSet& a, const VertexSet& b, const Cut& c, const Cut& c2);

struct ExtremeCuts {
  PathSystem system;  // a maximum system orthogonal to both cuts
  Cut smallest;
  Cut largest;
};

/// The extreme elements of the minimum-cut lattice: every minimum ab-cut
/// sits between `smallest` and `largest` in the first-crossing order.
ExtremeCuts extreme_cuts(const Graft& g, const VertexSet& a, const VertexSet& b);

/// Requires a to be linked (all of delta(a) saturated by a maximum system).
/// Returns the smallest minimum cut containing e; every linkage of a is
/// orthogonal to it. If some maximum system avoids e the precondition of the
/// tightness guarantee fails and the call reports it.
Cut tight_cut_through(const Graft& g, const VertexSet& a, const VertexSet& b, EdgeId e);

/// Merges two ab-path systems into one whose first edges at a cover those of
/// p and whose last edges at b cover those of q.
PathSystem pym_merge(const Graft& g, const VertexSet& a, const VertexSet& b, const PathSystem& p,
                     const PathSystem& q);

/// Combines the prefix of p up to the pivot with the suffix of q from the
/// pivot on. The pivot must lie on both paths and the result must be simple.
Path splice(const Graft& g, const Path& p, Pivot pivot, const Path& q);

}  // namespace tpack
