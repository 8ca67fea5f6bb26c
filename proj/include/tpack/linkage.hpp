#pragma once

#include <map>

#include "tpack/menger.hpp"

namespace tpack {

struct LinkWitness {
  bool linked;
  PathSystem system;  // maximum T-path system toward t; every path ends at t
};

/// t is linked iff delta(t) can be covered by edge-disjoint T-paths ending
/// at t; the witness is a maximum system either way.
LinkWitness is_linked(const Graft& g, VertexId t);

/// True iff every terminal is linked.
bool linkability_condition(const Graft& g);

/// Edge-disjoint routes from a set's boundary to its terminal: one path per
/// boundary edge, starting with that edge and ending at the terminal.
struct BoundarySystem {
  VertexId terminal;
  std::map<EdgeId, Path> routes;
};

/// A contraction family built from the largest-minimum-cut side of each
/// requested terminal. In the contracted graft every requested terminal's
/// boundary is its unique minimum cut, so the contracted graft always
/// satisfies the linkability condition when all terminals are requested.
/// Boundary systems allow path systems of the contracted graft to be lifted
/// back; for terminals linked in g the routes also cover delta(g, t).
struct TerminalContraction {
  ContractionFamily family;
  std::map<VertexId, BoundarySystem> boundary;
  Graft contracted;
};

TerminalContraction terminal_contraction(const Graft& g, const VertexSet& targets);

/// Lifts a T-path system of tc.contracted back to g by extending each path
/// end through its boundary route. Lifted paths keep their endpoints, gain
/// only edges inside the contracted sets, and stay pairwise edge-disjoint.
PathSystem lift_paths(const Graft& g, const TerminalContraction& tc, const PathSystem& paths);

}  // namespace tpack
