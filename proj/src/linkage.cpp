#include "tpack/linkage.hpp"

#include <algorithm>
#include <string>

namespace tpack {

namespace {

VertexSet terminals_without(const Graft& g, VertexId t) {
  VertexSet rest = g.terminals();
  rest.erase(t);
  return rest;
}

// Dense sub-instance on members + a fresh outside vertex; boundary edges of
// `members` are re-hung on the outside vertex. Keeps id translations.
struct SideInstance {
  Graft graft;
  VertexId outside_local;
  VertexId terminal_local;
  std::map<VertexId, VertexId> to_local_v;
  std::vector<EdgeId> to_global_e;
  std::map<EdgeId, EdgeId> to_local_e;

  static SideInstance build(const Graft& g, VertexId t, const VertexSet& members) {
    SideInstance s;
    int n = 0;
    for (VertexId v : members) s.to_local_v[v] = n++;
    s.outside_local = n;
    s.terminal_local = s.to_local_v.at(t);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : g.edge_ids()) {
      auto [u, v] = g.endpoints(e);
      bool iu = members.count(u), iv = members.count(v);
      if (!iu && !iv) continue;
      VertexId lu = iu ? s.to_local_v.at(u) : s.outside_local;
      VertexId lv = iv ? s.to_local_v.at(v) : s.outside_local;
      s.to_local_e[e] = static_cast<EdgeId>(edges.size());
      s.to_global_e.push_back(e);
      edges.emplace_back(lu, lv);
    }
    s.graft = Graft::build(n + 1, {s.terminal_local, s.outside_local}, edges);
    return s;
  }

  // A local path oriented outside -> t, translated to g. The first vertex
  // becomes the real outer endpoint of the first (boundary) edge.
  Path to_global(const Graft& g, const VertexSet& members, const Path& local) const {
    std::vector<EdgeId> es;
    es.reserve(local.edges().size());
    for (EdgeId e : local.edges()) es.push_back(to_global_e[e]);
    auto [u, v] = g.endpoints(es.front());
    VertexId start = members.count(u) ? v : u;
    return Path::from_edges(g, es, start);
  }

private:
  SideInstance() = default;
};

// Routes from the boundary of X_t to t, one per boundary edge: the inward
// suffixes of a maximum system orthogonal to delta(X_t).
std::map<EdgeId, Path> suffix_routes(const EdgeSet& boundary_edges, const PathSystem& sys) {
  std::map<EdgeId, Path> routes;
  for (const Path& p : sys.paths) {
    // the unique crossing edge of this path
    EdgeId crossing = -1;
    for (EdgeId e : p.edges()) {
      if (boundary_edges.count(e)) {
        if (crossing != -1)
          fail(ErrorKind::InternalInvariant, "orthogonal path crosses its cut twice");
        crossing = e;
      }
    }
    if (crossing == -1)
      fail(ErrorKind::InternalInvariant, "orthogonal path misses its cut");
    // paths run t -> outside; the prefix through the crossing edge, read
    // backwards, starts with the boundary edge and ends at t
    Path route = p.prefix_through_edge(crossing).reversed();
    routes.emplace(crossing, std::move(route));
  }
  return routes;
}

}  // namespace

LinkWitness is_linked(const Graft& g, VertexId t) {
  if (!g.has_vertex(t) || !g.is_terminal(t))
    fail(ErrorKind::NotATerminal, "vertex " + std::to_string(t));
  auto [sys, cut] = max_path_system(g, VertexSet{t}, terminals_without(g, t));
  LinkWitness w;
  w.linked = sys.size() == g.degree(t);
  w.system.source_side = sys.source_side;
  w.system.sink_side = sys.sink_side;
  for (const Path& p : sys.paths) w.system.paths.push_back(p.reversed());  // end at t
  return w;
}

bool linkability_condition(const Graft& g) {
  for (VertexId t : g.terminals())
    if (!is_linked(g, t).linked) return false;
  return true;
}

TerminalContraction terminal_contraction(const Graft& g, const VertexSet& targets) {
  for (VertexId t : targets)
    if (!g.is_terminal(t)) fail(ErrorKind::NotATerminal, "vertex " + std::to_string(t));
  std::map<VertexId, VertexSet> sets;
  std::map<VertexId, PathSystem> witness;  // orthogonal system at processing time
  Graft stage = g;
  for (VertexId t : targets) {
    ExtremeCuts ex = extreme_cuts(stage, VertexSet{t}, terminals_without(stage, t));
    sets[t] = ex.largest.source_region;
    witness[t] = ex.system;
    ContractionFamily step = ContractionFamily::build(stage, {{t, ex.largest.source_region}});
    stage = stage.contracted(step);
  }
  TerminalContraction tc{ContractionFamily::build(g, sets), {}, stage};

  for (VertexId t : g.terminals()) {
    const VertexSet& members = tc.family.sets().at(t);
    BoundarySystem bs;
    bs.terminal = t;
    EdgeSet boundary_edges = g.boundary(members);
    if (members.size() == 1) {
      for (EdgeId e : boundary_edges)
        bs.routes.emplace(e, Path::from_edges(g, {e}, g.other_end(e, t)));
    } else {
      bs.routes = suffix_routes(boundary_edges, witness.at(t));
    }
    // when t is linked, strengthen the routes so they also cover delta(t)
    LinkWitness link = is_linked(g, t);
    if (link.linked && g.degree(t) > 0 && !boundary_edges.empty() && members.size() > 1) {
      SideInstance side = SideInstance::build(g, t, members);
      PathSystem p_loc, q_loc;
      p_loc.source_side = q_loc.source_side = VertexSet{side.outside_local};
      p_loc.sink_side = q_loc.sink_side = VertexSet{side.terminal_local};
      auto localize = [&](const Path& global) {
        std::vector<EdgeId> es;
        for (EdgeId e : global.edges()) es.push_back(side.to_local_e.at(e));
        return Path::from_edges(side.graft, es, side.outside_local);
      };
      for (const auto& [e, route] : bs.routes) p_loc.paths.push_back(localize(route));
      for (const Path& lp : link.system.paths) {
        // the inward prefix of a linkage path, from its first boundary
        // crossing back to t; oriented outside -> t it still starts at the
        // crossing edge and covers the path's edge at t
        Path toward = lp.reversed();  // t -> away
        EdgeId crossing = -1;
        for (EdgeId e : toward.edges()) {
          if (boundary_edges.count(e)) {
            crossing = e;
            break;
          }
        }
        if (crossing == -1)
          fail(ErrorKind::InternalInvariant, "linkage path never leaves the contracted side");
        q_loc.paths.push_back(localize(toward.prefix_through_edge(crossing).reversed()));
      }
      PathSystem merged = pym_merge(side.graft, p_loc.source_side, p_loc.sink_side, p_loc, q_loc);
      bs.routes.clear();
      for (const Path& local : merged.paths) {
        Path route = side.to_global(g, members, local);
        bs.routes.emplace(route.edges().front(), std::move(route));
      }
      if (bs.routes.size() != boundary_edges.size())
        fail(ErrorKind::InternalInvariant, "boundary routes do not cover the boundary");
    }
    tc.boundary.emplace(t, std::move(bs));
  }

  // in the contracted graft each requested boundary is the unique minimum cut
  for (VertexId t : targets) {
    ExtremeCuts ex =
        extreme_cuts(tc.contracted, VertexSet{t}, terminals_without(tc.contracted, t));
    EdgeSet dt = tc.contracted.boundary(VertexSet{t});
    if (ex.smallest.edges != dt || ex.largest.edges != dt)
      fail(ErrorKind::InternalInvariant,
           "contracted boundary of " + std::to_string(t) + " is not the unique minimum cut");
  }
  return tc;
}

PathSystem lift_paths(const Graft& g, const TerminalContraction& tc, const PathSystem& paths) {
  const Graft& h = tc.contracted;
  PathSystem out;
  out.source_side = g.terminals();
  out.sink_side = g.terminals();
  EdgeSet used;
  for (const Path& raw : paths.paths) {
    Path p = Path::from_edges(h, raw.edges(), raw.first());
    if (!is_tpath(h, p)) fail(ErrorKind::NotAPathSystem, "input path is not a T-path");
    VertexId t0 = p.first(), t1 = p.last();
    EdgeId e0 = p.edges().front(), e1 = p.edges().back();
    auto route_for = [&](VertexId t, EdgeId e) -> const Path& {
      auto bit = tc.boundary.find(t);
      if (bit == tc.boundary.end())
        fail(ErrorKind::BoundaryMissing, "no boundary system for terminal " + std::to_string(t));
      auto rit = bit->second.routes.find(e);
      if (rit == bit->second.routes.end())
        fail(ErrorKind::BoundaryMissing,
             "no route for edge " + std::to_string(e) + " at terminal " + std::to_string(t));
      return rit->second;
    };
    const Path& r0 = route_for(t0, e0);
    const Path& r1 = route_for(t1, e1);
    // t0-side route reversed (t0 outward through e0), then the middle of p,
    // then the t1-side route inward through e1 to t1
    std::vector<EdgeId> es = r0.reversed().edges();
    const auto& pes = p.edges();
    if (pes.size() == 1) {
      es.insert(es.end(), r1.edges().begin() + 1, r1.edges().end());
    } else {
      for (size_t i = 1; i + 1 < pes.size(); ++i) es.push_back(pes[i]);
      es.insert(es.end(), r1.edges().begin(), r1.edges().end());
    }
    Path lifted = Path::from_edges(g, es, t0);
    if (lifted.last() != t1)
      fail(ErrorKind::InternalInvariant, "lifted path changed its endpoint");
    for (EdgeId e : lifted.edges())
      if (!used.insert(e).second)
        fail(ErrorKind::Collision,
             "lifted paths reuse edge " + std::to_string(e) + "; boundary system invalid");
    out.paths.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace tpack
