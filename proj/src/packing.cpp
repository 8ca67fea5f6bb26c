#include "tpack/packing.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace tpack {

namespace {

void require_inner_eulerian(const Graft& g) {
  if (auto odd = odd_inner_vertex(g))
    fail(ErrorKind::NotInnerEulerian, "vertex " + std::to_string(*odd) + " has odd degree");
}

void require_linkability(const Graft& g) {
  for (VertexId t : g.terminals())
    if (!is_linked(g, t).linked)
      fail(ErrorKind::LinkabilityFails, "terminal " + std::to_string(t) + " is not linked");
}

// The extraction postcondition, re-checked after every level.
void check_extraction(const Graft& g, EdgeId e0, const Path& p) {
  if (!is_tpath(g, p) || !p.contains_edge(e0))
    fail(ErrorKind::InternalInvariant, "extracted piece is not a T-path through the target edge");
  Graft rest = g.without(p.edge_set());
  if (!is_inner_eulerian(rest))
    fail(ErrorKind::InternalInvariant, "extraction broke the parity condition");
  for (VertexId t : rest.terminals())
    if (!is_linked(rest, t).linked)
      fail(ErrorKind::InternalInvariant,
           "extraction unlinked terminal " + std::to_string(t));
}

// The first T-path (by ascending-id depth-first search) through e0 from s
// using only edges of `allowed`.
Path tpath_within(const Graft& g, const EdgeSet& allowed, VertexId s, EdgeId e0) {
  std::vector<char> used(g.edge_universe(), 0);
  used[e0] = 1;
  std::vector<EdgeId> cur{e0};
  VertexSet visited{s, g.other_end(e0, s)};
  std::function<bool(VertexId)> dfs = [&](VertexId at) -> bool {
    if (g.is_terminal(at)) return true;
    for (EdgeId e : g.incident(at)) {
      if (!allowed.count(e) || used[e]) continue;
      VertexId next = g.other_end(e, at);
      if (visited.count(next)) continue;
      used[e] = 1;
      visited.insert(next);
      cur.push_back(e);
      if (dfs(next)) return true;
      cur.pop_back();
      visited.erase(next);
      used[e] = 0;
    }
    return false;
  };
  if (!dfs(g.other_end(e0, s)))
    fail(ErrorKind::InternalInvariant, "no T-path through the split edges");
  return Path::from_edges(g, cur, s);
}

// One level of the extraction recursion. The witness is a T-path from s
// through e0 (its first edge) that belongs to some linkage of s; its length
// strictly decreases across levels.
Path extract_level(const Graft& g, EdgeId e0, const Path& witness) {
  auto [u, v] = g.endpoints(e0);
  if (g.is_terminal(u) && g.is_terminal(v))
    return Path::from_edges(g, {e0}, std::min(u, v));

  VertexId s = witness.first();
  VertexSet others = g.terminals();
  others.erase(s);
  TerminalContraction tc = terminal_contraction(g, others);
  const Graft& h = tc.contracted;

  // truncate the witness at its first contact with a contracted side
  std::vector<EdgeId> wes;
  VertexId reached = -1;
  for (size_t i = 0; i + 1 < witness.vertices().size(); ++i) {
    wes.push_back(witness.edges()[i]);
    VertexId w = witness.vertices()[i + 1];
    if (tc.family.absorbs(w) || h.is_terminal(w)) {
      reached = tc.family.relabel(w);
      break;
    }
  }
  if (reached == -1)
    fail(ErrorKind::InternalInvariant, "witness never reaches another terminal");
  Path contracted_witness = Path::from_edges(h, wes, s);

  // a T-path through e0 in h whose removal keeps h linkable
  Path q = [&]() -> Path {
    if (contracted_witness.length() == 1) return contracted_witness;  // e0 already terminal-terminal
    EdgeId f0 = contracted_witness.edges()[1];
    auto [h2, h0] = h.split_off(s, e0, f0);
    std::vector<EdgeId> next_edges{h0};
    next_edges.insert(next_edges.end(), contracted_witness.edges().begin() + 2,
                      contracted_witness.edges().end());
    Path next_witness = Path::from_edges(h2, next_edges, s);
    Path deeper = extract_level(h2, h0, next_witness);
    EdgeSet allowed = deeper.edge_set();
    allowed.erase(h0);
    allowed.insert(e0);
    allowed.insert(f0);
    return tpath_within(h, allowed, s, e0);
  }();

  // lift q's far end through its boundary route
  VertexId t0 = q.last();
  EdgeId f_end = q.edges().back();
  const BoundarySystem& bs = tc.boundary.at(t0);
  auto rit = bs.routes.find(f_end);
  if (rit == bs.routes.end())
    fail(ErrorKind::BoundaryMissing,
         "no route for edge " + std::to_string(f_end) + " at terminal " + std::to_string(t0));
  std::vector<EdgeId> es(q.edges().begin(), q.edges().end() - 1);
  es.insert(es.end(), rit->second.edges().begin(), rit->second.edges().end());
  Path lifted = Path::from_edges(g, es, s);
  check_extraction(g, e0, lifted);
  return lifted;
}

}  // namespace

std::pair<PathSystem, std::vector<PartitionPiece>> linkage_with_cycle_cover(const Graft& g,
                                                                            VertexId s,
                                                                            VertexId t) {
  if (g.terminals() != VertexSet{s, t} || s == t)
    fail(ErrorKind::NotATerminal, "expected exactly the two terminals s and t");
  require_inner_eulerian(g);
  if (!is_linked(g, s).linked)
    fail(ErrorKind::SourceNotLinked, "terminal " + std::to_string(s) + " is not linked");

  PathSystem linkage_out;
  linkage_out.source_side = VertexSet{s};
  linkage_out.sink_side = VertexSet{t};
  std::vector<PartitionPiece> cycles_out;
  Graft cur = g;
  for (;;) {
    EdgeSet targets = set_union(cur.boundary(VertexSet{s}), cur.boundary(VertexSet{t}));
    if (targets.empty()) break;
    EdgeId e = *targets.begin();
    LinkWitness lw = is_linked(cur, s);
    if (!lw.linked)
      fail(ErrorKind::InternalInvariant, "peeling unlinked the source terminal");
    const Path* through = nullptr;
    for (const Path& p : lw.system.paths)
      if (p.contains_edge(e)) through = &p;
    if (through) {
      Path h = through->first() == s ? *through : through->reversed();
      linkage_out.paths.push_back(h);
      cur = cur.without(h.edge_set());
      continue;
    }
    // e lies on no linkage path, hence at t; take its partition piece
    std::vector<PartitionPiece> pieces = cycle_tpath_partition(cur);
    const PartitionPiece* he = nullptr;
    for (const PartitionPiece& p : pieces)
      if (std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end()) he = &p;
    if (!he) fail(ErrorKind::InternalInvariant, "partition misses an edge");
    EdgeSet link_edges = lw.system.edge_union();
    if (set_intersect(EdgeSet(he->edges.begin(), he->edges.end()), link_edges).empty()) {
      if (he->kind == PartitionPiece::Kind::cycle) {
        cycles_out.push_back(*he);
        cur = cur.without(EdgeSet(he->edges.begin(), he->edges.end()));
      } else {
        VertexId first = he->vertices.front();
        Path h = Path::from_edges(cur, he->edges, first);
        if (h.first() != s) h = h.reversed();
        linkage_out.paths.push_back(h);
        cur = cur.without(h.edge_set());
      }
      continue;
    }
    // the piece collides with the linkage: walk it from t with e outgoing
    // until the first vertex on the linkage, then splice over to s
    std::vector<EdgeId> oriented;  // the piece's edges, starting at t with e
    if (he->kind == PartitionPiece::Kind::t_path) {
      oriented = he->edges;
      if (he->vertices.front() != t) std::reverse(oriented.begin(), oriented.end());
    } else {
      size_t n = he->edges.size();
      size_t i = 0;
      while (he->vertices[i] != t) ++i;
      if (he->edges[i] == e) {
        for (size_t k = 0; k < n; ++k) oriented.push_back(he->edges[(i + k) % n]);
      } else {
        for (size_t k = 0; k < n; ++k) oriented.push_back(he->edges[(i + n - 1 - k) % n]);
      }
    }
    if (oriented.front() != e)
      fail(ErrorKind::InternalInvariant, "could not orient the partition piece at t");
    VertexSet on_linkage;
    for (const Path& p : lw.system.paths)
      for (VertexId w : p.vertices()) on_linkage.insert(w);
    std::vector<EdgeId> seg;
    VertexId walk_at = t;
    VertexId meet = -1;
    for (EdgeId ce : oriented) {
      seg.push_back(ce);
      walk_at = cur.other_end(ce, walk_at);
      if (on_linkage.count(walk_at)) {
        meet = walk_at;
        break;
      }
    }
    if (meet == -1 || meet == t)
      fail(ErrorKind::InternalInvariant, "colliding piece never meets the linkage properly");
    std::reverse(seg.begin(), seg.end());
    Path segment_in = Path::from_edges(cur, seg, meet);  // meet .. t, contains e
    const Path* witness = nullptr;
    for (const Path& p : lw.system.paths)
      if (p.contains_vertex(meet)) {
        witness = &p;
        break;
      }
    Path toward_s = witness->first() == s ? *witness : witness->reversed();
    Path h = splice(cur, toward_s, Pivot::at_vertex(meet), segment_in);
    if (h.first() != s || h.last() != t || !h.contains_edge(e))
      fail(ErrorKind::InternalInvariant, "spliced peel is not an st-path through e");
    linkage_out.paths.push_back(h);
    cur = cur.without(h.edge_set());
  }
  return {linkage_out, cycles_out};
}

std::map<VertexId, bool> linked_after_deletions(const Graft& g, EdgeId f, EdgeId g2) {
  if (!g.has_edge(f)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(f));
  if (!g.has_edge(g2)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(g2));
  Graft rest = g.without(f == g2 ? EdgeSet{f} : EdgeSet{f, g2});
  std::map<VertexId, bool> out;
  for (VertexId t : rest.terminals()) out[t] = is_linked(rest, t).linked;
  return out;
}

Path extract_tpath(const Graft& g, EdgeId e0) {
  if (!g.has_edge(e0)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(e0));
  require_inner_eulerian(g);
  require_linkability(g);
  auto [u, v] = g.endpoints(e0);
  if (!g.is_terminal(u) && !g.is_terminal(v))
    fail(ErrorKind::NotATerminalEdge, "edge " + std::to_string(e0) + " touches no terminal");
  if (g.is_terminal(u) && g.is_terminal(v)) {
    Path p = Path::from_edges(g, {e0}, std::min(u, v));
    check_extraction(g, e0, p);
    return p;
  }
  VertexId s = g.is_terminal(u) ? u : v;
  LinkWitness lw = is_linked(g, s);
  const Path* through = nullptr;
  for (const Path& p : lw.system.paths)
    if (p.contains_edge(e0)) through = &p;
  if (!through) fail(ErrorKind::InternalInvariant, "linkage does not cover a boundary edge");
  Path witness = through->last() == s ? through->reversed() : *through;
  return extract_level(g, e0, witness);
}

PathSystem perfect_linkage(const Graft& g) {
  require_inner_eulerian(g);
  require_linkability(g);
  PathSystem out;
  out.source_side = g.terminals();
  out.sink_side = g.terminals();
  Graft cur = g;
  for (;;) {
    EdgeSet open = cur.terminal_boundary();
    if (open.empty()) break;
    Path p = extract_tpath(cur, *open.begin());
    cur = cur.without(p.edge_set());
    out.paths.push_back(std::move(p));
  }
  return out;
}

Certificate packing_certificate(const Graft& g) {
  require_inner_eulerian(g);
  TerminalContraction tc = terminal_contraction(g, g.terminals());
  PathSystem contracted_solution = perfect_linkage(tc.contracted);
  Certificate cert;
  cert.paths = lift_paths(g, tc, contracted_solution);
  for (VertexId t : g.terminals()) {
    const VertexSet& side = tc.family.sets().at(t);
    cert.cuts.emplace(t, Cut{g.boundary(side), side});
  }
  return cert;
}

}  // namespace tpack
