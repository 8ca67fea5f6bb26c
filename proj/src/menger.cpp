#include "tpack/menger.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace tpack {

namespace {

constexpr VertexId kNone = -1;

// Unit-capacity undirected flow between two merged super-vertices. Vertices
// of A are identified into s_star and those of B into t_star; edges internal
// to one side drop out. Every scan is in ascending edge-id order, so all
// results are reproducible.
class Net {
public:
  Net(const Graft& g, const VertexSet& a, const VertexSet& b) : g_(g), a_(a), b_(b) {
    if (a.empty() || b.empty()) fail(ErrorKind::SidesOverlap, "a side is empty");
    for (VertexId v : a) {
      if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
      if (b.count(v)) fail(ErrorKind::SidesOverlap, "vertex " + std::to_string(v) + " on both sides");
    }
    for (VertexId v : b)
      if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    s_star_ = g.vertex_universe();
    t_star_ = g.vertex_universe() + 1;
    inc_.resize(g.vertex_universe() + 2);
    from_.assign(g.edge_universe(), kNone);
    locked_.assign(g.edge_universe(), 0);
    in_net_.assign(g.edge_universe(), 0);
    for (EdgeId e : g.edge_ids()) {
      auto [u, v] = g.endpoints(e);
      VertexId mu = mapv(u), mv = mapv(v);
      if (mu == mv) continue;  // internal to one side
      in_net_[e] = 1;
      inc_[mu].push_back(e);
      inc_[mv].push_back(e);
    }
    for (auto& list : inc_) std::sort(list.begin(), list.end());
  }

  VertexId s_star() const { return s_star_; }
  VertexId t_star() const { return t_star_; }

  VertexId mapv(VertexId v) const {
    if (a_.count(v)) return s_star_;
    if (b_.count(v)) return t_star_;
    return v;
  }

  VertexId merged_other(EdgeId e, VertexId at) const {
    auto [u, v] = g_.endpoints(e);
    VertexId mu = mapv(u), mv = mapv(v);
    return mu == at ? mv : mu;
  }

  bool arc_open(EdgeId e, VertexId tail) const {
    if (!in_net_[e]) return false;
    if (from_[e] == tail) return false;                 // already saturated this way
    if (locked_[e] && from_[e] != kNone) return false;  // mandatory flow, no cancelling
    return true;
  }

  // Seeds the flow with an oriented path system (each path runs a to b).
  void load(const PathSystem& sys) {
    for (const Path& p : sys.paths) {
      const auto& vs = p.vertices();
      const auto& es = p.edges();
      for (size_t i = 0; i < es.size(); ++i) from_[es[i]] = mapv(vs[i]);
    }
  }

  void force(EdgeId e, VertexId merged_tail) {
    if (from_[e] != kNone && from_[e] != merged_tail)
      fail(ErrorKind::InternalInvariant,
           "conflicting mandatory directions on edge " + std::to_string(e));
    from_[e] = merged_tail;
    locked_[e] = 1;
  }

  bool is_locked(EdgeId e) const { return locked_[e]; }
  bool participates(EdgeId e) const { return in_net_[e]; }
  const std::vector<EdgeId>& merged_incident(VertexId v) const { return inc_[v]; }
  void set_flow(EdgeId e, VertexId merged_tail) { from_[e] = merged_tail; }

  // Shortest residual walk from the seed set to any sink; applies it.
  bool route(const std::vector<VertexId>& seeds, const std::set<VertexId>& sinks) {
    std::vector<EdgeId> via(inc_.size(), kNone);
    std::vector<VertexId> prev(inc_.size(), kNone);
    std::vector<char> seen(inc_.size(), 0);
    std::deque<VertexId> queue;
    for (VertexId s : seeds) {
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    }
    VertexId hit = kNone;
    while (hit == kNone && !queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : inc_[u]) {
        if (!arc_open(e, u)) continue;
        VertexId w = merged_other(e, u);
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = e;
        prev[w] = u;
        if (sinks.count(w)) {
          hit = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (hit == kNone) return false;
    for (VertexId w = hit; via[w] != kNone; w = prev[w]) {
      EdgeId e = via[w];
      from_[e] = (from_[e] == w) ? kNone : prev[w];  // cancel or push
    }
    return true;
  }

  bool augment_once() { return route({s_star_}, {t_star_}); }

  int run_max() {
    int value = 0;
    while (augment_once()) ++value;
    return value;
  }

  VertexId flow_tail(EdgeId e) const { return from_[e]; }

  std::vector<char> reach_from(const std::vector<VertexId>& seeds) const {
    std::vector<char> seen(inc_.size(), 0);
    std::deque<VertexId> queue;
    for (VertexId s : seeds) {
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : inc_[u]) {
        if (!arc_open(e, u)) continue;
        VertexId w = merged_other(e, u);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

  // Vertices with a residual walk into t_star.
  std::vector<char> coreach_sink() const {
    std::vector<char> seen(inc_.size(), 0);
    std::deque<VertexId> queue;
    seen[t_star_] = 1;
    queue.push_back(t_star_);
    while (!queue.empty()) {
      VertexId w = queue.front();
      queue.pop_front();
      for (EdgeId e : inc_[w]) {
        VertexId u = merged_other(e, w);
        if (seen[u] || !arc_open(e, u)) continue;
        seen[u] = 1;
        queue.push_back(u);
      }
    }
    return seen;
  }

  // Translates a merged reachability vector into a source region of g:
  // reaching s_star pulls in all of A; t_star must not be reached.
  VertexSet source_region(const std::vector<char>& seen) const {
    if (seen[t_star_]) fail(ErrorKind::InternalInvariant, "source region touches the sink side");
    VertexSet region;
    if (seen[s_star_]) region.insert(a_.begin(), a_.end());
    for (VertexId v : g_.vertices())
      if (!a_.count(v) && !b_.count(v) && seen[v]) region.insert(v);
    return region;
  }

  Cut cut_at(const std::vector<char>& seen) const {
    VertexSet region = source_region(seen);
    return Cut{g_.boundary(region), region};
  }

  // Deterministic decomposition of the current flow into simple ab-paths.
  // Flow cycles are dropped.
  PathSystem extract() const {
    PathSystem out;
    out.source_side = a_;
    out.sink_side = b_;
    std::vector<char> consumed(from_.size(), 0);
    for (EdgeId e0 = 0; e0 < static_cast<EdgeId>(from_.size()); ++e0) {
      if (!in_net_[e0] || from_[e0] != s_star_ || consumed[e0]) continue;
      std::vector<EdgeId> es{e0};
      std::vector<VertexId> ms{s_star_, merged_other(e0, s_star_)};
      consumed[e0] = 1;
      std::map<VertexId, size_t> pos{{s_star_, 0}, {ms.back(), 1}};
      while (ms.back() != t_star_) {
        VertexId cur = ms.back();
        EdgeId next = kNone;
        for (EdgeId e : inc_[cur]) {
          if (in_net_[e] && from_[e] == cur && !consumed[e]) {
            next = e;
            break;
          }
        }
        if (next == kNone)
          fail(ErrorKind::InternalInvariant,
               "flow not conserved at merged vertex " + std::to_string(cur));
        consumed[next] = 1;
        VertexId head = merged_other(next, cur);
        auto it = pos.find(head);
        if (it != pos.end()) {
          // the walk closed a flow cycle; drop it
          size_t keep = it->second;
          for (size_t i = keep + 1; i < ms.size(); ++i) pos.erase(ms[i]);
          ms.resize(keep + 1);
          es.resize(keep);
        } else {
          es.push_back(next);
          ms.push_back(head);
          pos[head] = ms.size() - 1;
        }
      }
      // back to graft coordinates: the first edge names its A endpoint
      auto [u, v] = g_.endpoints(es.front());
      VertexId start = a_.count(u) ? u : v;
      out.paths.push_back(Path::from_edges(g_, es, start));
    }
    return out;
  }

private:
  const Graft& g_;
  VertexSet a_, b_;
  VertexId s_star_ = kNone, t_star_ = kNone;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<VertexId> from_;
  std::vector<char> locked_;
  std::vector<char> in_net_;
};

}  // namespace

std::variant<Cut, PathSystem> augment(const Graft& g, const VertexSet& a, const VertexSet& b,
                                      const PathSystem& sys) {
  PathSystem oriented = oriented_path_system(g, a, b, sys);
  Net net(g, a, b);
  net.load(oriented);
  if (net.augment_once()) return net.extract();
  return net.cut_at(net.reach_from({net.s_star()}));
}

std::pair<PathSystem, Cut> max_path_system(const Graft& g, const VertexSet& a,
                                           const VertexSet& b) {
  Net net(g, a, b);
  net.run_max();
  Cut smallest = net.cut_at(net.reach_from({net.s_star()}));
  return {net.extract(), smallest};
}

int local_edge_connectivity(const Graft& g, const VertexSet& x, const VertexSet& y) {
  Net net(g, x, y);
  return net.run_max();
}

namespace {

// Validates an Erdos-Menger cut and returns its canonical source region,
// the set reachable from a in g minus the cut.
VertexSet canonical_region(const Graft& g, const VertexSet& a, const VertexSet& b, const Cut& c,
                           int lambda) {
  for (EdgeId e : c.edges)
    if (!g.has_edge(e)) fail(ErrorKind::NotMinCut, "cut uses missing edge " + std::to_string(e));
  if (g.boundary(c.source_region) != c.edges)
    fail(ErrorKind::NotMinCut, "cut edges are not the boundary of the recorded region");
  for (VertexId v : a)
    if (!c.source_region.count(v)) fail(ErrorKind::NotMinCut, "region misses a source vertex");
  for (VertexId v : b)
    if (c.source_region.count(v)) fail(ErrorKind::NotMinCut, "region contains a sink vertex");
  if (c.size() != lambda)
    fail(ErrorKind::NotMinCut, "cut size " + std::to_string(c.size()) +
                                   " differs from minimum " + std::to_string(lambda));
  VertexSet region(a);
  std::deque<VertexId> queue(a.begin(), a.end());
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(u)) {
      if (c.edges.count(e)) continue;
      VertexId w = g.other_end(e, u);
      if (region.insert(w).second) queue.push_back(w);
    }
  }
  for (VertexId v : b)
    if (region.count(v)) fail(ErrorKind::NotMinCut, "cut does not separate the sides");
  return region;
}

}  // namespace

bool cut_leq(const Graft& g, const VertexSet& a, const VertexSet& b, const Cut& c,
             const Cut& c2) {
  int lambda = local_edge_connectivity(g, a, b);
  VertexSet r1 = canonical_region(g, a, b, c, lambda);
  VertexSet r2 = canonical_region(g, a, b, c2, lambda);
  return std::includes(r2.begin(), r2.end(), r1.begin(), r1.end());
}

ExtremeCuts extreme_cuts(const Graft& g, const VertexSet& a, const VertexSet& b) {
  Net net(g, a, b);
  net.run_max();
  ExtremeCuts out;
  out.smallest = net.cut_at(net.reach_from({net.s_star()}));
  std::vector<char> co = net.coreach_sink();
  if (co[net.s_star()]) fail(ErrorKind::InternalInvariant, "sink co-reachable from source");
  for (auto& flag : co) flag = !flag;  // the side that cannot reach the sink
  out.largest = net.cut_at(co);
  out.system = net.extract();
  if (out.smallest.size() != out.system.size() || out.largest.size() != out.system.size())
    fail(ErrorKind::InternalInvariant, "extreme cuts are not minimum");
  return out;
}

Cut tight_cut_through(const Graft& g, const VertexSet& a, const VertexSet& b, EdgeId e) {
  if (!g.has_edge(e)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  Net net(g, a, b);
  int lambda = net.run_max();
  int da = static_cast<int>(g.boundary(a).size());
  if (lambda < da)
    fail(ErrorKind::NotLinked,
         "side is not linked: " + std::to_string(lambda) + " < " + std::to_string(da));
  VertexId tail = net.flow_tail(e);
  if (tail == kNone)
    fail(ErrorKind::PreconditionEdgeAvoidable, "a maximum system avoids edge " + std::to_string(e));
  std::vector<char> seen = net.reach_from({net.s_star(), tail});
  VertexId head = net.merged_other(e, tail);
  if (seen[head] || seen[net.t_star()])
    fail(ErrorKind::PreconditionEdgeAvoidable, "no minimum cut contains edge " + std::to_string(e));
  Cut cut = net.cut_at(seen);
  if (cut.size() != lambda) fail(ErrorKind::InternalInvariant, "tight cut is not minimum");
  return cut;
}

namespace {

// Completes a set of mandatory arcs to a full flow: the textbook
// lower-bound reduction. The mandatory arcs are removed and leave vertex
// imbalances; a circulation over the free edges, a closure arc from the
// sink back to the source, and one super source/sink pair settles them.
// Free edges never point into the source or out of the sink, so the
// combined flow decomposes into ab-paths.
class Balancer {
public:
  Balancer(const Graft& g, Net& net) : g_(g), net_(net) {
    aux_from_.assign(g.edge_universe(), kNone);
    for (EdgeId e : g.edge_ids()) {
      VertexId tail = net.flow_tail(e);
      if (tail == kNone) continue;
      VertexId head = net.merged_other(e, tail);
      excess_[head] += 1;
      excess_[tail] -= 1;
    }
  }

  void run() {
    int need = 0;
    for (const auto& [v, x] : excess_) {
      (void)v;
      if (x > 0) need += x;
    }
    int value = 0;
    while (augment()) ++value;
    if (value != need)
      fail(ErrorKind::InternalInvariant, "mandatory end edges admit no completion");
    for (EdgeId e = 0; e < g_.edge_universe(); ++e)
      if (aux_from_[e] != kNone) net_.set_flow(e, aux_from_[e]);
  }

private:
  // one shortest augmenting walk from a surplus vertex to a deficit vertex
  bool augment() {
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;  // vertex -> (prev, via)
    std::deque<VertexId> queue;
    for (const auto& [v, x] : excess_) {
      if (x > 0) {
        parent[v] = {kNone, kNone};
        queue.push_back(v);
      }
    }
    VertexId hit = kNone;
    while (hit == kNone && !queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      auto try_visit = [&](VertexId w, EdgeId via) {
        if (hit != kNone || parent.count(w)) return;
        parent[w] = {u, via};
        auto it = excess_.find(w);
        if (it != excess_.end() && it->second < 0)
          hit = w;
        else
          queue.push_back(w);
      };
      for (EdgeId e : net_.merged_incident(u)) {
        if (hit != kNone) break;
        if (net_.is_locked(e) || !net_.participates(e)) continue;
        if (aux_from_[e] == u) continue;  // saturated this way
        VertexId w = net_.merged_other(e, u);
        if (aux_from_[e] == kNone && (w == net_.s_star() || u == net_.t_star()))
          continue;  // fresh flow never enters the source or leaves the sink
        try_visit(w, e);
      }
      if (u == net_.t_star()) try_visit(net_.s_star(), kClosure);
      if (u == net_.s_star() && closure_ > 0) try_visit(net_.t_star(), kClosure);
    }
    if (hit == kNone) return false;
    VertexId w = hit;
    for (;;) {
      auto [u, via] = parent.at(w);
      if (u == kNone) break;
      if (via == kClosure)
        closure_ += (u == net_.t_star()) ? 1 : -1;
      else
        aux_from_[via] = (aux_from_[via] == w) ? kNone : u;
      w = u;
    }
    excess_[hit] += 1;
    excess_[w] -= 1;
    return true;
  }

  static constexpr EdgeId kClosure = -2;
  const Graft& g_;
  Net& net_;
  std::vector<VertexId> aux_from_;
  std::map<VertexId, int> excess_;
  int closure_ = 0;
};

}  // namespace

PathSystem pym_merge(const Graft& g, const VertexSet& a, const VertexSet& b, const PathSystem& p,
                     const PathSystem& q) {
  PathSystem op = oriented_path_system(g, a, b, p);
  PathSystem oq = oriented_path_system(g, a, b, q);
  Net net(g, a, b);
  // mandatory arcs: first edges of p away from a, last edges of q into b
  for (const Path& path : op.paths) net.force(path.edges().front(), net.s_star());
  for (const Path& path : oq.paths) {
    const auto& vs = path.vertices();
    net.force(path.edges().back(), net.mapv(vs[vs.size() - 2]));
  }
  Balancer(g, net).run();
  PathSystem merged = net.extract();
  EdgeSet ra = merged.side_edges(a);
  EdgeSet rb = merged.side_edges(b);
  EdgeSet pa = op.side_edges(a);
  EdgeSet qb = oq.side_edges(b);
  if (!std::includes(ra.begin(), ra.end(), pa.begin(), pa.end()) ||
      !std::includes(rb.begin(), rb.end(), qb.begin(), qb.end()))
    fail(ErrorKind::InternalInvariant, "merged system lost a mandatory end edge");
  return merged;
}

Path splice(const Graft& g, const Path& p, Pivot pivot, const Path& q) {
  std::vector<EdgeId> edges;
  if (pivot.kind == Pivot::Kind::vertex) {
    VertexId v = pivot.id;
    if (!p.contains_vertex(v))
      fail(ErrorKind::PivotMissing, "vertex " + std::to_string(v) + " not on first path");
    if (!q.contains_vertex(v))
      fail(ErrorKind::PivotMissing, "vertex " + std::to_string(v) + " not on second path");
    if (p.first() != v) {
      Path head = p.prefix_to_vertex(v);
      edges = head.edges();
    }
    if (q.last() != v) {
      Path tail = q.suffix_from_vertex(v);
      edges.insert(edges.end(), tail.edges().begin(), tail.edges().end());
    }
  } else {
    EdgeId e = pivot.id;
    if (!p.contains_edge(e))
      fail(ErrorKind::PivotMissing, "edge " + std::to_string(e) + " not on first path");
    if (!q.contains_edge(e))
      fail(ErrorKind::PivotMissing, "edge " + std::to_string(e) + " not on second path");
    Path head = p.prefix_through_edge(e);
    edges = head.edges();
    const auto& qes = q.edges();
    size_t idx = 0;
    while (qes[idx] != e) ++idx;
    for (size_t i = idx + 1; i < qes.size(); ++i) edges.push_back(qes[i]);
  }
  if (edges.empty()) fail(ErrorKind::NotAPath, "splice produced an empty path");
  return Path::from_edges(g, edges, p.first());  // throws NotAPath on repetition
}

}  // namespace tpack
