#include "tpack/euler.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tpack {

std::optional<VertexId> odd_inner_vertex(const Graft& g) {
  for (VertexId v : g.vertices())
    if (!g.is_terminal(v) && g.degree(v) % 2 != 0) return v;
  return std::nullopt;
}

bool is_inner_eulerian(const Graft& g) { return !odd_inner_vertex(g).has_value(); }

namespace {

// Grows a walk one edge at a time and excises a loop as soon as the walk
// revisits one of its own vertices, so the kept walk stays simple.
struct WalkBuilder {
  std::vector<VertexId> vs;
  std::vector<EdgeId> es;
  std::map<VertexId, size_t> pos;

  explicit WalkBuilder(VertexId start) {
    vs.push_back(start);
    pos[start] = 0;
  }

  VertexId tip() const { return vs.back(); }

  void step(EdgeId e, VertexId head, std::vector<PartitionPiece>& cycles) {
    auto it = pos.find(head);
    if (it != pos.end()) {
      size_t keep = it->second;
      PartitionPiece loop;
      loop.kind = PartitionPiece::Kind::cycle;
      loop.edges.assign(es.begin() + keep, es.end());
      loop.edges.push_back(e);
      loop.vertices.assign(vs.begin() + keep, vs.end());
      loop.vertices.push_back(head);
      cycles.push_back(std::move(loop));
      for (size_t i = keep + 1; i < vs.size(); ++i) pos.erase(vs[i]);
      vs.resize(keep + 1);
      es.resize(keep);
    } else {
      es.push_back(e);
      vs.push_back(head);
      pos[head] = vs.size() - 1;
    }
  }
};

EdgeId lowest_unused(const Graft& g, VertexId v, const std::vector<char>& used) {
  for (EdgeId e : g.incident(v))
    if (!used[e]) return e;
  return -1;
}

PartitionPiece make_piece(PartitionPiece::Kind kind, std::vector<EdgeId> es,
                          std::vector<VertexId> vs) {
  PartitionPiece p;
  p.kind = kind;
  p.edges = std::move(es);
  p.vertices = std::move(vs);
  return p;
}

// Replays an edge walk from `start`, excising interior loops; returns the
// simple core as a t_path piece.
PartitionPiece replay_as_tpath(const Graft& g, const std::vector<EdgeId>& walk, VertexId start,
                               std::vector<PartitionPiece>& cycles) {
  WalkBuilder b(start);
  VertexId cur = start;
  for (EdgeId e : walk) {
    cur = g.other_end(e, cur);
    b.step(e, cur, cycles);
  }
  return make_piece(PartitionPiece::Kind::t_path, b.es, b.vs);
}

bool is_terminal_cycle(const Graft& g, const PartitionPiece& p) {
  return p.kind == PartitionPiece::Kind::cycle && g.is_terminal(p.vertices.front());
}

// Splits a cycle through x into its two arcs (both oriented away from the
// cycle's base vertex).
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> cycle_arcs_at(const PartitionPiece& c,
                                                                  VertexId x) {
  size_t i = 0;
  while (c.vertices[i] != x) ++i;
  std::vector<EdgeId> first(c.edges.begin(), c.edges.begin() + i);
  std::vector<EdgeId> second(c.edges.begin() + i, c.edges.end());
  return {first, second};
}

std::optional<VertexId> shared_vertex(const PartitionPiece& a, const PartitionPiece& b) {
  VertexSet inb(b.vertices.begin(), b.vertices.end());
  std::optional<VertexId> best;
  for (VertexId v : a.vertices)
    if (inb.count(v) && (!best || v < *best)) best = v;
  return best;
}

std::vector<EdgeId> reversed_edges(std::vector<EdgeId> es) {
  std::reverse(es.begin(), es.end());
  return es;
}

std::vector<EdgeId> concat(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<PartitionPiece> cycle_tpath_partition(const Graft& g) {
  if (auto odd = odd_inner_vertex(g))
    fail(ErrorKind::NotInnerEulerian, "vertex " + std::to_string(*odd) + " has odd degree");
  std::vector<PartitionPiece> pieces;
  std::vector<char> used(g.edge_universe(), 1);
  for (EdgeId e : g.edge_ids()) used[e] = 0;

  // terminal-terminal edges are single-edge T-paths
  for (EdgeId e : g.edge_ids()) {
    auto [u, v] = g.endpoints(e);
    if (g.is_terminal(u) && g.is_terminal(v)) {
      used[e] = 1;
      pieces.push_back(make_piece(PartitionPiece::Kind::t_path, {e},
                                  {std::min(u, v), std::max(u, v)}));
    }
  }

  // segments seeded at terminal edges, cut at the first terminal arrival
  for (;;) {
    EdgeId seed = -1;
    VertexId t0 = -1;
    for (EdgeId e = 0; e < g.edge_universe() && seed == -1; ++e) {
      if (!g.has_edge(e) || used[e]) continue;
      auto [u, v] = g.endpoints(e);
      if (g.is_terminal(u)) {
        seed = e;
        t0 = u;
      } else if (g.is_terminal(v)) {
        seed = e;
        t0 = v;
      }
    }
    if (seed == -1) break;
    WalkBuilder walk(t0);
    used[seed] = 1;
    VertexId cur = g.other_end(seed, t0);
    walk.step(seed, cur, pieces);
    while (!g.is_terminal(cur)) {
      EdgeId e = lowest_unused(g, cur, used);
      if (e == -1)
        fail(ErrorKind::InternalInvariant,
             "walk stuck at even vertex " + std::to_string(cur));
      used[e] = 1;
      VertexId head = g.other_end(e, cur);
      if (g.is_terminal(head)) {
        walk.es.push_back(e);
        walk.vs.push_back(head);
        cur = head;
      } else {
        walk.step(e, head, pieces);
        cur = walk.tip();
      }
    }
    pieces.push_back(make_piece(cur == t0 ? PartitionPiece::Kind::cycle
                                          : PartitionPiece::Kind::t_path,
                                walk.es, walk.vs));
  }

  // leftover edges avoid the terminals and have even degree everywhere
  for (EdgeId e0 = 0; e0 < g.edge_universe(); ++e0) {
    if (!g.has_edge(e0) || used[e0]) continue;
    VertexId start = std::min(g.endpoints(e0).first, g.endpoints(e0).second);
    WalkBuilder walk(start);
    VertexId cur = start;
    for (;;) {
      EdgeId e = lowest_unused(g, cur, used);
      if (e == -1) break;
      used[e] = 1;
      cur = g.other_end(e, cur);
      walk.step(e, cur, pieces);
      cur = walk.tip();
    }
    if (!walk.es.empty())
      fail(ErrorKind::InternalInvariant, "open walk left over in an even graph");
  }

  // re-pair segments that closed on their own terminal with a neighbouring
  // piece; each exchange turns them into two T-paths
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < pieces.size() && !changed; ++i) {
      if (!is_terminal_cycle(g, pieces[i])) continue;
      VertexId t = pieces[i].vertices.front();
      for (size_t j = 0; j < pieces.size() && !changed; ++j) {
        if (j == i) continue;
        const PartitionPiece& other = pieces[j];
        bool other_cycle = is_terminal_cycle(g, other);
        bool other_tpath = other.kind == PartitionPiece::Kind::t_path;
        if (other_cycle && other.vertices.front() == t) continue;
        if (other_tpath &&
            (other.vertices.front() == t || other.vertices.back() == t))
          continue;
        if (!other_cycle && !other_tpath) continue;
        auto x = shared_vertex(pieces[i], other);
        if (!x) continue;
        auto [alpha, beta] = cycle_arcs_at(pieces[i], *x);  // t..x and x..t
        std::vector<PartitionPiece> extra;
        PartitionPiece n1, n2;
        if (other_cycle) {
          auto [gamma, delta] = cycle_arcs_at(other, *x);  // s..x and x..s
          n1 = replay_as_tpath(g, concat(alpha, delta), t, extra);
          n2 = replay_as_tpath(g, concat(reversed_edges(beta), reversed_edges(gamma)), t, extra);
        } else {
          VertexId s = other.vertices.front();
          size_t k = 0;
          while (other.vertices[k] != *x) ++k;
          std::vector<EdgeId> gamma(other.edges.begin(), other.edges.begin() + k);  // s..x
          std::vector<EdgeId> rho(other.edges.begin() + k, other.edges.end());      // x..u
          n1 = replay_as_tpath(g, concat(gamma, reversed_edges(alpha)), s, extra);
          n2 = replay_as_tpath(g, concat(reversed_edges(beta), rho), t, extra);
        }
        std::vector<PartitionPiece> next;
        for (size_t k2 = 0; k2 < pieces.size(); ++k2)
          if (k2 != i && k2 != j) next.push_back(std::move(pieces[k2]));
        next.push_back(std::move(n1));
        next.push_back(std::move(n2));
        for (auto& c : extra) next.push_back(std::move(c));
        pieces = std::move(next);
        changed = true;
      }
    }
  }
  return pieces;
}

bool valid_partition(const Graft& g, const std::vector<PartitionPiece>& pieces) {
  EdgeSet covered;
  for (const PartitionPiece& p : pieces) {
    if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return false;
    VertexId cur = p.vertices.front();
    for (size_t i = 0; i < p.edges.size(); ++i) {
      if (!g.has_edge(p.edges[i]) || !g.incident_to(p.edges[i], cur)) return false;
      cur = g.other_end(p.edges[i], cur);
      if (cur != p.vertices[i + 1]) return false;
    }
    for (EdgeId e : p.edges)
      if (!covered.insert(e).second) return false;
    if (p.kind == PartitionPiece::Kind::cycle) {
      if (p.vertices.front() != p.vertices.back() || p.edges.size() < 2) return false;
      VertexSet seen(p.vertices.begin(), p.vertices.end());
      if (seen.size() != p.edges.size()) return false;  // closed and simple
      int terminals = 0;
      for (VertexId v : seen) terminals += g.is_terminal(v) ? 1 : 0;
      if (terminals > 1) return false;
    } else {
      VertexSet seen(p.vertices.begin(), p.vertices.end());
      if (seen.size() != p.vertices.size()) return false;
      if (!g.is_terminal(p.vertices.front()) || !g.is_terminal(p.vertices.back())) return false;
      if (p.vertices.front() == p.vertices.back()) return false;
      for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (g.is_terminal(p.vertices[i])) return false;
    }
  }
  return covered == g.edge_ids();
}

}  // namespace tpack
