#include "tpack/graft.hpp"

#include <algorithm>
#include <string>

namespace tpack {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::TooFewTerminals: return "TooFewTerminals";
    case ErrorKind::DanglingVertexRef: return "DanglingVertexRef";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::WouldCreateLoop: return "WouldCreateLoop";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotAPathSystem: return "NotAPathSystem";
    case ErrorKind::SidesOverlap: return "SidesOverlap";
    case ErrorKind::NotMinCut: return "NotMinCut";
    case ErrorKind::PreconditionEdgeAvoidable: return "PreconditionEdgeAvoidable";
    case ErrorKind::NotLinked: return "NotLinked";
    case ErrorKind::PivotMissing: return "PivotMissing";
    case ErrorKind::NotATerminal: return "NotATerminal";
    case ErrorKind::NotATerminalEdge: return "NotATerminalEdge";
    case ErrorKind::NotInnerEulerian: return "NotInnerEulerian";
    case ErrorKind::LinkabilityFails: return "LinkabilityFails";
    case ErrorKind::SourceNotLinked: return "SourceNotLinked";
    case ErrorKind::BoundaryMissing: return "BoundaryMissing";
    case ErrorKind::Collision: return "Collision";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

ContractionFamily ContractionFamily::build(const Graft& g, std::map<VertexId, VertexSet> sets) {
  ContractionFamily family;
  for (VertexId t : g.terminals()) {
    if (!sets.count(t)) sets[t] = VertexSet{t};
  }
  VertexSet seen;
  for (const auto& [t, members] : sets) {
    if (!g.is_terminal(t))
      fail(ErrorKind::InvalidFamily, "set keyed by non-terminal " + std::to_string(t));
    if (!members.count(t))
      fail(ErrorKind::InvalidFamily, "set of terminal " + std::to_string(t) + " misses it");
    for (VertexId v : members) {
      if (!g.has_vertex(v))
        fail(ErrorKind::InvalidFamily, "set member " + std::to_string(v) + " is not a vertex");
      if (g.is_terminal(v) && v != t)
        fail(ErrorKind::InvalidFamily, "set of terminal " + std::to_string(t) +
                                           " contains terminal " + std::to_string(v));
      if (!seen.insert(v).second)
        fail(ErrorKind::InvalidFamily, "vertex " + std::to_string(v) + " in two sets");
      if (v != t) family.relabel_[v] = t;
    }
  }
  for (EdgeId e : g.edge_ids()) {
    auto [u, v] = g.endpoints(e);
    if (family.relabel(u) == family.relabel(v)) family.deleted_.insert(e);
  }
  family.sets_ = std::move(sets);
  return family;
}

VertexId ContractionFamily::relabel(VertexId v) const {
  auto it = relabel_.find(v);
  return it == relabel_.end() ? v : it->second;
}

Graft Graft::build(int vertex_count, const std::vector<VertexId>& terminals,
                   const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graft g;
  if (vertex_count < 0) fail(ErrorKind::DanglingVertexRef, "negative vertex count");
  g.incidence_.resize(vertex_count);
  g.alive_.assign(vertex_count, 1);
  for (VertexId v = 0; v < vertex_count; ++v) g.vertex_set_.insert(v);
  for (VertexId t : terminals) {
    if (t < 0 || t >= vertex_count)
      fail(ErrorKind::DanglingVertexRef, "terminal " + std::to_string(t) + " out of range");
    if (!g.terminals_.insert(t).second)
      fail(ErrorKind::TooFewTerminals, "terminal " + std::to_string(t) + " declared twice");
  }
  if (g.terminals_.size() < 2)
    fail(ErrorKind::TooFewTerminals, "need at least two terminals, got " +
                                         std::to_string(g.terminals_.size()));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(ErrorKind::DanglingVertexRef, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.emplace_back(std::make_pair(u, v));
    g.incidence_[u].push_back(id);
    g.incidence_[v].push_back(id);
    ++g.edge_count_;
  }
  return g;
}

EdgeSet Graft::edge_ids() const {
  EdgeSet out;
  for (EdgeId e = 0; e < edge_universe(); ++e)
    if (edges_[e]) out.insert(e);
  return out;
}

void Graft::check_vertex(VertexId v) const {
  if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
}

void Graft::check_edge(EdgeId e) const {
  if (!has_edge(e)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
}

std::pair<VertexId, VertexId> Graft::endpoints(EdgeId e) const {
  check_edge(e);
  return *edges_[e];
}

VertexId Graft::other_end(EdgeId e, VertexId v) const {
  auto [a, b] = endpoints(e);
  if (a == v) return b;
  if (b == v) return a;
  fail(ErrorKind::NotIncident, "edge " + std::to_string(e) + " not at vertex " + std::to_string(v));
}

bool Graft::incident_to(EdgeId e, VertexId v) const {
  auto [a, b] = endpoints(e);
  return a == v || b == v;
}

const std::vector<EdgeId>& Graft::incident(VertexId v) const {
  check_vertex(v);
  return incidence_[v];
}

EdgeSet Graft::boundary(const VertexSet& x) const {
  for (VertexId v : x) check_vertex(v);
  EdgeSet out;
  for (VertexId v : x) {
    for (EdgeId e : incidence_[v]) {
      if (!x.count(other_end(e, v))) out.insert(e);
    }
  }
  return out;
}

EdgeSet Graft::terminal_boundary() const {
  EdgeSet out;
  for (VertexId t : terminals_)
    for (EdgeId e : incidence_[t]) out.insert(e);
  return out;
}

Graft Graft::restricted(const EdgeSet& keep) const {
  for (EdgeId e : keep) check_edge(e);
  Graft g = *this;
  for (EdgeId e = 0; e < edge_universe(); ++e) {
    if (g.edges_[e] && !keep.count(e)) {
      g.edges_[e].reset();
      --g.edge_count_;
    }
  }
  for (auto& list : g.incidence_) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](EdgeId e) { return !g.edges_[e].has_value(); }),
               list.end());
  }
  return g;
}

Graft Graft::without(const EdgeSet& drop) const {
  for (EdgeId e : drop) check_edge(e);
  return restricted(set_minus(edge_ids(), drop));
}

Graft Graft::contracted(const ContractionFamily& family) const {
  for (const auto& [t, members] : family.sets()) {
    if (!is_terminal(t)) fail(ErrorKind::InvalidFamily, "family terminal not in graft");
    for (VertexId v : members)
      if (!has_vertex(v)) fail(ErrorKind::InvalidFamily, "family member not in graft");
  }
  Graft g = *this;
  for (EdgeId e = 0; e < edge_universe(); ++e) {
    if (!g.edges_[e]) continue;
    auto [u, v] = *g.edges_[e];
    VertexId cu = family.relabel(u);
    VertexId cv = family.relabel(v);
    if (cu == cv) {
      g.edges_[e].reset();
      --g.edge_count_;
    } else {
      g.edges_[e] = std::make_pair(cu, cv);
    }
  }
  // retire absorbed vertices, rebuild incidence
  for (auto& list : g.incidence_) list.clear();
  for (VertexId v = 0; v < vertex_universe(); ++v) {
    if (g.alive_[v] && family.absorbs(v)) {
      g.alive_[v] = 0;
      g.vertex_set_.erase(v);
    }
  }
  for (EdgeId e = 0; e < edge_universe(); ++e) {
    if (!g.edges_[e]) continue;
    auto [u, v] = *g.edges_[e];
    g.incidence_[u].push_back(e);
    g.incidence_[v].push_back(e);
  }
  return g;
}

std::pair<Graft, EdgeId> Graft::split_off(VertexId s, EdgeId e0, EdgeId f0) const {
  check_vertex(s);
  if (!is_terminal(s)) fail(ErrorKind::NotATerminal, "vertex " + std::to_string(s));
  check_edge(e0);
  check_edge(f0);
  if (e0 == f0) fail(ErrorKind::NotIncident, "split-off needs two distinct edges");
  if (!incident_to(e0, s)) fail(ErrorKind::NotIncident, "edge " + std::to_string(e0) +
                                                            " not at " + std::to_string(s));
  VertexId x = other_end(e0, s);
  if (is_terminal(x))
    fail(ErrorKind::NotIncident, "shared endpoint " + std::to_string(x) + " is a terminal");
  if (!incident_to(f0, x))
    fail(ErrorKind::NotIncident, "edges " + std::to_string(e0) + ", " + std::to_string(f0) +
                                     " do not share a vertex");
  VertexId y = other_end(f0, x);
  if (y == s) fail(ErrorKind::WouldCreateLoop, "split-off would join " + std::to_string(s) +
                                                   " to itself");
  Graft g = *this;
  g.edges_[e0].reset();
  g.edges_[f0].reset();
  g.edge_count_ -= 2;
  EdgeId h0 = static_cast<EdgeId>(g.edges_.size());
  g.edges_.emplace_back(std::make_pair(s, y));
  ++g.edge_count_;
  for (auto& list : g.incidence_) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](EdgeId e) { return e == e0 || e == f0; }),
               list.end());
  }
  g.incidence_[s].push_back(h0);
  g.incidence_[y].push_back(h0);
  return {g, h0};
}

bool Graft::operator==(const Graft& other) const {
  if (vertex_set_ != other.vertex_set_ || terminals_ != other.terminals_) return false;
  if (edge_universe() != other.edge_universe()) return false;
  for (EdgeId e = 0; e < edge_universe(); ++e) {
    if (edges_[e].has_value() != other.edges_[e].has_value()) return false;
    if (!edges_[e]) continue;
    auto [a, b] = *edges_[e];
    auto [c, d] = *other.edges_[e];
    if (std::minmax(a, b) != std::minmax(c, d)) return false;
  }
  return true;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace tpack
