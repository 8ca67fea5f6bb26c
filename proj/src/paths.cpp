#include "tpack/paths.hpp"

#include <algorithm>
#include <string>

namespace tpack {

Path Path::from_edges(const Graft& g, const std::vector<EdgeId>& edges, VertexId start) {
  if (edges.empty()) fail(ErrorKind::NotAPath, "empty edge sequence");
  if (!g.has_vertex(start)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(start));
  Path p;
  p.vertices_.push_back(start);
  VertexId cur = start;
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) fail(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
    if (!g.incident_to(e, cur))
      fail(ErrorKind::NotAPath, "edge " + std::to_string(e) + " does not continue at vertex " +
                                    std::to_string(cur));
    cur = g.other_end(e, cur);
    p.vertices_.push_back(cur);
    p.edges_.push_back(e);
  }
  VertexSet seen;
  for (VertexId v : p.vertices_)
    if (!seen.insert(v).second)
      fail(ErrorKind::NotAPath, "vertex " + std::to_string(v) + " repeats");
  EdgeSet eseen;
  for (EdgeId e : p.edges_)
    if (!eseen.insert(e).second) fail(ErrorKind::NotAPath, "edge " + std::to_string(e) + " repeats");
  return p;
}

bool Path::contains_edge(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool Path::contains_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

Path Path::reversed() const {
  Path p = *this;
  std::reverse(p.edges_.begin(), p.edges_.end());
  std::reverse(p.vertices_.begin(), p.vertices_.end());
  return p;
}

Path Path::prefix_to_vertex(VertexId v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) fail(ErrorKind::PivotMissing, "vertex " + std::to_string(v));
  auto n = static_cast<size_t>(it - vertices_.begin());
  if (n == 0) fail(ErrorKind::NotAPath, "empty prefix");
  Path p;
  p.vertices_.assign(vertices_.begin(), vertices_.begin() + n + 1);
  p.edges_.assign(edges_.begin(), edges_.begin() + n);
  return p;
}

Path Path::prefix_through_edge(EdgeId e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) fail(ErrorKind::PivotMissing, "edge " + std::to_string(e));
  auto n = static_cast<size_t>(it - edges_.begin()) + 1;
  Path p;
  p.vertices_.assign(vertices_.begin(), vertices_.begin() + n + 1);
  p.edges_.assign(edges_.begin(), edges_.begin() + n);
  return p;
}

Path Path::suffix_from_vertex(VertexId v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) fail(ErrorKind::PivotMissing, "vertex " + std::to_string(v));
  auto n = static_cast<size_t>(it - vertices_.begin());
  if (n + 1 == vertices_.size()) fail(ErrorKind::NotAPath, "empty suffix");
  Path p;
  p.vertices_.assign(vertices_.begin() + n, vertices_.end());
  p.edges_.assign(edges_.begin() + n, edges_.end());
  return p;
}

EdgeSet PathSystem::edge_union() const {
  EdgeSet out;
  for (const Path& p : paths) out.insert(p.edges().begin(), p.edges().end());
  return out;
}

EdgeSet PathSystem::side_edges(const VertexSet& side) const {
  EdgeSet out;
  for (const Path& p : paths) {
    if (side.count(p.first())) out.insert(p.edges().front());
    if (side.count(p.last())) out.insert(p.edges().back());
  }
  return out;
}

bool is_tpath(const Graft& g, const Path& p) {
  if (!g.is_terminal(p.first()) || !g.is_terminal(p.last())) return false;
  if (p.first() == p.last()) return false;
  const auto& vs = p.vertices();
  for (size_t i = 1; i + 1 < vs.size(); ++i)
    if (g.is_terminal(vs[i])) return false;
  for (EdgeId e : p.edges())
    if (!g.has_edge(e)) return false;
  return true;
}

PathSystem oriented_path_system(const Graft& g, const VertexSet& a, const VertexSet& b,
                                const PathSystem& sys) {
  PathSystem out;
  out.source_side = a;
  out.sink_side = b;
  EdgeSet used;
  for (const Path& raw : sys.paths) {
    for (EdgeId e : raw.edges())
      if (!g.has_edge(e))
        fail(ErrorKind::NotAPathSystem, "path uses missing edge " + std::to_string(e));
    Path p = Path::from_edges(g, raw.edges(), raw.first());  // revalidate against g
    if (a.count(p.last()) && b.count(p.first())) p = p.reversed();
    if (!a.count(p.first()) || !b.count(p.last()))
      fail(ErrorKind::NotAPathSystem, "path endpoints not on opposite sides");
    const auto& vs = p.vertices();
    for (size_t i = 1; i + 1 < vs.size(); ++i)
      if (a.count(vs[i]) || b.count(vs[i]))
        fail(ErrorKind::NotAPathSystem,
             "internal vertex " + std::to_string(vs[i]) + " lies on a side");
    for (EdgeId e : p.edges())
      if (!used.insert(e).second)
        fail(ErrorKind::NotAPathSystem, "edge " + std::to_string(e) + " used twice");
    out.paths.push_back(std::move(p));
  }
  return out;
}

}  // namespace tpack
