#include "tpack/toolkit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "tpack/menger.hpp"

namespace tpack {

std::vector<Path> enumerate_tpaths(const Graft& g, int cap) {
  std::vector<Path> out;
  std::vector<char> used(g.edge_universe(), 0);
  std::vector<EdgeId> cur;
  VertexSet visited;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId at) {
    for (EdgeId e : g.incident(at)) {
      if (used[e]) continue;
      VertexId next = g.other_end(e, at);
      if (visited.count(next)) continue;
      cur.push_back(e);
      if (g.is_terminal(next)) {
        if (next > start) {
          if (static_cast<int>(out.size()) >= cap)
            fail(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " T-paths");
          out.push_back(Path::from_edges(g, cur, start));
        }
      } else {
        used[e] = 1;
        visited.insert(next);
        dfs(start, next);
        visited.erase(next);
        used[e] = 0;
      }
      cur.pop_back();
    }
  };
  for (VertexId t : g.terminals()) {
    visited = {t};
    dfs(t, t);
  }
  return out;
}

std::pair<int, PathSystem> brute_force_max_packing(const Graft& g, int cap) {
  std::vector<Path> all = enumerate_tpaths(g, cap);
  std::vector<EdgeSet> esets;
  esets.reserve(all.size());
  for (const Path& p : all) esets.push_back(p.edge_set());
  std::vector<int> best, cur;
  std::function<void(size_t, const EdgeSet&)> walk = [&](size_t idx, const EdgeSet& used) {
    if (cur.size() > best.size()) best = cur;
    if (idx >= all.size()) return;
    if (cur.size() + (all.size() - idx) <= best.size()) return;  // bound
    if (set_intersect(esets[idx], used).empty()) {
      cur.push_back(static_cast<int>(idx));
      walk(idx + 1, set_union(used, esets[idx]));
      cur.pop_back();
    }
    walk(idx + 1, used);
  };
  walk(0, {});
  PathSystem sys;
  sys.source_side = g.terminals();
  sys.sink_side = g.terminals();
  for (int i : best) sys.paths.push_back(all[i]);
  return {static_cast<int>(best.size()), sys};
}

HalfInteger minimax_value(const Graft& g) {
  long long sum = 0;
  for (VertexId t : g.terminals()) {
    VertexSet rest = g.terminals();
    rest.erase(t);
    sum += local_edge_connectivity(g, VertexSet{t}, rest);
  }
  HalfInteger value{sum};
  if (is_inner_eulerian(g) && !value.integral())
    fail(ErrorKind::InternalInvariant, "odd connectivity sum on an inner-Eulerian graft");
  return value;
}

namespace {

// Deterministic partial Fisher-Yates: the first k entries of 0..n-1 after k
// seeded swaps.
std::vector<int> sample_distinct(XorShift64Star& rng, int n, int k, int base) {
  std::vector<int> arr(n);
  std::iota(arr.begin(), arr.end(), base);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(n - i)));
    std::swap(arr[i], arr[j]);
  }
  arr.resize(k);
  return arr;
}

}  // namespace

Graft generate_inner_eulerian(const GenParams& params) {
  const int v = params.vertex_count;
  const int k = params.terminal_count;
  if (k < 2) fail(ErrorKind::Infeasible, "need at least two terminals");
  if (k > v) fail(ErrorKind::Infeasible, "more terminals than vertices");
  if (params.cycle_count < 0 || params.tpath_count < 0 || params.max_piece_length < 1)
    fail(ErrorKind::Infeasible, "negative piece counts");
  if (params.cycle_count > 0 && v < 2) fail(ErrorKind::Infeasible, "no room for a cycle");
  XorShift64Star rng(params.seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int c = 0; c < params.cycle_count; ++c) {
    int longest = std::min(std::max(params.max_piece_length, 2), v);
    int len = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(longest - 1)));
    std::vector<int> ring = sample_distinct(rng, v, len, 0);
    for (int i = 0; i < len; ++i) edges.emplace_back(ring[i], ring[(i + 1) % len]);
  }
  for (int p = 0; p < params.tpath_count; ++p) {
    int ta = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
    int tb = static_cast<int>(rng.below(static_cast<uint64_t>(k - 1)));
    if (tb >= ta) ++tb;
    int max_interior = std::min(params.max_piece_length - 1, v - k);
    int m = static_cast<int>(rng.below(static_cast<uint64_t>(max_interior + 1)));
    std::vector<int> inner = sample_distinct(rng, v - k, m, k);
    VertexId prev = ta;
    for (int w : inner) {
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, tb);
  }
  std::vector<VertexId> terminals(k);
  std::iota(terminals.begin(), terminals.end(), 0);
  return Graft::build(v, terminals, edges);
}

const char* to_string(VerifyReport::Violation v) {
  switch (v) {
    case VerifyReport::Violation::NotTPath: return "NotTPath";
    case VerifyReport::Violation::NotDisjoint: return "NotDisjoint";
    case VerifyReport::Violation::CutNotSeparating: return "CutNotSeparating";
    case VerifyReport::Violation::CutNotOrthogonal: return "CutNotOrthogonal";
    case VerifyReport::Violation::ExtraCutEdge: return "ExtraCutEdge";
    case VerifyReport::Violation::CoverageGap: return "CoverageGap";
  }
  return "Unknown";
}

namespace {

// Walks the raw edge list from `a`; true iff it is a T-path from a to b.
bool raw_path_ok(const Graft& g, const RawCertificate::RawPath& rp, std::string& why) {
  if (rp.edges.empty()) {
    why = "empty path";
    return false;
  }
  if (!g.has_vertex(rp.a) || !g.has_vertex(rp.b) || !g.is_terminal(rp.a) ||
      !g.is_terminal(rp.b) || rp.a == rp.b) {
    why = "endpoints are not two distinct terminals";
    return false;
  }
  VertexId cur = rp.a;
  VertexSet seen{cur};
  EdgeSet eseen;
  for (EdgeId e : rp.edges) {
    if (!g.has_edge(e) || !g.incident_to(e, cur)) {
      why = "edge " + std::to_string(e) + " does not continue the walk";
      return false;
    }
    if (!eseen.insert(e).second) {
      why = "edge " + std::to_string(e) + " repeats";
      return false;
    }
    cur = g.other_end(e, cur);
    if (!seen.insert(cur).second) {
      why = "vertex " + std::to_string(cur) + " repeats";
      return false;
    }
    if (g.is_terminal(cur) && cur != rp.b) {
      why = "terminal " + std::to_string(cur) + " inside the path";
      return false;
    }
  }
  if (cur != rp.b) {
    why = "path ends at " + std::to_string(cur) + " not " + std::to_string(rp.b);
    return false;
  }
  return true;
}

// Is the cut exactly delta(X) for some X with X cap T = {t}? Components of
// g minus the cut must admit a two-sided assignment where every cut edge
// crosses, t's component is inside and other terminals' components outside.
bool boundary_region_exists(const Graft& g, VertexId t, const EdgeSet& cut) {
  std::map<VertexId, int> comp;
  int ncomp = 0;
  for (VertexId v : g.vertices()) {
    if (comp.count(v)) continue;
    std::deque<VertexId> queue{v};
    comp[v] = ncomp;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(u)) {
        if (cut.count(e)) continue;
        VertexId w = g.other_end(e, u);
        if (!comp.count(w)) {
          comp[w] = ncomp;
          queue.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> must_differ(ncomp);
  for (EdgeId e : cut) {
    auto [u, v] = g.endpoints(e);
    int cu = comp.at(u), cv = comp.at(v);
    if (cu == cv) return false;  // cannot cross any region boundary
    must_differ[cu].push_back(cv);
    must_differ[cv].push_back(cu);
  }
  std::vector<int> color(ncomp, -1);
  color[comp.at(t)] = 0;
  for (VertexId other : g.terminals())
    if (other != t) {
      int c = comp.at(other);
      if (color[c] == 0) return false;
      color[c] = 1;
    }
  for (int start = 0; start < ncomp; ++start) {
    if (color[start] == -1) continue;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int cu = queue.front();
      queue.pop_front();
      for (int cv : must_differ[cu]) {
        if (color[cv] == -1) {
          color[cv] = 1 - color[cu];
          queue.push_back(cv);
        } else if (color[cv] == color[cu]) {
          return false;
        }
      }
    }
  }
  // components not forced by an anchor just need internal consistency
  for (int start = 0; start < ncomp; ++start) {
    if (color[start] != -1 || must_differ[start].empty()) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int cu = queue.front();
      queue.pop_front();
      for (int cv : must_differ[cu]) {
        if (color[cv] == -1) {
          color[cv] = 1 - color[cu];
          queue.push_back(cv);
        } else if (color[cv] == color[cu]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_certificate(const Graft& g, const RawCertificate& cert) {
  VerifyReport report;
  std::vector<char> path_ok(cert.paths.size(), 0);
  for (size_t i = 0; i < cert.paths.size(); ++i) {
    std::string why;
    if (raw_path_ok(g, cert.paths[i], why)) {
      path_ok[i] = 1;
    } else {
      report.add(VerifyReport::Violation::NotTPath, "path " + std::to_string(i) + ": " + why);
    }
  }
  std::map<EdgeId, int> usage;
  for (const auto& rp : cert.paths)
    for (EdgeId e : rp.edges) ++usage[e];
  for (const auto& [e, n] : usage)
    if (n > 1)
      report.add(VerifyReport::Violation::NotDisjoint,
                 "edge " + std::to_string(e) + " on " + std::to_string(n) + " paths");

  for (VertexId t : g.terminals()) {
    auto cit = cert.cuts.find(t);
    if (cit == cert.cuts.end()) {
      report.add(VerifyReport::Violation::CutNotSeparating,
                 "no cut declared for terminal " + std::to_string(t));
      continue;
    }
    const EdgeSet& cut = cit->second;
    bool edges_exist = true;
    for (EdgeId e : cut) {
      if (!g.has_edge(e)) {
        report.add(VerifyReport::Violation::CutNotSeparating,
                   "cut of " + std::to_string(t) + " uses missing edge " + std::to_string(e));
        edges_exist = false;
      }
    }
    if (!edges_exist) continue;
    // separation
    VertexSet reach{t};
    std::deque<VertexId> queue{t};
    bool separated = true;
    while (!queue.empty() && separated) {
      VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(u)) {
        if (cut.count(e)) continue;
        VertexId w = g.other_end(e, u);
        if (reach.insert(w).second) {
          if (g.is_terminal(w)) {
            report.add(VerifyReport::Violation::CutNotSeparating,
                       "terminal " + std::to_string(w) + " reachable from " + std::to_string(t));
            separated = false;
            break;
          }
          queue.push_back(w);
        }
      }
    }
    if (!separated) continue;
    if (!boundary_region_exists(g, t, cut)) {
      report.add(VerifyReport::Violation::CutNotSeparating,
                 "cut of " + std::to_string(t) + " is not the exact boundary of a region");
      continue;
    }
    // orthogonality against the paths ending at t
    EdgeSet matched;
    for (size_t i = 0; i < cert.paths.size(); ++i) {
      const auto& rp = cert.paths[i];
      if (rp.a != t && rp.b != t) continue;
      int hits = 0;
      for (EdgeId e : rp.edges)
        if (cut.count(e)) {
          ++hits;
          matched.insert(e);
        }
      if (hits == 0)
        report.add(VerifyReport::Violation::CoverageGap,
                   "cut of " + std::to_string(t) + " misses path " + std::to_string(i));
      if (hits > 1)
        report.add(VerifyReport::Violation::CutNotOrthogonal,
                   "cut of " + std::to_string(t) + " meets path " + std::to_string(i) + " " +
                       std::to_string(hits) + " times");
    }
    for (EdgeId e : cut)
      if (!matched.count(e))
        report.add(VerifyReport::Violation::ExtraCutEdge,
                   "cut edge " + std::to_string(e) + " lies on no path ending at " +
                       std::to_string(t));
  }
  return report;
}

VerifyReport verify_certificate(const Graft& g, const Certificate& cert) {
  RawCertificate raw;
  for (const Path& p : cert.paths.paths)
    raw.paths.push_back({p.first(), p.last(), p.edges()});
  for (const auto& [t, cut] : cert.cuts) raw.cuts[t] = cut.edges;
  return verify_certificate(g, raw);
}

}  // namespace tpack
