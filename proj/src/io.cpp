#include "tpack/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tpack {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

NamedGraft parse_graft(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, VertexId> by_name;
  std::set<std::string> declared_terminals;
  std::vector<VertexId> terminals;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&](const std::string& name) {
    auto it = by_name.find(name);
    if (it != by_name.end()) return it->second;
    VertexId id = static_cast<VertexId>(names.size());
    names.push_back(name);
    by_name.emplace(name, id);
    return id;
  };
  std::string line;
  int line_no = 0;
  bool saw_terminal_line = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "t") {
      if (toks.size() < 2) parse_fail(line_no, "terminal line names no vertex");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!declared_terminals.insert(toks[i]).second)
          parse_fail(line_no, "terminal '" + toks[i] + "' declared twice");
        terminals.push_back(intern(toks[i]));
      }
      saw_terminal_line = true;
    } else if (toks[0] == "e") {
      if (!saw_terminal_line) parse_fail(line_no, "edge before the first terminal line");
      if (toks.size() != 3) parse_fail(line_no, "edge line needs exactly two vertex names");
      if (toks[1] == toks[2]) parse_fail(line_no, "loop edge at '" + toks[1] + "'");
      edges.emplace_back(intern(toks[1]), intern(toks[2]));
    } else {
      parse_fail(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (terminals.size() < 2) fail(ErrorKind::ParseError, "fewer than two terminals declared");
  NamedGraft out;
  out.graft = Graft::build(static_cast<int>(names.size()), terminals, edges);
  out.names = std::move(names);
  out.by_name = std::move(by_name);
  return out;
}

void write_graft(std::ostream& out, const NamedGraft& g) {
  out << "t";
  for (VertexId t : g.graft.terminals()) out << " " << g.names[t];
  out << "\n";
  for (EdgeId e = 0; e < g.graft.edge_universe(); ++e) {
    if (!g.graft.has_edge(e)) continue;
    auto [u, v] = g.graft.endpoints(e);
    out << "e " << g.names[u] << " " << g.names[v] << "\n";
  }
}

NamedGraft with_default_names(const Graft& g) {
  NamedGraft out;
  out.graft = g;
  out.names.resize(g.vertex_universe());
  int ti = 0;
  for (VertexId t : g.terminals()) out.names[t] = "t" + std::to_string(ti++);
  for (VertexId v = 0; v < g.vertex_universe(); ++v) {
    if (out.names[v].empty()) out.names[v] = "u" + std::to_string(v);
    out.by_name[out.names[v]] = v;
  }
  return out;
}

SolutionFile parse_solution(std::istream& in) {
  SolutionFile out;
  std::string line;
  int line_no = 0;
  auto parse_ids = [&](const std::vector<std::string>& toks, size_t from) {
    std::vector<EdgeId> ids;
    for (size_t i = from; i < toks.size(); ++i) {
      try {
        size_t used = 0;
        int id = std::stoi(toks[i], &used);
        if (used != toks[i].size() || id < 0) throw std::invalid_argument("");
        ids.push_back(id);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad edge id '" + toks[i] + "'");
      }
    }
    return ids;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "path") {
      if (toks.size() < 4 || toks[3] != ":")
        parse_fail(line_no, "expected 'path <t0> <t1> : <edge ids>'");
      out.paths.push_back({toks[1], toks[2], parse_ids(toks, 4)});
    } else if (toks[0] == "cut") {
      if (toks.size() < 3 || toks[2] != ":")
        parse_fail(line_no, "expected 'cut <t> : <edge ids>'");
      out.cuts.push_back({toks[1], parse_ids(toks, 3)});
    } else {
      parse_fail(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  return out;
}

RawCertificate resolve_solution(const SolutionFile& sol, const NamedGraft& g) {
  auto vertex_of = [&](const std::string& name) {
    auto it = g.by_name.find(name);
    if (it == g.by_name.end()) fail(ErrorKind::ParseError, "unknown vertex '" + name + "'");
    return it->second;
  };
  RawCertificate raw;
  for (const auto& p : sol.paths) {
    for (EdgeId e : p.edges)
      if (!g.graft.has_edge(e))
        fail(ErrorKind::ParseError, "unknown edge id " + std::to_string(e));
    raw.paths.push_back({vertex_of(p.a), vertex_of(p.b), p.edges});
  }
  for (const auto& c : sol.cuts) {
    VertexId t = vertex_of(c.t);
    if (!g.graft.is_terminal(t))
      fail(ErrorKind::ParseError, "cut vertex '" + c.t + "' is not a terminal");
    for (EdgeId e : c.edges)
      if (!g.graft.has_edge(e))
        fail(ErrorKind::ParseError, "unknown edge id " + std::to_string(e));
    raw.cuts[t].insert(c.edges.begin(), c.edges.end());
  }
  return raw;
}

namespace {

void write_path_line(std::ostream& out, const NamedGraft& g, const Path& p) {
  Path canon = p.first() <= p.last() ? p : p.reversed();
  out << "path " << g.names[canon.first()] << " " << g.names[canon.last()] << " :";
  for (EdgeId e : canon.edges()) out << " " << e;
  out << "\n";
}

}  // namespace

void write_paths(std::ostream& out, const NamedGraft& g, const PathSystem& sys) {
  for (const Path& p : sys.paths) write_path_line(out, g, p);
}

void write_certificate(std::ostream& out, const NamedGraft& g, const Certificate& cert) {
  write_paths(out, g, cert.paths);
  for (const auto& [t, cut] : cert.cuts) {
    out << "cut " << g.names[t] << " :";
    for (EdgeId e : cut.edges) out << " " << e;
    out << "\n";
  }
}

}  // namespace tpack
