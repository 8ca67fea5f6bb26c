#pragma once

#include <iosfwd>
#include <string>

#include "tpack/toolkit.hpp"

namespace tpack {

/// A graft plus the vertex names it was declared with. Names are interned
/// in first-appearance order; edge ids follow file order from 0.
struct NamedGraft {
  Graft graft;
  std::vector<std::string> names;            // by vertex id
  std::map<std::string, VertexId> by_name;
};

/// Line format: '#' comments, 't <name>...' terminal declarations,
/// 'e <name> <name>' edges. At least one t-line must precede the first
/// e-line; two terminals are required; loops and duplicate terminal
/// declarations are rejected with line numbers.
NamedGraft parse_graft(std::istream& in);

void write_graft(std::ostream& out, const NamedGraft& g);

/// Synthesizes names for a bare graft: terminals t0, t1, ...; the other
/// vertices u<id>.
NamedGraft with_default_names(const Graft& g);

/// Line format: 'path <t0> <t1> : <edge ids in traversal order>' and
/// 'cut <t> : <edge ids ascending>'.
struct SolutionFile {
  struct PathLine {
    std::string a, b;
    std::vector<EdgeId> edges;
  };
  struct CutLine {
    std::string t;
    std::vector<EdgeId> edges;
  };
  std::vector<PathLine> paths;
  std::vector<CutLine> cuts;
};

SolutionFile parse_solution(std::istream& in);

/// Resolves names against the graft; unknown names or edge ids are parse
/// errors, structural defects are left to the verifier.
RawCertificate resolve_solution(const SolutionFile& sol, const NamedGraft& g);

void write_paths(std::ostream& out, const NamedGraft& g, const PathSystem& sys);
void write_certificate(std::ostream& out, const NamedGraft& g, const Certificate& cert);

}  // namespace tpack
