#pragma once

#include <cstdint>
#include <string>

#include "tpack/packing.hpp"

namespace tpack {

/// Marsaglia xorshift64* sequence. state' = state ^= (state >> 12),
/// ^= (state << 25), ^= (state >> 27); output = state * 0x2545F4914F6CDD1D.
/// A zero seed is replaced by 0x9E3779B97F4A7C15. Ranges are taken by
/// modulo. The sequence is part of the file-format contract: equal seeds
/// give byte-identical instances.
struct XorShift64Star {
  uint64_t state;

  explicit XorShift64Star(uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  }

  uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }
};

struct GenParams {
  uint64_t seed = 1;
  int vertex_count = 0;
  int terminal_count = 2;
  int cycle_count = 0;
  int tpath_count = 0;
  int max_piece_length = 3;
};

/// An integer or half-integer, stored doubled.
struct HalfInteger {
  long long twice = 0;

  bool integral() const { return twice % 2 == 0; }
  std::string str() const {
    if (integral()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  bool operator==(const HalfInteger&) const = default;
};

/// All T-paths of g (each once, from its smaller terminal endpoint), by
/// depth-first search in ascending edge-id order.
std::vector<Path> enumerate_tpaths(const Graft& g, int cap = 50000);

/// Exhaustive branch-and-bound over the T-path list with edge-conflict
/// pruning. Returns a maximum edge-disjoint sub-family.
std::pair<int, PathSystem> brute_force_max_packing(const Graft& g, int cap = 50000);

/// Half the sum over terminals of the edge-disjoint path count toward the
/// other terminals; integral on inner-Eulerian grafts.
HalfInteger minimax_value(const Graft& g);

/// A seeded inner-Eulerian instance: the edge-disjoint union of random
/// simple cycles and random T-paths over the vertex pool. Terminals are the
/// vertices 0..terminal_count-1.
Graft generate_inner_eulerian(const GenParams& params);

/// Certificate input as plain ids, so malformed solutions can be verified.
struct RawCertificate {
  struct RawPath {
    VertexId a = 0;
    VertexId b = 0;
    std::vector<EdgeId> edges;
  };
  std::vector<RawPath> paths;
  std::map<VertexId, EdgeSet> cuts;
};

struct VerifyReport {
  enum class Violation {
    NotTPath,
    NotDisjoint,
    CutNotSeparating,
    CutNotOrthogonal,
    ExtraCutEdge,
    CoverageGap,
  };
  bool ok = true;
  std::vector<std::pair<Violation, std::string>> violations;

  void add(Violation kind, std::string detail) {
    ok = false;
    violations.emplace_back(kind, std::move(detail));
  }
};

const char* to_string(VerifyReport::Violation v);

/// Checks the certificate contract: T-paths, pairwise edge-disjointness,
/// each cut the boundary of a region holding only its terminal and
/// separating it, and each cut exactly one edge from each path ending at
/// its terminal and nothing else. Purely graph-based, independent of the
/// solver.
VerifyReport verify_certificate(const Graft& g, const RawCertificate& cert);
VerifyReport verify_certificate(const Graft& g, const Certificate& cert);

}  // namespace tpack
