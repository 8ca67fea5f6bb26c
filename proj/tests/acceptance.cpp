// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "tpack/cli.hpp"
#include "tpack/io.hpp"

using namespace tpack;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s  [%s]\n", number, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Seeded schedule: at most 10 vertices and 18 edges per instance.
Graft bench_instance(int i) {
  static const int combos[][3] = {
      {0, 2, 4}, {1, 2, 3}, {0, 3, 3}, {2, 2, 3}, {1, 3, 3}, {0, 4, 4},
      {2, 1, 4}, {1, 4, 3}, {2, 3, 3}, {0, 3, 4}, {1, 2, 4}, {2, 2, 4},
  };
  const int* combo = combos[i % 12];
  GenParams params;
  params.seed = static_cast<uint64_t>(1000 + i);
  params.vertex_count = 4 + i % 7;
  params.terminal_count = 2 + i % 3;
  params.cycle_count = combo[0];
  params.tpath_count = combo[1];
  params.max_piece_length = combo[2];
  return generate_inner_eulerian(params);
}

struct ExtractionStats {
  bool pass = false;
  std::string detail;
};

ExtractionStats criterion_minimax() {
  auto start = Clock::now();
  int linkable = 0, mismatches = 0, invariant_violations = 0;
  for (int i = 0; i < 300; ++i) {
    Graft g = bench_instance(i);
    if (g.vertices().size() > 10 || g.edge_count() > 18) {
      ++mismatches;
      continue;
    }
    if (!linkability_condition(g)) continue;
    ++linkable;
    // drive the extraction loop by hand so every remainder can be checked
    Graft cur = g;
    std::vector<Path> packed;
    for (;;) {
      EdgeSet open = cur.terminal_boundary();
      if (open.empty()) break;
      Path p = extract_tpath(cur, *open.begin());
      cur = cur.without(p.edge_set());
      packed.push_back(p);
      if (!is_inner_eulerian(cur) || !linkability_condition(cur)) ++invariant_violations;
    }
    long long two_packed = 2 * static_cast<long long>(packed.size());
    if (two_packed != minimax_value(g).twice) ++mismatches;
    if (static_cast<int>(packed.size()) != brute_force_max_packing(g).first) ++mismatches;
  }
  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << linkable << " linkable of 300, " << mismatches << " mismatches, " << elapsed
         << " s";
  report(1, "packing size equals minimax and oracle", mismatches == 0 && linkable >= 100 &&
                                                          elapsed < 60.0, detail.str());
  ExtractionStats stats;
  stats.pass = invariant_violations == 0;
  std::ostringstream d3;
  d3 << invariant_violations << " violations across all driver runs";
  stats.detail = d3.str();
  return stats;
}

void criterion_certificates() {
  auto start = Clock::now();
  int bad = 0;
  for (int i = 0; i < 300; ++i) {
    Graft g = bench_instance(i);
    Certificate cert = packing_certificate(g);
    if (!verify_certificate(g, cert).ok) ++bad;
  }
  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "300 instances, " << bad << " rejected, " << elapsed << " s";
  report(2, "certificates verify on every instance", bad == 0 && elapsed < 60.0, detail.str());
}

void criterion_two_deletions() {
  int tested = 0, violations = 0;
  for (int i = 0; tested < 100 && i < 3000; ++i) {
    GenParams params;
    params.seed = static_cast<uint64_t>(7000 + i);
    params.vertex_count = 4 + i % 5;
    params.terminal_count = 2 + i % 2;
    params.cycle_count = i % 2;
    params.tpath_count = 1 + i % 2;
    params.max_piece_length = 3;
    Graft g = generate_inner_eulerian(params);
    Graft h = terminal_contraction(g, g.terminals()).contracted;
    if (h.edge_count() > 12) continue;
    ++tested;
    for (EdgeId f : h.edge_ids())
      for (EdgeId e2 : h.edge_ids()) {
        if (e2 < f) continue;
        for (const auto& [t, ok] : linked_after_deletions(h, f, e2))
          if (!ok) ++violations, (void)t;
      }
  }
  std::ostringstream detail;
  detail << tested << " contracted instances, " << violations << " unlinked";
  report(4, "single and pair deletions keep contracted terminals linked",
         tested == 100 && violations == 0, detail.str());
}

void criterion_tight_cuts() {
  int cases = 0, violations = 0;
  for (uint64_t seed = 1; cases < 50 && seed <= 4000; ++seed) {
    GenParams params{seed, static_cast<int>(4 + seed % 5), static_cast<int>(2 + seed % 2),
                     static_cast<int>(seed % 2), static_cast<int>(1 + seed % 2), 3};
    Graft g = generate_inner_eulerian(params);
    if (g.edge_count() > 10) continue;
    for (VertexId t : g.terminals()) {
      VertexSet a{t}, b = g.terminals();
      b.erase(t);
      if (local_edge_connectivity(g, a, b) != static_cast<int>(g.boundary(a).size())) continue;
      auto linkages = oracles::all_linkages(g, a, b);
      if (linkages.empty()) continue;
      EdgeSet da = g.boundary(a);
      for (EdgeId e : g.edge_ids()) {
        if (da.count(e) || cases >= 50) continue;
        bool forced = true;
        for (const auto& linkage : linkages) {
          bool uses = false;
          for (const Path& p : linkage) uses = uses || p.contains_edge(e);
          if (!uses) {
            forced = false;
            break;
          }
        }
        if (!forced) continue;
        ++cases;
        Cut tight = tight_cut_through(g, a, b, e);
        if (!tight.edges.count(e)) ++violations;
        for (const auto& linkage : linkages)
          if (!oracles::orthogonal(tight.edges, linkage)) ++violations;
      }
    }
  }
  std::ostringstream detail;
  detail << cases << " forced-edge cases, " << violations << " non-orthogonal";
  report(5, "tight cuts are orthogonal to every linkage", cases == 50 && violations == 0,
         detail.str());
}

void criterion_pym() {
  XorShift64Star rng(424242);
  int pairs = 0, violations = 0;
  for (uint64_t seed = 1; pairs < 200 && seed <= 4000; ++seed) {
    GenParams params{seed, static_cast<int>(4 + seed % 6), static_cast<int>(2 + seed % 3),
                     static_cast<int>(seed % 2), static_cast<int>(1 + seed % 3), 3};
    Graft g = generate_inner_eulerian(params);
    std::vector<VertexId> ts(g.terminals().begin(), g.terminals().end());
    VertexId t = ts[rng.below(ts.size())];
    VertexSet a{t}, b = g.terminals();
    b.erase(t);
    std::vector<Path> paths = oracles::all_ab_paths(g, a, b);
    if (paths.empty() || paths.size() > 14) continue;
    auto families = oracles::all_disjoint_families(paths);
    for (int round = 0; round < 4 && pairs < 200; ++round) {
      PathSystem p{{}, a, b}, q{{}, a, b};
      for (int i : families[rng.below(families.size())]) p.paths.push_back(paths[i]);
      for (int i : families[rng.below(families.size())]) q.paths.push_back(paths[i]);
      PathSystem r = pym_merge(g, a, b, p, q);
      ++pairs;
      EdgeSet ra = r.side_edges(a), rb = r.side_edges(b);
      EdgeSet pa = p.side_edges(a), qb = q.side_edges(b);
      if (!std::includes(ra.begin(), ra.end(), pa.begin(), pa.end())) ++violations;
      if (!std::includes(rb.begin(), rb.end(), qb.begin(), qb.end())) ++violations;
    }
  }
  std::ostringstream detail;
  detail << pairs << " merged pairs, " << violations << " lost end edges";
  report(6, "merges keep both endpoint traces", pairs == 200 && violations == 0, detail.str());
}

void criterion_lattice() {
  int cuts_checked = 0, violations = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams params{seed, static_cast<int>(5 + seed % 8), static_cast<int>(2 + seed % 3),
                     static_cast<int>(seed % 2), static_cast<int>(1 + seed % 3), 3};
    Graft g = generate_inner_eulerian(params);
    if (g.vertices().size() > 12) continue;
    for (VertexId t : g.terminals()) {
      VertexSet a{t}, b = g.terminals();
      b.erase(t);
      ExtremeCuts ex = extreme_cuts(g, a, b);
      int lambda = ex.system.size();
      std::vector<VertexId> free_vertices;
      for (VertexId v : g.vertices())
        if (!a.count(v) && !b.count(v)) free_vertices.push_back(v);
      for (uint64_t mask = 0; mask < (1ull << free_vertices.size()); ++mask) {
        VertexSet x(a);
        for (size_t i = 0; i < free_vertices.size(); ++i)
          if (mask & (1ull << i)) x.insert(free_vertices[i]);
        EdgeSet cut_edges = g.boundary(x);
        if (static_cast<int>(cut_edges.size()) != lambda) continue;
        ++cuts_checked;
        Cut c{cut_edges, x};
        if (!cut_leq(g, a, b, ex.smallest, c)) ++violations;
        if (!cut_leq(g, a, b, c, ex.largest)) ++violations;
      }
    }
  }
  std::ostringstream detail;
  detail << cuts_checked << " minimum cuts enumerated, " << violations << " outside the bracket";
  report(7, "every minimum cut lies between the extreme cuts",
         cuts_checked > 0 && violations == 0, detail.str());
}

void criterion_determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tpack_acceptance";
  fs::create_directories(dir);
  fs::path gfile = dir / "instance.graft";
  auto run_once = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::pair<int, std::string>{code, out.str()};
  };
  bool ok = true;
  std::ostringstream detail;
  for (uint64_t seed : {3ull, 19ull, 77ull}) {
    std::vector<std::string> gen{"gen",        "--seed",    std::to_string(seed),
                                 "--vertices", "9",         "--terminals",
                                 "3",          "--cycles",  "1",
                                 "--tpaths",   "3",         "--max-piece",
                                 "3",          "-o",        gfile.string()};
    auto g1 = run_once(gen);
    std::ifstream in1(gfile);
    std::stringstream bytes1;
    bytes1 << in1.rdbuf();
    auto g2 = run_once(gen);
    std::ifstream in2(gfile);
    std::stringstream bytes2;
    bytes2 << in2.rdbuf();
    ok = ok && g1.first == 0 && g2.first == 0 && bytes1.str() == bytes2.str();

    auto c1 = run_once({"certify", gfile.string()});
    auto c2 = run_once({"certify", gfile.string()});
    ok = ok && c1.first == 0 && c1.first == c2.first && c1.second == c2.second;

    auto p1 = run_once({"pack", gfile.string()});
    auto p2 = run_once({"pack", gfile.string()});
    ok = ok && p1.first == p2.first && p1.second == p2.second;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  report(8, "gen, pack and certify are byte-deterministic", ok, "3 seeds, 2 runs each");
}

}  // namespace

int main() {
  ExtractionStats extraction = criterion_minimax();
  criterion_certificates();
  report(3, "every extraction remainder stays even and linkable", extraction.pass,
         extraction.detail);
  criterion_two_deletions();
  criterion_tight_cuts();
  criterion_pym();
  criterion_lattice();
  criterion_determinism();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
