#include "tpack/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tpack/io.hpp"
#include "tpack/linkage.hpp"

namespace tpack::cli {

namespace {

NamedGraft load_graft(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + file + "'");
  return parse_graft(in);
}

int cmd_check(const std::string& file, std::ostream& out) {
  NamedGraft g = load_graft(file);
  auto odd = odd_inner_vertex(g.graft);
  out << "inner_eulerian " << (odd ? "false" : "true") << "\n";
  if (odd) out << "odd_vertex " << g.names[*odd] << "\n";
  bool all = true;
  for (VertexId t : g.graft.terminals()) {
    bool linked = is_linked(g.graft, t).linked;
    all = all && linked;
    out << "linked " << g.names[t] << " " << (linked ? "true" : "false") << "\n";
  }
  out << "linkability " << (all ? "true" : "false") << "\n";
  return 0;
}

int cmd_minimax(const std::string& file, std::ostream& out) {
  NamedGraft g = load_graft(file);
  out << minimax_value(g.graft).str() << "\n";
  return 0;
}

void check_parity_named(const NamedGraft& g) {
  if (auto odd = odd_inner_vertex(g.graft))
    fail(ErrorKind::NotInnerEulerian, "vertex '" + g.names[*odd] + "' has odd degree");
}

int cmd_pack(const std::string& file, std::ostream& out) {
  NamedGraft g = load_graft(file);
  check_parity_named(g);
  for (VertexId t : g.graft.terminals())
    if (!is_linked(g.graft, t).linked)
      fail(ErrorKind::LinkabilityFails, "terminal '" + g.names[t] + "' is not linked");
  write_paths(out, g, perfect_linkage(g.graft));
  return 0;
}

int cmd_certify(const std::string& file, std::ostream& out) {
  NamedGraft g = load_graft(file);
  check_parity_named(g);
  write_certificate(out, g, packing_certificate(g.graft));
  return 0;
}

int cmd_verify(const std::string& graft_file, const std::string& solution_file,
               std::ostream& out) {
  NamedGraft g = load_graft(graft_file);
  std::ifstream in(solution_file);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + solution_file + "'");
  RawCertificate raw = resolve_solution(parse_solution(in), g);
  VerifyReport report = verify_certificate(g.graft, raw);
  if (report.ok) {
    out << "ok\n";
    return 0;
  }
  for (const auto& [kind, detail] : report.violations)
    out << "violation " << to_string(kind) << " " << detail << "\n";
  return 1;
}

int cmd_oracle(const std::string& file, int cap, std::ostream& out) {
  NamedGraft g = load_graft(file);
  out << brute_force_max_packing(g.graft, cap).first << "\n";
  return 0;
}

int cmd_gen(const GenParams& params, const std::string& output, std::ostream& out) {
  Graft g = generate_inner_eulerian(params);
  NamedGraft named = with_default_names(g);
  if (output.empty()) {
    write_graft(out, named);
  } else {
    std::ofstream file(output);
    if (!file) fail(ErrorKind::IoError, "cannot open '" + output + "' for writing");
    write_graft(file, named);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"edge-disjoint T-path packing with orthogonal cut certificates"};
  app.require_subcommand(1);

  std::string file, solution, output;
  int cap = 50000;
  GenParams params;

  CLI::App* check = app.add_subcommand("check", "report parity and linkability of an instance");
  check->add_option("file", file)->required();
  CLI::App* minimax = app.add_subcommand("minimax", "print the packing optimum");
  minimax->add_option("file", file)->required();
  CLI::App* pack = app.add_subcommand("pack", "cover all terminal edges by disjoint T-paths");
  pack->add_option("file", file)->required();
  CLI::App* certify = app.add_subcommand("certify", "emit a T-path packing with one cut per terminal");
  certify->add_option("file", file)->required();
  CLI::App* verify = app.add_subcommand("verify", "check a solution file against its instance");
  verify->add_option("graft", file)->required();
  verify->add_option("solution", solution)->required();
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive maximum packing size");
  oracle->add_option("file", file)->required();
  oracle->add_option("--cap", cap, "enumeration limit");
  CLI::App* gen = app.add_subcommand("gen", "generate a seeded inner-Eulerian instance");
  gen->add_option("--seed", params.seed)->required();
  gen->add_option("--vertices", params.vertex_count)->required();
  gen->add_option("--terminals", params.terminal_count)->required();
  gen->add_option("--cycles", params.cycle_count)->required();
  gen->add_option("--tpaths", params.tpath_count)->required();
  gen->add_option("--max-piece", params.max_piece_length);
  gen->add_option("-o,--output", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);
    if (minimax->parsed()) return cmd_minimax(file, out);
    if (pack->parsed()) return cmd_pack(file, out);
    if (certify->parsed()) return cmd_certify(file, out);
    if (verify->parsed()) return cmd_verify(file, solution, out);
    if (oracle->parsed()) return cmd_oracle(file, cap, out);
    if (gen->parsed()) return cmd_gen(params, output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::IoError:
        return 2;
      default:
        return 1;
    }
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tpack::cli
