/* cli.cpp
 *
 * Subcommands: system, resolve, adjoint, cc, cohomology, janet, duality,
 * verify. Every run prints exactly one JSON document to the output stream
 * (byte-stable for fixed flags and seeds) and optionally mirrors it to
 * --out FILE; tables and summaries go to the error stream.
 */
#include "pdcc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdcc/duality.hpp"
#include "pdcc/json_io.hpp"
#include "pdcc/resolution.hpp"
#include "pdcc/spencer.hpp"
#include "pdcc/systems.hpp"
#include "pdcc/verify.hpp"

namespace pdcc {
namespace {

using nlohmann::ordered_json;

struct InputFlags {
  std::string system;
  std::string in_path;
  int dim = 0;
  std::string metric = "euclidean";
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  auto* sys = cmd->add_option("--system", f.system,
                              "builtin system: killing, conformal-killing, "
                              "example-3-9, example-3-13, "
                              "example-3-13-involutive, example-4-15, "
                              "gradient, triple-cc-3-14");
  auto* in = cmd->add_option("--in", f.in_path, "operator matrix JSON file");
  cmd->add_option("--dim", f.dim, "space dimension for killing/conformal/gradient");
  cmd->add_option("--metric", f.metric, "flat metric signature")
      ->check(CLI::IsMember({"euclidean", "minkowski"}));
  sys->excludes(in);
}

OpMatrix load_input(const InputFlags& f) {
  if (!f.in_path.empty()) return load_opmatrix(f.in_path);
  if (f.system.empty())
    throw CLI::RequiredError("one of --system or --in");
  SystemDescriptor desc{system_name_from_string(f.system), std::nullopt, f.dim};
  if (desc.name == SystemName::killing || desc.name == SystemName::conformal_killing) {
    if (f.dim < 2) throw CLI::ValidationError("--dim", "needs --dim >= 2");
    desc.metric = f.metric == "minkowski" ? minkowski_metric(f.dim)
                                          : euclidean_metric(f.dim);
  }
  return builtin_system(desc);
}

void emit(const ordered_json& doc, const std::string& out_path, std::ostream& out) {
  std::string text = doc.dump() + "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
    file << text;
  }
  out << text;
}

ordered_json resolution_to_json(const FreeResolution& r, bool with_certificates) {
  ordered_json j;
  j["betti"] = r.betti;
  j["orders"] = r.orders;
  j["minimized"] = r.minimized;
  j["euler_characteristic"] = euler_characteristic(r);
  j["warnings"] = r.warnings;
  auto steps = ordered_json::array();
  for (const OpMatrix& s : r.steps) steps.push_back(opmatrix_to_json(s));
  j["steps"] = steps;
  if (with_certificates) {
    auto certs = ordered_json::array();
    for (const JunctionCertificate& c : r.certificates) {
      ordered_json jc;
      jc["kernel_gens"] = opmatrix_to_json(c.kernel_gens);
      jc["in_next"] = opmatrix_to_json(c.in_next);
      jc["in_kernel"] = opmatrix_to_json(c.in_kernel);
      certs.push_back(jc);
    }
    j["certificates"] = certs;
  }
  return j;
}

ordered_json witnesses_to_json(const std::vector<ModuleElement>& ws) {
  auto arr = ordered_json::array();
  for (const ModuleElement& w : ws) arr.push_back(module_element_to_json(w));
  return arr;
}

int run_parsed(const CLI::App& app, std::ostream& out, std::ostream& err,
               InputFlags& input, std::string& out_path, bool minimize,
               int max_length, bool emit_certificates, int s, int r,
               std::uint64_t seed, std::string& suite, std::string& fixtures,
               bool skip_n5, bool sequence) {
  const CLI::App* sub = app.get_subcommands().at(0);
  const std::string name = sub->get_name();

  if (name == "system") {
    emit(opmatrix_to_json(load_input(input)), out_path, out);
    return 0;
  }
  if (name == "adjoint") {
    emit(opmatrix_to_json(adjoint(load_input(input))), out_path, out);
    return 0;
  }
  if (name == "cc") {
    emit(opmatrix_to_json(compatibility_conditions(load_input(input))), out_path, out);
    return 0;
  }
  if (name == "resolve") {
    FreeResolution res = resolve(load_input(input), minimize, max_length);
    if (emit_certificates) certify(res);
    emit(resolution_to_json(res, emit_certificates), out_path, out);
    err << "betti";
    for (int b : res.betti) err << " " << b;
    err << " | orders";
    for (int o : res.orders) err << " " << o;
    err << " | chi " << euler_characteristic(res) << "\n";
    return 0;
  }
  if (name == "cohomology") {
    OpMatrix op = load_input(input);
    SymbolSystem sys = symbol_of(op, op_order(op));
    CohomologyReport rep = cohomology(sys, s, r);
    ordered_json j;
    j["s"] = rep.s;
    j["r"] = rep.r;
    j["dim_B"] = rep.dim_B;
    j["dim_Z"] = rep.dim_Z;
    j["dim_H"] = rep.dim_H;
    emit(j, out_path, out);
    err << "dim_H = " << rep.dim_H << "\n";
    return 0;
  }
  if (name == "janet") {
    OpMatrix op = load_input(input);
    SymbolSystem sys = symbol_of(op, op_order(op));
    JanetBoard board = janet_board(sys, 12, seed);
    ordered_json j;
    j["beta"] = board.beta;
    j["alpha"] = board.alpha;
    j["involutive"] = board.involutive;
    j["attempts_used"] = board.attempts_used;
    auto change = ordered_json::array();
    for (int i = 0; i < board.coordinate_change.rows; i++) {
      auto row = ordered_json::array();
      for (int k = 0; k < board.coordinate_change.cols; k++)
        row.push_back(rational_to_json(board.coordinate_change.at(i, k)));
      change.push_back(row);
    }
    j["coordinate_change"] = change;
    auto solved = ordered_json::array();
    for (const SolvedEquation& eq : board.solved_equations) {
      ordered_json je;
      je["cls"] = eq.cls;
      je["k"] = eq.k;
      auto mu = ordered_json::array();
      for (int i = 0; i < sys.n; i++) mu.push_back(int(eq.mu[i]));
      je["mu"] = mu;
      solved.push_back(je);
    }
    j["solved_equations"] = solved;
    if (board.involutive) j["janet_sequence"] = janet_sequence(sys, board);
    emit(j, out_path, out);
    // multiplicative variables as integers, the rest as dots
    for (const SolvedEquation& eq : board.solved_equations) {
      err << "v" << (eq.k + 1) << "[";
      for (int i = 0; i < sys.n; i++) err << (i ? "," : "") << int(eq.mu[i]);
      err << "]  ";
      for (int i = 1; i <= sys.n; i++)
        if (i <= eq.cls)
          err << i << " ";
        else
          err << ". ";
      err << "\n";
    }
    err << (board.involutive ? "involutive" : "not involutive") << ", characters";
    for (int a : board.alpha) err << " " << a;
    err << "\n";
    return 0;
  }
  if (name == "duality") {
    OpMatrix op = load_input(input);
    if (sequence) {
      FreeResolution res = resolve(op, minimize, max_length);
      AdjointSequenceReport rep = adjoint_sequence(res);
      ordered_json j;
      auto steps = ordered_json::array();
      for (const OpMatrix& m : rep.steps) steps.push_back(opmatrix_to_json(m));
      j["steps"] = steps;
      j["exact"] = rep.exact;
      auto ws = ordered_json::array();
      for (const auto& junction : rep.witnesses) ws.push_back(witnesses_to_json(junction));
      j["witnesses"] = ws;
      j["all_exact"] = rep.all_exact;
      emit(j, out_path, out);
      err << (rep.all_exact ? "all junctions exact" : "inexact junction found") << "\n";
      return 0;
    }
    DualityReport rep = double_duality_test(op);
    ordered_json j;
    j["input"] = opmatrix_to_json(rep.input);
    j["adjoint_cc"] = opmatrix_to_json(rep.adjoint_cc);
    j["candidate"] = opmatrix_to_json(rep.candidate);
    j["exact"] = rep.exact;
    j["parametrization"] =
        rep.parametrization ? opmatrix_to_json(*rep.parametrization) : ordered_json(nullptr);
    j["torsion_witnesses"] = witnesses_to_json(rep.torsion_witnesses);
    emit(j, out_path, out);
    err << (rep.exact ? "parametrizable (torsion-free)" : "not parametrizable: torsion present")
        << "\n";
    return 0;
  }
  if (name == "verify") {
    VerifyOptions opt;
    opt.fixtures_dir = fixtures;
    opt.include_n5 = !skip_n5;
    opt.seed = seed;
    VerifyReport rep = run_suite(suite, opt);
    ordered_json j;
    j["suite"] = rep.suite;
    auto claims = ordered_json::array();
    for (const ClaimResult& c : rep.claims) {
      ordered_json jc;
      jc["id"] = c.id;
      jc["statement"] = c.statement;
      jc["status"] = c.status;
      jc["detail"] = c.detail;
      claims.push_back(jc);
    }
    j["claims"] = claims;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["reported"] = rep.reported;
    emit(j, out_path, out);
    for (const ClaimResult& c : rep.claims) {
      err << std::left << std::setw(9) << c.status << std::setw(42) << c.id
          << c.statement << "\n";
      if (!c.detail.empty()) err << std::setw(51) << "" << c.detail << "\n";
    }
    err << rep.passed << " passed, " << rep.failed << " failed, " << rep.reported
        << " reported\n";
    return rep.ok() ? 0 : 1;
  }
  err << "unknown subcommand\n";
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact compatibility conditions, resolutions and duality for "
               "constant-coefficient PDE operators"};
  app.require_subcommand(1);

  InputFlags input;
  std::string out_path, suite = "formulas", fixtures;
  bool minimize = false, emit_certificates = false, skip_n5 = false, sequence = false;
  int max_length = -1, s = 2, r = 0;
  std::uint64_t seed = 0;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "also write the JSON document to this file");
  };

  for (const char* name : {"system", "adjoint", "cc"}) {
    CLI::App* cmd = app.add_subcommand(
        name, name == std::string("system")
                  ? "emit an operator matrix"
                  : (name == std::string("adjoint") ? "formal adjoint of the input"
                                                    : "generating compatibility conditions"));
    add_input_flags(cmd, input);
    add_out(cmd);
  }

  CLI::App* cmd_resolve = app.add_subcommand("resolve", "free resolution by iterated syzygies");
  add_input_flags(cmd_resolve, input);
  add_out(cmd_resolve);
  cmd_resolve->add_flag("--minimize", minimize, "extract minimal generators per step");
  cmd_resolve->add_option("--max-length", max_length,
                          "stop after this many steps (default: the n+2 guard)");
  cmd_resolve->add_flag("--emit-certificates", emit_certificates,
                        "include re-checkable exactness certificates");

  CLI::App* cmd_coh = app.add_subcommand("cohomology", "Spencer delta-cohomology at one spot");
  add_input_flags(cmd_coh, input);
  add_out(cmd_coh);
  cmd_coh->add_option("--s", s, "form degree");
  cmd_coh->add_option("--r", r, "prolongation offset");

  CLI::App* cmd_janet = app.add_subcommand("janet", "Janet board and characters of the symbol");
  add_input_flags(cmd_janet, input);
  add_out(cmd_janet);
  cmd_janet->add_option("--seed", seed, "seed for delta-regularizing coordinate changes");

  CLI::App* cmd_dual = app.add_subcommand("duality", "double-duality parametrizability test");
  add_input_flags(cmd_dual, input);
  add_out(cmd_dual);
  cmd_dual->add_flag("--sequence", sequence,
                     "resolve first, then check every adjoint junction");
  cmd_dual->add_flag("--minimize", minimize, "minimize the resolution (with --sequence)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "appendix, formulas, or duality")
      ->check(CLI::IsMember({"appendix", "formulas", "duality"}));
  cmd_verify->add_option("--fixtures", fixtures, "fixtures directory override");
  cmd_verify->add_flag("--skip-n5", skip_n5, "skip the n = 5 claims");
  cmd_verify->add_option("--seed", seed, "property-suite RNG seed");
  add_out(cmd_verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return run_parsed(app, out, err, input, out_path, minimize, max_length,
                      emit_certificates, s, r, seed, suite, fixtures, skip_n5,
                      sequence);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    err << "malformed matrix file: parse error at byte " << e.byte << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pdcc
