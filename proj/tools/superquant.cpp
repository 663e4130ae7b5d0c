#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superquant/config.hpp"
#include "superquant/errors.hpp"
#include "superquant/expr.hpp"
#include "superquant/hadic.hpp"
#include "superquant/liebialg.hpp"
#include "superquant/lusztig_form.hpp"
#include "superquant/matmodels.hpp"
#include "superquant/serre.hpp"

using json = nlohmann::ordered_json;
using namespace superquant;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitParseError = 2;

struct FamilyOpts {
  std::string family;
  int m = 0, n = 0;
  std::string alpha;
  std::string input;
};

void add_family_options(CLI::App* cmd, FamilyOpts& opts) {
  cmd->add_option("--family", opts.family, "built-in family: sl, b0n, d21");
  cmd->add_option("--m", opts.m, "first block size");
  cmd->add_option("--n", opts.n, "second block size");
  cmd->add_option("--alpha", opts.alpha, "parameter for d21, e.g. -3/2");
  cmd->add_option("--input", opts.input, "config file with a custom datum");
}

CartanDatum resolve_datum(const FamilyOpts& opts) {
  if (!opts.input.empty()) return cartan_from_config(parse_config_file(opts.input));
  if (opts.family == "sl") return builtin_sl(opts.m, opts.n);
  if (opts.family == "b0n") return builtin_b0n(opts.n);
  if (opts.family == "d21") return builtin_d21(rat_from_string(opts.alpha.empty() ? "1" : opts.alpha));
  throw ParseError("unknown family '" + opts.family + "' (expected sl, b0n, or d21)");
}

void emit(const json& report, bool as_json, const std::string& out_path,
          const std::string& text_fallback) {
  std::string body = as_json ? report.dump(2) + "\n" : text_fallback;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write to '" + out_path + "'");
    out << body;
  }
  std::cout << body;
}

json datum_json(const CartanDatum& d) {
  json j;
  j["rank"] = d.rank;
  json rows = json::array();
  for (const auto& row : d.a) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_to_string(x));
    rows.push_back(r);
  }
  j["matrix"] = rows;
  if (d.tau) j["tau"] = *d.tau;
  json dd = json::array();
  for (const auto& x : d.d) dd.push_back(rat_to_string(x));
  j["d"] = dd;
  j["type"] = d.type_tag;
  if (d.alpha) j["alpha"] = rat_to_string(*d.alpha);
  j["provenance"] = d.provenance;
  return j;
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w(rank);
  std::istringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= rank) throw ParseError("weight has more than rank components");
    try {
      w.nu[i++] = std::stoi(part);
    } catch (const std::exception&) {
      throw ParseError("bad weight component '" + part + "'");
    }
  }
  if (i != rank) throw ParseError("weight must have exactly rank components");
  for (int x : w.nu)
    if (x < 0) throw ParseError("weight components must be >= 0");
  return w;
}

int run_cartan_show(const FamilyOpts& opts, bool as_json, const std::string& out_path) {
  CartanDatum d = resolve_datum(opts);
  ValidationReport v = validate(d);
  json j;
  j["command"] = "cartan show";
  j["datum"] = datum_json(d);
  j["valid"] = v.ok();
  json fails = json::array();
  for (const auto& f : v.failures) fails.push_back(f.message);
  j["failures"] = fails;
  std::ostringstream text;
  text << "type: " << d.type_tag << "\n" << cartan_to_config(d);
  text << "valid: " << (v.ok() ? "yes" : "no") << "\n";
  for (const auto& f : v.failures) text << "  failure: " << f.message << "\n";
  emit(j, as_json, out_path, text.str());
  return v.ok() ? kExitPass : kExitMathFailure;
}

int run_gram(const FamilyOpts& opts, const std::string& weight_text, int cap, bool as_json,
             bool verbose, const std::string& out_path) {
  CartanDatum d = resolve_datum(opts);
  ValidationReport v = validate(d);
  if (!v.ok()) throw ParseError("invalid datum: " + v.failures.front().message);
  Weight w = parse_weight(weight_text, d.rank);
  FreeAlgebra alg(d);
  LusztigForm form(alg, cap);
  GramBlock block = form.gram(w);
  json j;
  j["command"] = "gram";
  j["weight"] = w.to_string();
  json basis = json::array();
  for (const auto& b : block.basis) basis.push_back(b.to_string());
  j["basis"] = basis;
  j["rank"] = block.rank;
  j["corank"] = block.corank();
  if (verbose) {
    json entries = json::array();
    for (const auto& row : block.matrix) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      entries.push_back(r);
    }
    j["entries"] = entries;
  }
  std::ostringstream text;
  text << "weight " << w.to_string() << ": dim " << block.basis.size() << ", rank " << block.rank
       << ", corank " << block.corank() << "\n";
  emit(j, as_json, out_path, text.str());
  return kExitPass;
}

int run_check_serre(const FamilyOpts& opts, int cap, bool as_json, bool verbose,
                    const std::string& out_path) {
  CartanDatum d = resolve_datum(opts);
  ValidationReport v = validate(d);
  if (!v.ok()) throw ParseError("invalid datum: " + v.failures.front().message);
  VerificationReport rep = verify_kernel(d, cap);
  json j;
  j["command"] = "check serre";
  j["datum"] = datum_json(d);
  j["cap"] = cap;
  json rels = json::array();
  std::ostringstream text;
  for (const auto& k : rep.kernels) {
    json r;
    r["label"] = k.label;
    r["weight"] = k.weight.to_string();
    r["in_kernel"] = k.in_kernel;
    r["seconds"] = k.seconds;
    rels.push_back(r);
    text << k.label << " " << k.weight.to_string() << ": "
         << (k.in_kernel ? "in kernel" : "NOT in kernel") << "\n";
  }
  j["relations"] = rels;
  json slices = json::array();
  for (const auto& s : rep.slices) {
    json r;
    r["weight"] = s.weight.to_string();
    r["basis_dim"] = s.basis_dim;
    r["ideal_slice_dim"] = s.slice_dim;
    r["gram_corank"] = s.corank;
    r["match"] = s.match;
    slices.push_back(r);
    if (verbose || !s.match)
      text << "weight " << s.weight.to_string() << ": slice " << s.slice_dim << ", corank "
           << s.corank << (s.match ? "" : "  MISMATCH") << "\n";
  }
  j["slices"] = slices;
  j["pass"] = rep.ok();
  text << (rep.ok() ? "pass" : "FAIL") << "\n";
  emit(j, as_json, out_path, text.str());
  return rep.ok() ? kExitPass : kExitMathFailure;
}

json report_failures(const AxiomReport& rep) {
  json j = json::array();
  for (const auto& f : rep.failures) j.push_back(f);
  return j;
}

int run_double(const std::string& input, bool as_json, const std::string& out_path) {
  LieSBA g = liesba_from_config(parse_config_file(input));
  json j;
  j["command"] = "double";
  j["input"] = g.name;
  AxiomReport lie = check_lie(g);
  AxiomReport bi = check_bialgebra(g);
  j["lie_ok"] = lie.ok();
  j["lie_failures"] = report_failures(lie);
  j["bialgebra_ok"] = bi.ok();
  j["bialgebra_failures"] = report_failures(bi);
  bool pass = lie.ok() && bi.ok();
  std::ostringstream text;
  text << "input " << g.name << ": lie " << (lie.ok() ? "ok" : "FAIL") << ", bialgebra "
       << (bi.ok() ? "ok" : "FAIL") << "\n";
  if (pass) {
    DoubleData dd = make_double(g);
    AxiomReport cas = casimir_checks(dd);
    bool cyb_zero = tensor_is_zero(cyb(dd.r, dd.g));
    j["double_dim"] = dd.g.dim;
    j["casimir_ok"] = cas.ok();
    j["casimir_failures"] = report_failures(cas);
    j["cyb_zero"] = cyb_zero;
    pass = cas.ok() && cyb_zero;
    text << "double dim " << dd.g.dim << ": casimir " << (cas.ok() ? "ok" : "FAIL") << ", cyb "
         << (cyb_zero ? "0" : "NONZERO") << "\n";
  }
  j["pass"] = pass;
  emit(j, as_json, out_path, text.str());
  return pass ? kExitPass : kExitMathFailure;
}

json hadic_json(const HadicReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["J_matches_lemma"] = rep.j_matches_lemma;
  j["R_matches"] = rep.r_matches;
  j["cobracket_matches"] = rep.cobracket_matches;
  j["intertwiner_matches"] = rep.intertwiner_matches;
  j["gauge_ok"] = rep.gauge_ok;
  json fails = json::array();
  for (const auto& f : rep.failures) fails.push_back(f);
  j["failures"] = fails;
  return j;
}

int run_hadic(const std::string& input, const std::string& seed, int cap, bool as_json,
              const std::string& out_path) {
  std::vector<LieSBA> targets;
  if (!input.empty()) {
    targets.push_back(liesba_from_config(parse_config_file(input)));
  } else if (seed == "all" || seed.empty()) {
    targets = seed_bialgebras();
  } else {
    for (LieSBA& g : seed_bialgebras())
      if (g.name == seed) targets.push_back(std::move(g));
    if (targets.empty()) throw ParseError("unknown seed '" + seed + "'");
  }
  json reports = json::array();
  std::ostringstream text;
  bool pass = true;
  for (const LieSBA& g : targets) {
    DoubleData dd = make_double(g);
    HadicContext ctx(dd, cap);
    HadicReport rep = ctx.verify(g.name);
    pass = pass && rep.ok();
    reports.push_back(hadic_json(rep));
    text << g.name << ": " << (rep.ok() ? "pass" : "FAIL") << "\n";
    for (const auto& f : rep.failures) text << "  " << f << "\n";
  }
  json j;
  j["command"] = "hadic";
  j["cap"] = cap;
  j["reports"] = reports;
  j["pass"] = pass;
  emit(j, as_json, out_path, text.str());
  return pass ? kExitPass : kExitMathFailure;
}

int run_oracle_cartan(int m, int n, bool as_json, const std::string& out_path) {
  CartanDatum d = cartan_from_model(m, n);
  json j;
  j["command"] = "oracle cartan";
  j["datum"] = datum_json(d);
  emit(j, as_json, out_path, cartan_to_config(d));
  return kExitPass;
}

int run_suite(bool as_json, const std::string& out_path) {
  json results = json::array();
  std::ostringstream text;
  bool pass = true;
  auto record = [&](const std::string& label, bool ok) {
    json r;
    r["label"] = label;
    r["pass"] = ok;
    results.push_back(r);
    text << (ok ? "pass" : "FAIL") << "  " << label << "\n";
    pass = pass && ok;
  };

  for (auto [m, n, cap] : {std::tuple<int, int, int>{2, 1, 4}, {2, 2, 4}, {3, 2, 4}}) {
    CartanDatum d = builtin_sl(m, n);
    VerificationReport rep = verify_kernel(d, cap);
    record("serre kernel sl(" + std::to_string(m) + "|" + std::to_string(n) + ") cap " +
               std::to_string(cap),
           rep.ok());
  }
  record("serre kernel B(0,2) cap 4", verify_kernel(builtin_b0n(2), 4).ok());

  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
    record("matrix model sl(" + std::to_string(m) + "|" + std::to_string(n) + ")",
           check_defining_relations(m, n).ok());
    record("manin triple gl(" + std::to_string(m) + "|" + std::to_string(n) + ")",
           manin_check(m, n).ok());
  }

  for (const LieSBA& g : seed_bialgebras()) {
    bool ok = true;
    try {
      DoubleData dd = make_double(g);
      ok = casimir_checks(dd).ok() && tensor_is_zero(cyb(dd.r, dd.g)) &&
           HadicContext(dd).verify(g.name).ok();
    } catch (const std::exception&) {
      ok = false;
    }
    record("double + quantization " + g.name, ok);
  }

  for (const QTSeed& s : seed_quasitriangular()) {
    bool ok = true;
    try {
      UpsilonReport rep = upsilon_check(s.g, s.r);
      ok = rep.ok();
    } catch (const std::exception&) {
      ok = false;
    }
    record("upsilon " + s.g.name, ok);
  }

  json j;
  j["command"] = "suite";
  j["results"] = results;
  j["pass"] = pass;
  text << (pass ? "all checks passed" : "FAILURES present") << "\n";
  emit(j, as_json, out_path, text.str());
  return pass ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification tools for quantized enveloping superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json/--verbose/--out appear after subcommand args
  bool as_json = false;
  bool verbose = false;
  std::string out_path;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_flag("--verbose", verbose, "include matrices and pairing tables");
  app.add_option("--out", out_path, "also write the report to a file");

  FamilyOpts cartan_opts, gram_opts, serre_opts;
  std::string gram_weight;
  int gram_cap = 8, serre_cap = 4, hadic_cap = 4;
  std::string double_input, hadic_input, hadic_seed;
  int oracle_m = 2, oracle_n = 1;

  CLI::App* cartan_cmd = app.add_subcommand("cartan", "Cartan datum utilities");
  cartan_cmd->require_subcommand(1);
  CLI::App* cartan_show = cartan_cmd->add_subcommand("show", "print and validate a datum");
  add_family_options(cartan_show, cartan_opts);

  CLI::App* gram_cmd = app.add_subcommand("gram", "Gram block of the bilinear form");
  add_family_options(gram_cmd, gram_opts);
  gram_cmd->add_option("--weight", gram_weight, "comma-separated weight, e.g. 1,2,1")->required();
  gram_cmd->add_option("--cap", gram_cap, "degree cap");

  CLI::App* check_cmd = app.add_subcommand("check", "verification drivers");
  check_cmd->require_subcommand(1);
  CLI::App* check_serre = check_cmd->add_subcommand("serre", "kernel membership and slice dims");
  add_family_options(check_serre, serre_opts);
  check_serre->add_option("--cap", serre_cap, "total-degree cap");

  CLI::App* double_cmd = app.add_subcommand("double", "Drinfeld double of a superbialgebra");
  double_cmd->add_option("--input", double_input, "LieSBA config file")->required();

  CLI::App* hadic_cmd = app.add_subcommand("hadic", "order-h^2 quantization checks");
  hadic_cmd->add_option("--input", hadic_input, "LieSBA config file");
  hadic_cmd->add_option("--seed", hadic_seed, "built-in seed name or 'all'");
  hadic_cmd->add_option("--cap", hadic_cap, "PBW degree cap");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent derivations");
  oracle_cmd->require_subcommand(1);
  CLI::App* oracle_cartan = oracle_cmd->add_subcommand("cartan", "datum from the matrix model");
  oracle_cartan->add_option("--m", oracle_m, "first block size")->required();
  oracle_cartan->add_option("--n", oracle_n, "second block size")->required();

  CLI::App* suite_cmd = app.add_subcommand("suite", "run the built-in verification corpus");
  bool suite_all = false;
  suite_cmd->add_flag("--all", suite_all, "run everything (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitParseError;
  }

  try {
    if (cartan_show->parsed()) return run_cartan_show(cartan_opts, as_json, out_path);
    if (gram_cmd->parsed()) return run_gram(gram_opts, gram_weight, gram_cap, as_json, verbose, out_path);
    if (check_serre->parsed()) return run_check_serre(serre_opts, serre_cap, as_json, verbose, out_path);
    if (double_cmd->parsed()) return run_double(double_input, as_json, out_path);
    if (hadic_cmd->parsed()) return run_hadic(hadic_input, hadic_seed, hadic_cap, as_json, out_path);
    if (oracle_cartan->parsed()) return run_oracle_cartan(oracle_m, oracle_n, as_json, out_path);
    if (suite_cmd->parsed()) return run_suite(as_json, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const UnsupportedShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitParseError;
}
