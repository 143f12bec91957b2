#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "npc/algebra.hpp"
#include "npc/classical.hpp"
#include "npc/generate.hpp"
#include "npc/parse.hpp"
#include "npc/proof_json.hpp"
#include "npc/prover.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> carrier_points(int size) {
  std::vector<std::string> points;
  for (int t = 0; t < size; ++t) points.push_back(std::string(1, static_cast<char>('a' + t % 26)) +
                                                  (t >= 26 ? std::to_string(t / 26) : ""));
  return points;
}

int cmd_check(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  npc::LoadedProof loaded = npc::proof_from_json(text);
  npc::CheckResult result = npc::check(loaded.tree);
  if (as_json) {
    json out = {{"command", "check"},
                {"file", path},
                {"ok", result.ok},
                {"conclusion", npc::render(loaded.tree.conclusion)}};
    if (!result.ok) {
      out["path"] = result.path_string();
      out["reason"] = result.reason;
    }
    std::cout << out.dump() << "\n";
  } else if (result.ok) {
    std::cout << "ok: proof of '" << npc::render(loaded.tree.conclusion) << "' checks ("
              << loaded.tree.node_count() << " nodes)\n";
  } else {
    std::cerr << "rule violation at " << result.path_string() << ": " << result.reason << "\n";
  }
  return result.ok ? kExitOk : kExitInvalid;
}

int cmd_prove(const std::string& sequent_text, int n, long budget, const std::string& out_path,
              bool as_json) {
  npc::Sequent s = npc::parse_sequent(sequent_text, n);
  npc::ProveResult result = npc::prove(s, budget);
  switch (result.status) {
    case npc::ProveResult::Status::Proved: {
      std::string doc = npc::proof_to_json(*result.tree);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitUsage;
        }
        out << doc << "\n";
      }
      if (as_json) {
        json out = {{"command", "prove"},
                    {"status", "proved"},
                    {"sequent", npc::render(s)},
                    {"steps", result.steps},
                    {"nodes", result.tree->node_count()}};
        if (!out_path.empty()) out["out"] = out_path;
        std::cout << out.dump() << "\n";
      } else if (out_path.empty()) {
        std::cout << doc << "\n";
      } else {
        std::cout << "proved '" << npc::render(s) << "' (" << result.tree->node_count()
                  << " nodes) -> " << out_path << "\n";
      }
      return kExitOk;
    }
    case npc::ProveResult::Status::Refuted:
      if (as_json) {
        std::cout << json{{"command", "prove"},
                          {"status", "refuted"},
                          {"sequent", npc::render(s)},
                          {"witness", npc::render_env(*result.witness)}}
                         .dump()
                  << "\n";
      } else {
        std::cerr << "refuted: counterexample " << npc::render_env(*result.witness) << "\n";
      }
      return kExitInvalid;
    case npc::ProveResult::Status::OutOfBudget:
      std::cerr << "out of budget after " << result.steps << " rule instances\n";
      return kExitUsage;
  }
  return kExitUsage;
}

int cmd_eval(const std::string& formula_text, const std::string& env_text, int n, bool as_json) {
  npc::Formula f = npc::parse_formula(formula_text, n);
  npc::Environment env = npc::parse_env(env_text, n);
  int value = npc::eval(f, env);
  if (as_json) {
    std::cout << json{{"command", "eval"},
                      {"formula", npc::render(f)},
                      {"env", npc::render_env(env)},
                      {"value", value}}
                     .dump()
              << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kExitOk;
}

int cmd_valid(const std::string& sequent_text, int n, bool as_json) {
  npc::Sequent s = npc::parse_sequent(sequent_text, n);
  npc::Verdict v = npc::holds(s);
  if (as_json) {
    json out = {{"command", "valid"}, {"sequent", npc::render(s)}, {"valid", v.valid}};
    if (!v.valid) out["witness"] = npc::render_env(*v.witness);
    std::cout << out.dump() << "\n";
  } else if (v.valid) {
    std::cout << "valid\n";
  } else {
    std::cerr << "invalid: counterexample " << npc::render_env(*v.witness) << "\n";
  }
  return v.valid ? kExitOk : kExitInvalid;
}

int cmd_translate(const std::string& formula_text, const std::string& dir, bool as_json) {
  std::string input, output;
  if (dir == "pc-to-2pc") {
    npc::PCFormula p = npc::parse_pc(formula_text);
    input = npc::render_pc(p);
    output = npc::render(npc::to_2pc(p));
  } else if (dir == "2pc-to-pc") {
    npc::Formula f = npc::parse_formula(formula_text, 2);
    input = npc::render(f);
    output = npc::render_pc(npc::to_pc(f));
  } else {
    std::cerr << "--dir must be pc-to-2pc or 2pc-to-pc\n";
    return kExitUsage;
  }
  if (as_json) {
    std::cout << json{{"command", "translate"}, {"dir", dir}, {"input", input}, {"output", output}}
                     .dump()
              << "\n";
  } else {
    std::cout << output << "\n";
  }
  return kExitOk;
}

void print_check_line(const std::string& name, const std::string& instance, bool pass,
                      const std::string& witness, bool as_json) {
  if (as_json) {
    json out = {{"name", name}, {"instance", instance}, {"pass", pass}};
    if (!witness.empty()) out["witness"] = witness;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  [" << instance << "]";
    if (!witness.empty()) std::cout << "  witness: " << witness;
    std::cout << "\n";
  }
}

int cmd_algebra(const std::string& which, int n, int carrier_size, std::uint64_t seed,
                long long count, bool as_json) {
  const std::vector<std::string> points = carrier_points(carrier_size);
  bool all_pass = true;

  if (which == "identities") {
    npc::FiniteAlgebra a = npc::partition_algebra(points, n);
    npc::IdentityReport report = npc::check_identities(a, seed);
    for (const npc::IdentityCheck& c : report.checks) {
      print_check_line(c.name + (c.exhaustive ? "" : " (sampled)"), a.name, c.pass, c.witness,
                       as_json);
      all_pass = all_pass && c.pass;
    }
  } else if (which == "multideals") {
    npc::FiniteAlgebra a = npc::partition_algebra(points, n);
    std::vector<npc::Multideal> ultras = npc::ultramultideals(a);
    print_check_line("ultramultideal-count",
                     a.name + ": " + std::to_string(ultras.size()) + " of expected " +
                         std::to_string(carrier_size),
                     static_cast<int>(ultras.size()) == carrier_size, "", as_json);
    all_pass = all_pass && static_cast<int>(ultras.size()) == carrier_size;
    std::vector<npc::Multideal> all = npc::all_multideals(a);
    bool inter_ok = true;
    for (const npc::Multideal& m : all)
      if (!npc::intersection_property(a, m)) inter_ok = false;
    print_check_line("intersection-property",
                     a.name + ": " + std::to_string(all.size()) + " multideals", inter_ok, "",
                     as_json);
    all_pass = all_pass && inter_ok;
  } else if (which == "iso") {
    npc::IsoReport report = npc::iso_par_to_power(points, n);
    print_check_line("par-to-power-iso",
                     "|X|=" + std::to_string(carrier_size) + ", n=" + std::to_string(n) + ", " +
                         std::to_string(report.q_cases) + " q cases",
                     report.pass(), report.detail, as_json);
    all_pass = report.pass();
  } else if (which == "reading") {
    npc::Rng rng(seed);
    const std::vector<std::string> vars = {"X", "Y"};
    long long agreements = 0;
    std::string witness;
    for (long long t = 0; t < count; ++t) {
      npc::Sequent s = npc::random_sequent(rng, n, vars, 1, 2);
      npc::ReadingReport r = npc::sequent_partition_reading(s, carrier_size);
      if (r.agree())
        ++agreements;
      else if (witness.empty())
        witness = npc::render(s);
    }
    print_check_line("sequent-partition-reading",
                     std::to_string(agreements) + "/" + std::to_string(count) + " agree, |X|=" +
                         std::to_string(carrier_size),
                     agreements == count, witness, as_json);
    all_pass = agreements == count;
  } else {
    std::cerr << "--check must be one of identities, multideals, iso, reading\n";
    return kExitUsage;
  }
  return all_pass ? kExitOk : kExitInvalid;
}

int cmd_enumerate(int n, int var_count, int depth, int max_total, long long random_count,
                  std::uint64_t seed, long budget, bool as_json) {
  npc::AgreementStats stats;
  if (random_count > 0) {
    stats = npc::random_family_run(n, random_count, seed, budget);
  } else {
    npc::FamilyConfig config;
    config.n = n;
    config.vars.clear();
    const char* names[] = {"X", "Y", "Z", "W"};
    for (int t = 0; t < var_count && t < 4; ++t) config.vars.push_back(names[t]);
    config.depth_cap = depth;
    config.max_total = max_total;
    config.budget = budget;
    stats = npc::exhaustive_family_run(config);
  }
  if (as_json) {
    std::cout << json{{"command", "enumerate"},
                      {"total", stats.total},
                      {"proved_valid", stats.proved_valid},
                      {"refuted_invalid", stats.refuted_invalid},
                      {"disagreements", stats.disagreements},
                      {"kernel_failures", stats.kernel_failures},
                      {"witness_failures", stats.witness_failures},
                      {"cut_violations", stats.cut_violations},
                      {"out_of_budget", stats.out_of_budget},
                      {"clean", stats.clean()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "sequents checked:   " << stats.total << "\n"
              << "  proved & valid:   " << stats.proved_valid << "\n"
              << "  refuted & invalid:" << stats.refuted_invalid << "\n"
              << "  disagreements:    " << stats.disagreements << "\n"
              << "  kernel failures:  " << stats.kernel_failures << "\n"
              << "  witness failures: " << stats.witness_failures << "\n"
              << "  cut violations:   " << stats.cut_violations << "\n"
              << "  out of budget:    " << stats.out_of_budget << "\n";
    for (const std::string& f : stats.failures) std::cout << "  ! " << f << "\n";
  }
  return stats.clean() ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-dimensional propositional calculus toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // check
  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "check a proof file against the rules");
  check->add_option("file", check_path, "proof JSON file")->required();

  // prove
  std::string prove_sequent, prove_out;
  int prove_n = 2;
  long budget = npc::kDefaultBudget;
  CLI::App* prove = app.add_subcommand("prove", "decide a sequent, emitting a cut-free proof");
  prove->add_option("sequent", prove_sequent, "sequent, e.g. \"|-1 q(X, e1, e1)\"")->required();
  prove->add_option("--n", prove_n, "dimension (default 2)")->check(CLI::Range(2, 6));
  prove->add_option("--budget", budget, "rule-instance budget");
  prove->add_option("--out", prove_out, "write the proof to this file");

  // eval
  std::string eval_formula, eval_env;
  int eval_n = 2;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula in an environment");
  eval_cmd->add_option("formula", eval_formula, "formula text")->required();
  eval_cmd->add_option("--env", eval_env, "environment, e.g. \"X=2,Y=1\"");
  eval_cmd->add_option("--n", eval_n, "dimension (default 2)")->check(CLI::Range(2, 6));

  // valid
  std::string valid_sequent;
  int valid_n = 2;
  CLI::App* valid = app.add_subcommand("valid", "decide a sequent by the semantic oracle");
  valid->add_option("sequent", valid_sequent, "sequent text")->required();
  valid->add_option("--n", valid_n, "dimension (default 2)")->check(CLI::Range(2, 6));

  // translate
  std::string trans_formula, trans_dir;
  CLI::App* translate = app.add_subcommand("translate", "translate between PC and 2PC");
  translate->add_option("formula", trans_formula, "formula text")->required();
  translate->add_option("--dir", trans_dir, "pc-to-2pc or 2pc-to-pc")->required();

  // algebra
  std::string algebra_check;
  int algebra_n = 2, carrier = 2;
  std::uint64_t seed = 1;
  long long count = 1000;
  CLI::App* algebra = app.add_subcommand("algebra", "finite-algebra test-bed reports");
  algebra->add_option("--check", algebra_check, "identities | multideals | iso | reading")
      ->required();
  algebra->add_option("--n", algebra_n, "dimension (default 2)")->check(CLI::Range(2, 6));
  algebra->add_option("--carrier", carrier, "carrier size |X| (default 2)")
      ->check(CLI::Range(0, 6));
  algebra->add_option("--seed", seed, "seed for sampled checks");
  algebra->add_option("--count", count, "number of sampled instances");

  // enumerate
  int enum_n = 2, enum_vars = 2, enum_depth = 2, enum_total = 3;
  long long random_count = 0;
  std::uint64_t enum_seed = 1;
  CLI::App* enumerate = app.add_subcommand("enumerate", "prover-vs-oracle agreement harness");
  enumerate->add_option("--n", enum_n, "dimension (default 2)")->check(CLI::Range(2, 6));
  enumerate->add_option("--vars", enum_vars, "variable count (default 2)")->check(CLI::Range(1, 4));
  enumerate->add_option("--depth", enum_depth, "pool depth cap (default 2)")->check(CLI::Range(0, 3));
  enumerate->add_option("--max-total", enum_total, "max |left|+|right| (default 3)")
      ->check(CLI::Range(0, 4));
  enumerate->add_option("--random", random_count, "use this many seeded random sequents instead");
  enumerate->add_option("--seed", enum_seed, "seed for --random");
  enumerate->add_option("--budget", budget, "per-sequent rule-instance budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_path, as_json);
    if (prove->parsed()) return cmd_prove(prove_sequent, prove_n, budget, prove_out, as_json);
    if (eval_cmd->parsed()) return cmd_eval(eval_formula, eval_env, eval_n, as_json);
    if (valid->parsed()) return cmd_valid(valid_sequent, valid_n, as_json);
    if (translate->parsed()) return cmd_translate(trans_formula, trans_dir, as_json);
    if (algebra->parsed())
      return cmd_algebra(algebra_check, algebra_n, carrier, seed, count, as_json);
    if (enumerate->parsed())
      return cmd_enumerate(enum_n, enum_vars, enum_depth, enum_total, random_count, enum_seed,
                           budget, as_json);
  } catch (const npc::parse_error& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const npc::proof_format_error& e) {
    std::cerr << "proof format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const npc::explosion_guard_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const npc::unbound_variable& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
