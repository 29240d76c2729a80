// Command-line front end: exact verification suites and individual
// computations with deterministic text/JSON output.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// input error (bad parameters, malformed partition/tableau, arity cap).

#include "CLI11.hpp"
#include "json.hpp"

#include "rsf/fusion.hpp"
#include "rsf/hecke.hpp"
#include "rsf/json_io.hpp"
#include "rsf/qalgebra.hpp"
#include "rsf/schurweyl.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace rsf;

constexpr int kDefaultArityCap = 6;
constexpr int kHardArityCap = 8;  // spectral variables are packed 8 to a word

struct RawConfig {
  std::string r = "2";
  std::string s = "3";
  int n = 2;
  int m = 3;
  std::string lambda;
  std::string tableau;
  std::string method = "jm";    // jm | fusion | both
  std::string format = "text";  // text | json
  std::uint64_t seed = 1;
  bool max_m_override = false;
  bool timings = false;
};

std::optional<Params> parse_params(const RawConfig& cfg) {
  std::optional<Rational> r = parse_rational(cfg.r);
  std::optional<Rational> s = parse_rational(cfg.s);
  if (!r || !s) {
    std::cerr << "invalid rational parameter (expected forms like 2, -3, 1/2)\n";
    return std::nullopt;
  }
  if (std::optional<std::string> gate = Params::validate(*r, *s)) {
    std::cerr << *gate << "\n";
    return std::nullopt;
  }
  return Params(*r, *s);
}

bool arity_allowed(int m, bool override_flag) {
  if (m < 1) {
    std::cerr << "arity must be at least 1\n";
    return false;
  }
  if (m > kHardArityCap) {
    std::cerr << "arity " << m << " is unsupported (hard cap " << kHardArityCap << ")\n";
    return false;
  }
  if (m > kDefaultArityCap && !override_flag) {
    std::cerr << "arity " << m << " exceeds the default cap " << kDefaultArityCap
              << "; pass --max-m-override to proceed\n";
    return false;
  }
  return true;
}

json check_report_json(const CheckReport& report) {
  return json::parse(check_report_to_json_text(report));
}

void print_check_lines(const std::string& prefix, const CheckReport& report) {
  for (const CheckItem& item : report.items)
    std::cout << (item.pass ? "PASS " : "FAIL ") << prefix << item.name << "\n";
}

void emit(const json& obj) { std::cout << obj.dump(2) << "\n"; }

int cmd_relations(const RawConfig& cfg) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  if (!arity_allowed(cfg.m, cfg.max_m_override)) return 2;
  if (cfg.n < 2) {
    std::cerr << "relations needs --n at least 2\n";
    return 2;
  }

  CheckReport algebra = relations_report(cfg.n, *params);
  CheckReport braid = rmatrix_report(cfg.n, *params, cfg.seed, 5);
  CheckReport submodules = submodule_report(cfg.n, *params);
  HeckeAlgebra alg(cfg.m, *params);
  CheckReport hecke = hecke_relations_report(alg);
  bool pass =
      algebra.all_pass() && braid.all_pass() && submodules.all_pass() && hecke.all_pass();

  if (cfg.format == "json") {
    emit(json{{"command", "relations"},
              {"n", cfg.n},
              {"m", cfg.m},
              {"r", cfg.r},
              {"s", cfg.s},
              {"seed", cfg.seed},
              {"suites",
               json{{"algebra_relations", check_report_json(algebra)},
                    {"braid_matrix", check_report_json(braid)},
                    {"submodules", check_report_json(submodules)},
                    {"hecke_relations", check_report_json(hecke)}}},
              {"all_pass", pass}});
  } else {
    print_check_lines("algebra: ", algebra);
    print_check_lines("braid matrix: ", braid);
    print_check_lines("submodules: ", submodules);
    print_check_lines("hecke: ", hecke);
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_ybe(const RawConfig& cfg) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  if (cfg.n < 2) {
    std::cerr << "ybe needs --n at least 2\n";
    return 2;
  }
  CheckReport report = rmatrix_report(cfg.n, *params, cfg.seed, 5);
  bool pass = report.all_pass();
  if (cfg.format == "json") {
    emit(json{{"command", "ybe"},
              {"n", cfg.n},
              {"r", cfg.r},
              {"s", cfg.s},
              {"seed", cfg.seed},
              {"checks", check_report_json(report)},
              {"all_pass", pass}});
  } else {
    print_check_lines("", report);
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

struct ShapeInput {
  Partition lambda;
  StandardTableau tableau;
};

std::optional<ShapeInput> parse_shape(const RawConfig& cfg, bool m_given) {
  std::optional<Partition> lambda = Partition::parse(cfg.lambda);
  if (!lambda || lambda->empty()) {
    std::cerr << "expected --lambda as a nonempty partition like 2,1\n";
    return std::nullopt;
  }
  std::optional<StandardTableau> tableau = StandardTableau::parse(cfg.tableau);
  if (!tableau) {
    std::cerr << "expected --tableau as rows like \"1,2;3\"\n";
    return std::nullopt;
  }
  if (!(tableau->shape() == *lambda)) {
    std::cerr << "tableau shape does not match --lambda\n";
    return std::nullopt;
  }
  if (m_given && cfg.m != lambda->weight()) {
    std::cerr << "--m disagrees with the partition weight\n";
    return std::nullopt;
  }
  return ShapeInput{std::move(*lambda), std::move(*tableau)};
}

int cmd_idempotent(const RawConfig& cfg, bool m_given) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  std::optional<ShapeInput> shape = parse_shape(cfg, m_given);
  if (!shape) return 2;
  int m = shape->lambda.weight();
  if (!arity_allowed(m, cfg.max_m_override)) return 2;
  if (cfg.method != "jm" && cfg.method != "fusion" && cfg.method != "both") {
    std::cerr << "method must be jm, fusion, or both\n";
    return 2;
  }

  HeckeAlgebra alg(m, *params);
  std::optional<HeckeElement<Rational>> inductive, fused;
  if (cfg.method != "fusion") inductive = jm_idempotent(alg, shape->lambda, shape->tableau);
  if (cfg.method != "jm") fused = fused_idempotent(alg, shape->lambda, shape->tableau);
  bool equal = cfg.method != "both" || *inductive == *fused;
  const HeckeElement<Rational>& element = inductive ? *inductive : *fused;

  if (cfg.format == "json") {
    json obj{{"command", "idempotent"},
             {"m", m},
             {"r", cfg.r},
             {"s", cfg.s},
             {"lambda", shape->lambda.to_text()},
             {"tableau", shape->tableau.to_text()},
             {"method", cfg.method},
             {"element", json::parse(hecke_element_to_json_text(element))}};
    if (cfg.method == "both") obj["equal"] = equal;
    emit(obj);
  } else {
    const SymmetricGroup& g = alg.group();
    for (const auto& [idx, c] : element.terms())
      std::cout << g.name(idx) << ": " << to_text(c) << "\n";
    if (cfg.method == "both") std::cout << "equal: " << (equal ? "true" : "false") << "\n";
  }
  return equal ? 0 : 1;
}

int cmd_module(const RawConfig& cfg, bool m_given) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  std::optional<ShapeInput> shape = parse_shape(cfg, m_given);
  if (!shape) return 2;
  int m = shape->lambda.weight();
  if (!arity_allowed(m, cfg.max_m_override)) return 2;
  if (cfg.n < 2) {
    std::cerr << "module needs --n at least 2\n";
    return 2;
  }

  bool methods_agree = true;
  IdempotentMethod method = IdempotentMethod::Inductive;
  if (cfg.method == "fusion") {
    method = IdempotentMethod::Fused;
  } else if (cfg.method == "both") {
    HeckeAlgebra alg(m, *params);
    methods_agree = jm_idempotent(alg, shape->lambda, shape->tableau) ==
                    fused_idempotent(alg, shape->lambda, shape->tableau);
  } else if (cfg.method != "jm") {
    std::cerr << "method must be jm, fusion, or both\n";
    return 2;
  }

  ModuleReport report = module_of(shape->lambda, shape->tableau, cfg.n, *params, method);
  bool pass = report.flags.all_pass() && methods_agree;

  if (cfg.format == "json") {
    json obj{{"command", "module"},
             {"n", cfg.n},
             {"r", cfg.r},
             {"s", cfg.s},
             {"method", cfg.method},
             {"report", json::parse(module_report_to_json_text(report))}};
    if (cfg.method == "both") obj["methods_agree"] = methods_agree;
    emit(obj);
  } else {
    std::cout << "lambda: " << report.lambda.to_text() << "\n"
              << "tableau: " << report.tableau.to_text() << "\n"
              << "rank: " << report.rank << "\n"
              << "predicted_dim: " << report.predicted_dim << "\n"
              << "highest_weight: " << weight_text(report.highest_weight) << "\n";
    for (const auto& [weight, mult] : report.weight_multiplicities)
      std::cout << "multiplicity " << weight_text(weight) << ": " << mult << "\n";
    if (cfg.method == "both")
      std::cout << "methods_agree: " << (methods_agree ? "true" : "false") << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_audit(const RawConfig& cfg) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  if (!arity_allowed(cfg.m, cfg.max_m_override)) return 2;
  if (cfg.n < 2) {
    std::cerr << "audit needs --n at least 2\n";
    return 2;
  }
  IdempotentMethod method = IdempotentMethod::Inductive;
  if (cfg.method == "fusion") {
    method = IdempotentMethod::Fused;
  } else if (cfg.method != "jm") {
    std::cerr << "audit supports --method jm or fusion\n";
    return 2;
  }

  AuditReport audit = schur_weyl_audit(cfg.n, cfg.m, *params, method);
  bool pass = audit.all_pass();

  if (cfg.format == "json") {
    emit(json{{"command", "audit"},
              {"r", cfg.r},
              {"s", cfg.s},
              {"method", cfg.method},
              {"report", json::parse(audit_report_to_json_text(audit))}});
  } else {
    print_check_lines("", audit.checks);
    for (const ModuleReport& mod : audit.modules) {
      std::cout << "module (" << mod.lambda.to_text() << " | " << mod.tableau.to_text()
                << "): rank " << mod.rank << "/" << mod.predicted_dim << " "
                << (mod.flags.all_pass() ? "pass" : "fail") << "\n";
    }
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_fusion_check(const RawConfig& cfg) {
  std::optional<Params> params = parse_params(cfg);
  if (!params) return 2;
  if (!arity_allowed(cfg.m, cfg.max_m_override)) return 2;

  HeckeAlgebra alg(cfg.m, *params);
  std::vector<FusionComparison> comparisons = verify_fusion_equals_jm(alg);
  if (!cfg.timings) {
    for (FusionComparison& c : comparisons) c.millis = 0.0;
  }
  bool pass = true;
  for (const FusionComparison& c : comparisons) pass = pass && c.equal;

  if (cfg.format == "json") {
    emit(json{{"command", "fusion-check"},
              {"m", cfg.m},
              {"r", cfg.r},
              {"s", cfg.s},
              {"comparisons", json::parse(fusion_comparisons_to_json_text(comparisons))},
              {"all_equal", pass}});
  } else {
    for (const FusionComparison& c : comparisons) {
      std::cout << (c.equal ? "EQUAL " : "DIFFER ") << c.lambda.to_text() << " | "
                << c.tableau.to_text() << "\n";
    }
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-parameter quantum-algebra and Hecke-algebra toolkit"};
  app.require_subcommand(1);

  RawConfig cfg;
  CLI::Option* m_opt = nullptr;

  auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--r", cfg.r, "numerator parameter r (rational, default 2)");
    cmd->add_option("--s", cfg.s, "parameter s (rational, default 3)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", cfg.seed, "seed for random spectral points");
    cmd->add_flag("--max-m-override", cfg.max_m_override,
                  "allow arities above the default cap of 6");
    cmd->add_flag("--timings", cfg.timings, "include wall-times (breaks byte determinism)");
  };

  CLI::App* relations = app.add_subcommand("relations", "verify the defining relation suites");
  add_common(relations);
  relations->add_option("--n", cfg.n, "local rank (dimension of the defining space)");
  relations->add_option("--m", cfg.m, "tensor arity for the Hecke suite");

  CLI::App* idempotent = app.add_subcommand("idempotent", "print a primitive idempotent");
  add_common(idempotent);
  m_opt = idempotent->add_option("--m", cfg.m, "arity (must equal the partition weight)");
  idempotent->add_option("--lambda", cfg.lambda, "partition, e.g. 2,1")->required();
  idempotent->add_option("--tableau", cfg.tableau, "standard tableau, e.g. \"1,2;3\"")->required();
  idempotent->add_option("--method", cfg.method, "jm | fusion | both");

  CLI::App* module_cmd = app.add_subcommand("module", "realize one irreducible module");
  add_common(module_cmd);
  CLI::Option* module_m_opt = module_cmd->add_option("--m", cfg.m, "arity");
  module_cmd->add_option("--n", cfg.n, "local rank");
  module_cmd->add_option("--lambda", cfg.lambda, "partition")->required();
  module_cmd->add_option("--tableau", cfg.tableau, "standard tableau")->required();
  module_cmd->add_option("--method", cfg.method, "jm | fusion | both");

  CLI::App* audit = app.add_subcommand("audit", "full duality audit on the tensor power");
  add_common(audit);
  audit->add_option("--n", cfg.n, "local rank");
  audit->add_option("--m", cfg.m, "tensor arity");
  audit->add_option("--method", cfg.method, "jm | fusion");

  CLI::App* fusion_check =
      app.add_subcommand("fusion-check", "compare fused and inductive idempotents");
  add_common(fusion_check);
  fusion_check->add_option("--m", cfg.m, "arity");

  CLI::App* ybe = app.add_subcommand("ybe", "Yang-Baxter and braid identities for the R-matrix");
  add_common(ybe);
  ybe->add_option("--n", cfg.n, "local rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(relations)) return cmd_relations(cfg);
  if (app.got_subcommand(idempotent)) return cmd_idempotent(cfg, m_opt->count() > 0);
  if (app.got_subcommand(module_cmd)) return cmd_module(cfg, module_m_opt->count() > 0);
  if (app.got_subcommand(audit)) return cmd_audit(cfg);
  if (app.got_subcommand(fusion_check)) return cmd_fusion_check(cfg);
  if (app.got_subcommand(ybe)) return cmd_ybe(cfg);
  return 2;
}
