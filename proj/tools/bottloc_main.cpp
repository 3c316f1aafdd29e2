// bottloc: exact localization sums, consistency checks, and bounded searches
// over circle-action fixed-point weight data.
//
// Exit codes: 0 = success and all checks passed; 1 = well-formed input but a
// check failed; 2 = malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bottloc/bottloc.hpp"

namespace {

using namespace bottloc;

FixedPointProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

void print_consistency(const ConsistencyReport& report) {
  std::cout << "moments:\n";
  for (const auto& m : report.moments)
    std::cout << "  t=" << m.t << ": " << m.value.str() << (m.pass ? "  pass" : "  FAIL") << "\n";
  std::cout << "chern_top: " << report.chern_top.str()
            << (report.chern_integral ? "" : "  [warning: not an integer, data unrealizable]")
            << "\n";
  std::cout << "consistent: " << (report.consistent ? "yes" : "no") << "\n";
}

void print_levels(const LevelDecomposition& levels) {
  std::cout << "levels:\n";
  for (const auto& level : levels.levels)
    std::cout << "  s=" << level.line_weight << "  A=" << level.localized_sum.str()
              << "  multiplicity=" << level.multiplicity << "\n";
}

int run_check(const std::string& path, bool as_json) {
  FixedPointProfile p = load_profile(path);
  TheoremReport report = theorem_report(p);
  if (as_json) {
    std::cout << theorem_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "profile: n=" << p.dimension << ", r=" << p.point_count()
              << ", flavor=" << to_string(p.flavor) << "\n";
    print_consistency(report.consistency);
    std::cout << "classification: " << to_string(report.classification) << "\n";
    print_levels(report.levels);
    static const char* statements[] = {
        "(1) nonzero chern_top => r >= n+1",
        "(2) consistent somewhere-injective => r >= n+1",
        "(3) r = n+1 consistent => dichotomy",
    };
    std::cout << "theorem verdicts:\n";
    for (std::size_t s = 0; s < 3; ++s)
      std::cout << "  " << statements[s] << ": " << to_string(report.verdicts[s]) << "\n";
    if (report.dichotomy == DichotomyCase::nonzero_everywhere)
      std::cout << "dichotomy case: chern_top != 0, everywhere injective\n";
    if (report.dichotomy == DichotomyCase::zero_not_somewhere)
      std::cout << "dichotomy case: chern_top = 0, not somewhere injective\n";
    if (report.vacuous) std::cout << "note: profile inconsistent; verdicts are vacuous\n";
  }
  return report.consistency.consistent && !report.any_violated() ? 0 : 1;
}

int run_chern(const std::string& path) {
  std::cout << chern_top(load_profile(path)).str() << "\n";
  return 0;
}

int run_classify(const std::string& path, bool as_json) {
  FixedPointProfile p = load_profile(path);
  Classification c = classify(p);
  LevelDecomposition levels = aggregate_levels(p);
  if (as_json) {
    nlohmann::json j{{"classification", to_string(c)}, {"levels", levels_to_json(levels)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classification: " << to_string(c) << "\n";
    print_levels(levels);
  }
  return 0;
}

int run_gen_cpn(const std::vector<int>& lambdas, int power, bool det_lift) {
  FixedPointProfile p = cpn(lambdas, power);
  if (det_lift) p = determinant_lift(p);
  std::cout << serialize_profile(p) << "\n";
  return 0;
}

int run_gen_product(const std::string& path_a, const std::string& path_b) {
  std::cout << serialize_profile(product(load_profile(path_a), load_profile(path_b))) << "\n";
  return 0;
}

int run_search(const SearchSpec& spec, int workers, const std::string& out_path) {
  std::vector<FixedPointProfile> profiles = enumerate_consistent(spec, workers);
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  write_catalog(out, profiles, spec);
  std::cout << "wrote " << profiles.size() << " consistent profile(s) to " << out_path << "\n";
  return 0;
}

int run_genus(const std::string& path, bool as_json) {
  FixedPointProfile p = load_profile(path);
  ToddGenusResult result = todd_genus(p);
  if (as_json) {
    nlohmann::json j{{"character", result.character.str()}};
    switch (result.status) {
      case ToddStatus::ok:
        j["todd_genus"] = result.todd.str();
        break;
      case ToddStatus::not_laurent:
        j["todd_genus"] = "NotLaurent";
        break;
      case ToddStatus::non_integral:
        j["todd_genus"] = "NonIntegral";
        j["value_at_one"] = rational_to_json(result.value_at_one);
        break;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "character: " << result.character.str() << "\n";
    switch (result.status) {
      case ToddStatus::ok:
        std::cout << "todd_genus: " << result.todd.str() << "\n";
        break;
      case ToddStatus::not_laurent:
        std::cout << "todd_genus: NotLaurent (character has a pole; "
                     "data cannot come from an almost-complex circle action)\n";
        break;
      case ToddStatus::non_integral:
        std::cout << "todd_genus: non-integral value " << result.value_at_one.str() << "\n";
        break;
    }
  }
  return result.status == ToddStatus::ok ? 0 : 1;
}

int run_audit(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Catalog catalog = read_catalog(in);
  AuditReport report = catalog_audit(catalog.profiles);
  if (as_json) {
    std::cout << audit_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "profiles audited: " << report.profile_count << "\n";
    for (std::size_t s = 0; s < 3; ++s)
      std::cout << "statement " << s + 1 << ": verified " << report.verified[s] << ", violated "
                << report.violated[s] << ", not-applicable " << report.not_applicable[s] << "\n";
    std::cout << "dichotomy cases: nonzero/everywhere " << report.dichotomy_nonzero_everywhere
              << ", zero/not-somewhere " << report.dichotomy_zero_not_somewhere << "\n";
    std::cout << "inconsistent inputs: " << report.inconsistent << "\n";
    std::cout << "result: " << (report.clean() ? "clean" : "VIOLATIONS FOUND") << "\n";
    if (report.first_violation)
      std::cout << "first violation (statement " << report.first_violation->second
                << "): " << serialize_profile(report.first_violation->first) << "\n";
  }
  return report.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact localization sums over circle-action fixed-point data"};
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Consistency constraints and theorem verdicts");
  check->add_option("file", file_a, "profile JSON file")->required();
  check->add_flag("--json", as_json, "machine-readable output");

  auto* chern = app.add_subcommand("chern", "Top Chern value as an exact rational");
  chern->add_option("file", file_a, "profile JSON file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Injectivity classification and level table");
  classify_cmd->add_option("file", file_a, "profile JSON file")->required();
  classify_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "Generate ground-truth profiles");
  gen->require_subcommand(1);
  std::vector<int> lambdas;
  int power = 1;
  bool det_lift = false;
  auto* gen_cpn = gen->add_subcommand("cpn", "Projective space with the standard action");
  gen_cpn->add_option("--lambdas", lambdas, "action exponents, comma separated")
      ->required()
      ->delimiter(',');
  gen_cpn->add_option("--power", power, "twist d of the line bundle O(d)");
  gen_cpn->add_flag("--det-lift", det_lift, "use the determinant (anticanonical) lift instead");
  auto* gen_product = gen->add_subcommand("product", "Product of two profiles");
  gen_product->add_option("fileA", file_a, "first profile")->required();
  gen_product->add_option("fileB", file_b, "second profile")->required();

  auto* search = app.add_subcommand("search", "Enumerate consistent profiles within bounds");
  SearchSpec spec;
  int workers = 1;
  std::string flavor_name = "almost-complex";
  std::string out_path;
  search->add_option("--dim", spec.dimension, "dimension n")->required();
  search->add_option("--points", spec.points, "number of fixed points r")->required();
  search->add_option("--tangent-bound", spec.tangent_bound, "tangent weights in [-B,B]")->required();
  search->add_option("--line-bound", spec.line_bound, "canonical line weights in [0,A]")->required();
  search->add_option("--workers", workers, "worker threads (affects wall time only)");
  search->add_option("--flavor", flavor_name, "oriented or almost-complex");
  search->add_option("--out", out_path, "catalog output path (.jsonl)")->required();

  auto* genus = app.add_subcommand("genus", "Dolbeault character and Todd genus");
  genus->add_option("file", file_a, "profile JSON file")->required();
  genus->add_flag("--json", as_json, "machine-readable output");

  auto* audit = app.add_subcommand("audit", "Theorem audit over a search catalog");
  audit->add_option("catalog", file_a, "catalog .jsonl file")->required();
  audit->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // malformed invocation
  }

  try {
    if (app.got_subcommand(check)) return run_check(file_a, as_json);
    if (app.got_subcommand(chern)) return run_chern(file_a);
    if (app.got_subcommand(classify_cmd)) return run_classify(file_a, as_json);
    if (app.got_subcommand(gen)) {
      if (gen->got_subcommand(gen_cpn)) return run_gen_cpn(lambdas, power, det_lift);
      return run_gen_product(file_a, file_b);
    }
    if (app.got_subcommand(search)) {
      spec.flavor = flavor_from_string(flavor_name);
      return run_search(spec, workers, out_path);
    }
    if (app.got_subcommand(genus)) return run_genus(file_a, as_json);
    if (app.got_subcommand(audit)) return run_audit(file_a, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
