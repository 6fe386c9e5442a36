// agrees: analyze | survey | repro

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "agrees/repro.hpp"
#include "agrees/survey.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

/// AGREES_SEED wins over --seed.
std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("AGREES_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw agrees::BadParameters(std::string("AGREES_SEED is not an unsigned integer: ") + env);
  }
  return flag;
}

int run_analyze(const agrees::AnalyzeOptions& base, const std::vector<std::string>& bindings, bool pretty) {
  agrees::AnalyzeOptions opts = base;
  for (const auto& kv : bindings) opts.params.insert(agrees::parse_param_binding(kv));
  opts.seed = effective_seed(opts.seed);
  agrees::AnalysisResult result = agrees::run_analysis(opts);
  if (pretty) {
    std::cout << agrees::report_pretty(result);
  } else {
    std::cout << agrees::report_json(result).dump(2) << "\n";
  }
  return 0;
}

int run_survey(agrees::SurveyOptions opts, const std::map<std::string, std::string>& given, const std::string& out) {
  for (const auto& [k, v] : given) {
    if (!v.empty()) opts.ranges[k] = v;
  }
  opts.seed = effective_seed(opts.seed);
  agrees::SurveyResult result = agrees::run_survey(opts);
  if (out.empty() || out == "-") {
    agrees::write_csv(std::cout, result.rows);
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw agrees::BadParameters("cannot open output file " + out);
    agrees::write_csv(file, result.rows);
  }
  std::cerr << "survey: " << result.rows.size() << " rows, skipped " << result.skipped
            << " parameter tuples that violate the family constraints\n";
  return 0;
}

int run_repro(const std::vector<std::string>& ids, bool all, bool list) {
  const auto& catalog = agrees::check_catalog();
  if (list) {
    for (const auto& c : catalog) std::cout << c.id << "  " << c.expected << "\n";
    return 0;
  }
  std::vector<agrees::CheckResult> results;
  if (all) {
    for (const auto& c : catalog) results.push_back(agrees::run_check(c));
  } else if (ids.empty()) {
    throw agrees::BadParameters("repro needs --all or a check id (see --list)");
  } else {
    for (const auto& id : ids) results.push_back(agrees::run_check(id));
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << agrees::format_result(r) << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost Gorenstein Rees algebras of m-primary ideals in k[x,y]"};
  app.set_version_flag("--version", std::string(agrees::kVersion));
  app.require_subcommand(1);

  agrees::AnalyzeOptions analyze;
  std::vector<std::string> bindings;
  bool json = false, pretty = false;
  auto* a = app.add_subcommand("analyze", "Classify one ideal");
  a->add_option("--ideal", analyze.ideal, "Comma separated generators, {expr} substituted from --param")->required();
  a->add_option("--param", bindings, "Parameter binding k=v (repeatable)");
  a->add_option("--field", analyze.field, "q or fp:<prime>")->capture_default_str();
  a->add_option("--seed", analyze.seed, "Random seed")->capture_default_str();
  auto* json_flag = a->add_flag("--json", json, "JSON report (default)");
  a->add_flag("--pretty", pretty, "Text report with the staircase")->excludes(json_flag);
  a->add_flag("--rees", analyze.rees, "Include the Rees algebra presentation");
  a->add_flag("--timing", analyze.timing, "Fill timing_ms (makes output time dependent)");

  agrees::SurveyOptions survey;
  std::map<std::string, std::string> ranges{{"n", ""}, {"alpha", ""}, {"beta", ""}, {"m", ""}};
  std::string out;
  auto* s = app.add_subcommand("survey", "Classify a parameter family, CSV output");
  s->add_option("--family", survey.family, "contracted-o3|power-order|three-gen|remark43|products")->required();
  for (auto& [name, value] : ranges) s->add_option("--" + name, value, "Range lo..hi for " + name);
  s->add_option("--field", survey.field, "q or fp:<prime>")->capture_default_str();
  s->add_option("--seed", survey.seed, "Run seed")->capture_default_str();
  s->add_option("--jobs", survey.jobs, "Worker threads")->capture_default_str();
  s->add_option("--out", out, "Output path ('-' for stdout)");

  std::vector<std::string> ids;
  bool all = false, list = false;
  auto* r = app.add_subcommand("repro", "Run reproduction checks");
  r->add_option("ids", ids, "Check ids");
  r->add_flag("--all", all, "Run every check");
  r->add_flag("--list", list, "List check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (a->parsed()) return run_analyze(analyze, bindings, pretty);
    if (s->parsed()) return run_survey(survey, ranges, out);
    return run_repro(ids, all, list);
  } catch (const agrees::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
