#include "deon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "deon/engine.hpp"
#include "deon/report.hpp"
#include "deon/scenario.hpp"
#include "deon/thf.hpp"

namespace deon {

namespace {

struct Options {
  std::string file;
  std::string query;
  std::string out_path;
  std::string logic;
  std::optional<std::size_t> max_worlds;
  std::string format = "text";
  bool timings = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str(), std::filesystem::path(path).stem().string());
  } catch (const ScenarioError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Logic resolve_logic(const Options& o, const Scenario& s) {
  if (!o.logic.empty()) return *parse_logic(o.logic);
  return s.default_logic.value_or(Logic::Sdl);
}

EngineConfig resolve_config(const Options& o, Logic logic) {
  EngineConfig cfg = EngineConfig::defaults(logic);
  if (o.max_worlds) {
    cfg.search.max_worlds = *o.max_worlds;
  } else if (const char* env = std::getenv("DEON_MAX_WORLDS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw InputError("DEON_MAX_WORLDS must be a positive integer");
    cfg.search.max_worlds = v;
  }
  if (logic == Logic::Ddl && cfg.search.max_worlds > CJModel::kMaxWorlds) {
    throw InputError("--max-worlds above " + std::to_string(CJModel::kMaxWorlds) + " is not supported for ddl");
  }
  return cfg;
}

int exit_status(const std::vector<Verdict>& verdicts) {
  int code = kExitOk;
  for (const auto& v : verdicts) {
    if (v.kind != VerdictKind::Unknown) continue;
    if (!v.limit.empty()) return kExitLimit;
    code = kExitUnknown;
  }
  return code;
}

void emit(const RunReport& report, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report_json(report, o.timings).dump(2) << '\n';
  } else {
    out << report_text(report, o.timings);
  }
}

using Clock = std::chrono::steady_clock;

int cmd_check(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scenario s = load(o.file);
  Logic logic = resolve_logic(o, s);
  EngineConfig cfg = resolve_config(o, logic);
  RunReport report{s.name, logic, s.queries, run_scenario(s, logic, cfg)};
  report.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  emit(report, o, out);
  return exit_status(report.verdicts);
}

int cmd_prove(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scenario s = load(o.file);
  const Query* q = s.find_query(o.query);
  if (q == nullptr) throw InputError("unknown query id '" + o.query + "'");
  Logic logic = resolve_logic(o, s);
  EngineConfig cfg = resolve_config(o, logic);
  RunReport report{s.name, logic, {*q}, {run_query(s, *q, logic, cfg)}};
  report.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  emit(report, o, out);
  return exit_status(report.verdicts);
}

int cmd_model(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  Scenario s = load(o.file);
  Logic logic = resolve_logic(o, s);
  EngineConfig cfg = resolve_config(o, logic);
  Verdict v = check_consistency(s, logic, cfg);
  v.query_id = "model";
  RunReport report{s.name, logic, {Query{"model", QueryKind::Consistent, std::nullopt}}, {v}};
  report.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  emit(report, o, out);
  return exit_status(report.verdicts);
}

int cmd_export(const Options& o, std::ostream& out) {
  Scenario s = load(o.file);
  Logic logic = resolve_logic(o, s);
  std::optional<Formula> goal;
  if (!o.query.empty()) {
    const Query* q = s.find_query(o.query);
    if (q == nullptr) throw InputError("unknown query id '" + o.query + "'");
    if (q->kind != QueryKind::Entails) throw InputError("query '" + o.query + "' has no goal formula");
    goal = q->goal;
  }
  const std::string text = export_thf(s, logic, goal).text();
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + o.out_path + "'");
  file << text;
  file.close();
  if (!file) throw InputError("cannot write '" + o.out_path + "'");
  out << "wrote " << o.out_path << '\n';
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "scenario file (.deon)")->required();
  cmd->add_option("--logic", o.logic, "deontic logic, overrides the file")->check(CLI::IsMember({"sdl", "ddl"}));
}

void add_search(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-worlds", o.max_worlds, "largest model size searched")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timings", o.timings, "include timings in the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"deon: deontic logic reasoner for normative knowledge bases"};
  app.set_version_flag("--version", std::string("deon ") + kToolVersion);
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "decide every query of a scenario");
  add_common(check, o);
  add_search(check, o);

  auto* prove = app.add_subcommand("prove", "decide a single query");
  add_common(prove, o);
  add_search(prove, o);
  prove->add_option("--query", o.query, "query id")->required();

  auto* model = app.add_subcommand("model", "check consistency and print the witness model");
  add_common(model, o);
  add_search(model, o);

  auto* exp = app.add_subcommand("export-thf", "write the scenario as a TPTP THF problem");
  add_common(exp, o);
  exp->add_option("--out", o.out_path, "output path (.p)")->required();
  exp->add_option("--query", o.query, "entailment query to state as the conjecture");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (prove->parsed()) return cmd_prove(o, out);
    if (model->parsed()) return cmd_model(o, out);
    return cmd_export(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedConstruct& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace deon
