#include "wzsum_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "wzsum/catalog.hpp"
#include "wzsum/errors.hpp"
#include "wzsum/suite.hpp"

namespace wzsum::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultWzNMax = 10;

/// A failure that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certificates installed next to the binary win over the build-tree copy.
std::string default_fixtures() {
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto installed = exe.parent_path().parent_path() / "share" / "wzsum" / "certificates";
    if (std::filesystem::is_directory(installed, ec)) return installed.string();
  }
  return WZSUM_DEFAULT_FIXTURES;
}

struct Options {
  std::string command;
  std::vector<std::string> targets;
  std::optional<long> n_max;
  int samples = 20;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string config_path;
  std::vector<std::string> mutations;
  std::string fixtures = default_fixtures();
};

/// Fills every field the command line left unset from the JSON config file.
void apply_config(Options& o, const CLI::App& app) {
  std::ifstream in(o.config_path);
  if (!in) throw UsageError("cannot read config file " + o.config_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("invalid config file: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  const auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_max") {
        if (unset("--n-max")) o.n_max = value.get<long>();
      } else if (key == "samples") {
        if (unset("--samples")) o.samples = value.get<int>();
      } else if (key == "seed") {
        if (unset("--seed")) o.seed = value.get<std::uint64_t>();
      } else if (key == "format") {
        if (unset("--format")) o.format = value.get<std::string>();
      } else if (key == "fixtures") {
        if (unset("--fixtures")) o.fixtures = value.get<std::string>();
      } else if (key == "ids") {
        if (o.targets.empty()) o.targets = value.get<std::vector<std::string>>();
      } else if (key == "mutate") {
        if (o.mutations.empty()) o.mutations = value.get<std::vector<std::string>>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("invalid config value: ") + e.what());
  }
}

void validate(const Options& o) {
  if (o.format != "text" && o.format != "json") throw UsageError("format must be text or json");
  if (o.samples < 1) throw UsageError("samples must be positive");
  if (o.n_max && *o.n_max < 0) throw UsageError("n-max must be non-negative");
}

std::string render_text(const CheckRow& row) {
  std::string line = row.id;
  if (row.n) line += " n=" + std::to_string(*row.n);
  for (const auto& [name, value] : row.params) line += " " + name + "=" + value;
  line += " lhs=" + row.lhs + " rhs=" + row.rhs + " " + std::string(status_name(row.status));
  if (!row.reason.empty()) line += " (" + row.reason + ")";
  return line;
}

Json row_json(const CheckRow& row) {
  Json params = Json::object();
  for (const auto& [name, value] : row.params) params[name] = value;
  Json j;
  j["id"] = row.id;
  j["params"] = std::move(params);
  j["n"] = row.n ? Json(*row.n) : Json(nullptr);
  j["lhs"] = row.lhs;
  j["rhs"] = row.rhs;
  j["status"] = status_name(row.status);
  j["reason"] = row.reason;
  return j;
}

void print_report(const Options& o, const SuiteReport& report, std::ostream& out) {
  if (o.format == "json") {
    Json j;
    j["suite"] = o.command;
    j["seed"] = report.seed;
    j["results"] = Json::array();
    for (const auto& row : report.rows) j["results"].push_back(row_json(row));
    j["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}};
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& row : report.rows) out << render_text(row) << '\n';
  out << "summary: pass=" << report.summary.pass << " fail=" << report.summary.fail
      << " skipped=" << report.summary.skipped << '\n';
}

int list(const Options& o, std::ostream& out) {
  const auto pairs = load_pairs(o.fixtures);
  if (o.format == "json") {
    Json j;
    j["identities"] = Json::array();
    for (const auto& e : catalog())
      j["identities"].push_back({{"id", e.id}, {"ref", e.reference}, {"params", e.param_names()}});
    j["pairs"] = Json::array();
    for (const auto& p : pairs) {
      std::vector<std::string> names;
      for (Var v : p.params) names.emplace_back(var_name(v));
      for (Var v : p.indices) names.emplace_back(var_name(v));
      j["pairs"].push_back({{"id", p.name}, {"params", names}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& e : catalog()) {
    std::string params;
    for (const auto& name : e.param_names()) params += (params.empty() ? "" : ",") + name;
    out << e.id << "\t" << (params.empty() ? "-" : params) << "\t" << e.reference << '\n';
  }
  for (const auto& p : pairs) {
    std::string params;
    for (Var v : p.params) params += (params.empty() ? "" : ",") + std::string(var_name(v));
    for (Var v : p.indices) params += (params.empty() ? "" : ",") + std::string(var_name(v));
    out << p.name << "\t" << (params.empty() ? "-" : params) << "\tWZ pair, sum_k T(n,k) = 1\n";
  }
  return 0;
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig c;
  c.n_max = o.n_max;
  c.samples = o.samples;
  c.seed = o.seed;
  c.fixtures = o.fixtures;
  return c;
}

int run_command(Options& o, std::ostream& out) {
  if (o.command == "list") return list(o, out);

  SuiteConfig config = suite_config(o);
  if (o.command == "check") {
    if (o.targets.size() != 1) throw UsageError("check takes exactly one identity id");
    const std::string& id = o.targets.front();
    try {
      (void)find_entry(id);
    } catch (const std::out_of_range&) {
      throw UsageError("unknown identity '" + id + "'");
    }
    config.filter = {id};
    config.fixtures.clear();
    for (const auto& m : o.mutations) config.mutations.push_back(id + ":" + m);
  } else if (o.command == "wz") {
    const auto pairs = load_pairs(o.fixtures);
    std::vector<std::string> names;
    for (const auto& p : pairs) names.push_back(p.name);
    for (const auto& t : o.targets)
      if (std::find(names.begin(), names.end(), t) == names.end()) throw UsageError("unknown WZ pair '" + t + "'");
    config.filter = o.targets.empty() ? names : o.targets;
    config.wz_n_max = kDefaultWzNMax;
    for (const auto& target : config.filter)
      for (const auto& m : o.mutations) config.mutations.push_back(target + ":" + m);
    // Restrict the run to pairs: a catalog id never equals a pair name.
  } else {
    config.filter = o.targets;
    config.mutations = o.mutations;
  }

  SuiteReport report;
  try {
    report = run_suite(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  print_report(o, report, out);
  return report.summary.fail > 0 ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of binomial and harmonic-number identities and WZ certificates", "wzsum"};
  app.require_subcommand(1, 1);

  Options o;
  long n_max = 0;
  app.add_option("--n-max", n_max, "Largest n to check (overrides per-identity defaults)");
  app.add_option("--samples", o.samples, "Parameter draws per n (default 20)");
  app.add_option("--seed", o.seed, "Seed for parameter draws (default 0)");
  app.add_option("--format", o.format, "Output format: text or json");
  app.add_option("--config", o.config_path, "JSON file with defaults for the flags above");
  app.add_option("--fixtures", o.fixtures, "Directory of WZ certificate files");

  auto* list_cmd = app.add_subcommand("list", "List catalog identities and WZ pairs");
  auto* check_cmd = app.add_subcommand("check", "Check one catalog identity");
  check_cmd->add_option("id", o.targets, "Identity id, e.g. ID16")->required();
  check_cmd->add_option("--mutate", o.mutations, "Negative control: swap the right-hand side (e.g. flip-h2n)");
  auto* wz_cmd = app.add_subcommand("wz", "Verify WZ certificates (all pairs by default)");
  wz_cmd->add_option("pairs", o.targets, "Pair names, e.g. thm2");
  wz_cmd->add_option("--mutate", o.mutations,
                     "Negative control: scale-cert:<r>, add-cert:<expr>, flip-exp:<i>, flip-orientation");
  auto* suite_cmd = app.add_subcommand("suite", "Run the whole catalog and every WZ pair");
  suite_cmd->add_option("ids", o.targets, "Restrict to these ids or pair names");
  for (auto* sub : {list_cmd, check_cmd, wz_cmd, suite_cmd}) sub->fallthrough();

  std::vector<const char*> argv{"wzsum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    o.command = app.get_subcommands().front()->get_name();
    if (app.get_option("--n-max")->count() > 0) o.n_max = n_max;
    if (!o.config_path.empty()) apply_config(o, app);
    validate(o);
    return run_command(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun 'wzsum --help' for usage\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace wzsum::cli
