#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cec/error.hpp"
#include "cec/law_engine.hpp"
#include "cec/law_inventory.hpp"
#include "cec/proof/checker.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string instance = "partial";
  std::size_t state_size = 2;
  std::size_t max_size = 2;
  std::uint64_t budget = 1'000'000;
  std::string suite = "all";
  std::vector<std::string> laws;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--instance", cfg.instance, "partial | state | kleisli-maybe")
      ->check(CLI::IsMember({"partial", "state", "kleisli-maybe"}));
  cmd->add_option("--state-size", cfg.state_size, "|S| for the state instance");
  cmd->add_option("--max-size", cfg.max_size, "largest object size");
  cmd->add_option("--budget", cfg.budget, "largest hom-set enumerated");
  cmd->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
  cmd->add_flag("--timing", cfg.timing, "include wall time in the report");
}

void validate(const Config& cfg) {
  if (cfg.instance == "state" && cfg.state_size < 1) throw cec::UsageError("--state-size must be at least 1");
  if (cfg.max_size < 1) throw cec::UsageError("--max-size must be at least 1");
  if (cfg.budget < 1) throw cec::UsageError("--budget must be at least 1");
}

template <class Fn>
int with_instance(const Config& cfg, Fn&& fn) {
  if (cfg.instance == "state") return fn(cec::StateCategory(cec::FinSet{cfg.state_size}));
  if (cfg.instance == "kleisli-maybe") return fn(cec::MaybeKleisliCategory{});
  return fn(cec::PartialCategory{});
}

cec::SweepOptions sweep_options(const Config& cfg) {
  cec::SweepOptions o;
  o.max_size = cfg.max_size;
  o.budget = cfg.budget;
  return o;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw cec::UsageError("cannot write " + cfg.out);
  file << text;
}

std::string render(const Config& cfg, const cec::LawReport& report) {
  return cfg.format == "structured" ? cec::to_structured(report) : cec::to_text(report);
}

int cmd_laws(const Config& cfg) {
  return with_instance(cfg, [&](const auto& c) {
    cec::SuiteRequest request;
    request.suite = cfg.suite;
    request.ids = cfg.laws;
    request.options = sweep_options(cfg);
    request.timing = cfg.timing;
    const auto report = cec::run_suite(c, request);
    emit(cfg, render(cfg, report));
    return report.ok() ? kOk : kFailed;
  });
}

// "5" is shorthand for "arrow.law.5".
std::string arrow_id(const std::string& law) {
  if (!law.empty() && law.find_first_not_of("0123456789") == std::string::npos) return "arrow.law." + law;
  return law;
}

int cmd_arrows(const Config& cfg) {
  return with_instance(cfg, [&](const auto& c) {
    cec::LawReport report;
    if (cfg.laws.empty()) {
      report = cec::check_arrow_laws(c, sweep_options(cfg));
      report.suite = "arrows";
    } else {
      cec::SuiteRequest request;
      for (const auto& law : cfg.laws) request.ids.push_back(arrow_id(law));
      request.options = sweep_options(cfg);
      report = cec::run_suite(c, request);
      report.suite = "arrows";
    }
    emit(cfg, render(cfg, report));
    return report.ok() ? kOk : kFailed;
  });
}

int cmd_witness(const Config& cfg) {
  if (cfg.laws.size() != 1) throw cec::UsageError("witness needs exactly one --law <search id>");
  return with_instance(cfg, [&](const auto& c) {
    const std::string& id = cfg.laws.front();
    const auto witness = cec::find_witness(c, id, sweep_options(cfg));
    std::string text;
    if (!witness) {
      text = id + ": not found\n";
    } else {
      text = id + ": found\n";
      for (const auto& [name, value] : witness->bindings) text += "  " + name + " = " + value + "\n";
      text += std::string("  re-verified: ") + (cec::verify_witness(c, id, *witness) ? "yes" : "no") + "\n";
    }
    emit(cfg, text);
    return kOk;
  });
}

int cmd_prove(const Config& cfg, const std::vector<std::string>& paths) {
  if (paths.empty()) throw cec::UsageError("prove needs at least one script or directory");
  for (const auto& path : paths) {
    if (!std::filesystem::exists(path)) throw cec::UsageError("no such file or directory: " + path);
  }
  const auto results = cec::proof::check_paths(paths);
  bool all_valid = true;
  std::string text;
  for (const auto& result : results) {
    text += result.path + ": " + result.summary() + "\n";
    all_valid = all_valid && result.valid();
  }
  emit(cfg, cfg.format == "structured" ? cec::to_structured(cec::proof::proofs_report(results)) : text);
  return all_valid ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks cartesian effect category laws on finite instances"};
  app.require_subcommand(0, 1);

  Config cfg;
  auto* laws = app.add_subcommand("laws", "run a law suite");
  add_common(laws, cfg);
  laws->add_option("--suite", cfg.suite, "suite name");
  laws->add_option("--law", cfg.laws, "check id (repeatable); overrides --suite");

  auto* arrows = app.add_subcommand("arrows", "check the derived arrow laws");
  add_common(arrows, cfg);
  arrows->add_option("--law", cfg.laws, "law number or check id (repeatable)");

  auto* witness = app.add_subcommand("witness", "search for a counterexample to a negative claim");
  add_common(witness, cfg);
  witness->add_option("--law", cfg.laws, "search id");

  std::vector<std::string> paths;
  auto* prove = app.add_subcommand("prove", "check proof scripts");
  prove->add_option("paths", paths, "script files or directories");
  prove->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  prove->add_option("--out", cfg.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*laws || *arrows || *witness) validate(cfg);
    if (*laws) return cmd_laws(cfg);
    if (*arrows) return cmd_arrows(cfg);
    if (*witness) return cmd_witness(cfg);
    if (*prove) return cmd_prove(cfg, paths);
    std::cout << cec::manifest_text();
    return kOk;
  } catch (const cec::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cec::UnknownCheckId& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
