#include "cec/law_report.hpp"

#include <sstream>

#include "cec/error.hpp"
#include "json.hpp"

namespace cec {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Law: return "law";
    case CheckKind::Diagnostic: return "diagnostic";
    case CheckKind::Search: return "search";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Found: return "found";
    case Verdict::NotFound: return "not_found";
  }
  return "?";
}

const std::string& Witness::at(const std::string& name) const {
  for (const auto& [k, v] : bindings) {
    if (k == name) return v;
  }
  throw UsageError("witness has no binding '" + name + "'");
}

bool LawReport::ok() const {
  for (const LawCheck& c : checks) {
    if (c.kind == CheckKind::Law && c.verdict == Verdict::Fail) return false;
  }
  return true;
}

const LawCheck* LawReport::find(const std::string& id) const {
  for (const LawCheck& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string to_structured(const LawReport& report) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["suite"] = report.suite;
  ordered_json instance;
  instance["kind"] = report.instance.kind;
  if (report.instance.state_size) instance["state_size"] = *report.instance.state_size;
  out["instance"] = instance;
  out["max_size"] = report.max_size;
  out["budget"] = report.budget;
  ordered_json checks = ordered_json::array();
  for (const LawCheck& c : report.checks) {
    ordered_json j;
    j["id"] = c.id;
    j["kind"] = to_string(c.kind);
    j["statement"] = c.statement;
    j["quantifiers"] = c.quantifiers;
    j["verdict"] = to_string(c.verdict);
    j["cases"] = c.cases;
    j["tuples"] = c.tuples;
    if (!c.skipped.empty()) j["skipped"] = c.skipped;
    if (c.witness) {
      ordered_json w = ordered_json::object();
      for (const auto& [k, v] : c.witness->bindings) w[k] = v;
      j["witness"] = w;
    }
    checks.push_back(std::move(j));
  }
  out["checks"] = checks;
  std::size_t failed = 0;
  for (const LawCheck& c : report.checks) {
    if (c.kind == CheckKind::Law && c.verdict == Verdict::Fail) ++failed;
  }
  out["failed"] = failed;
  if (report.wall_seconds) out["wall_seconds"] = *report.wall_seconds;
  return out.dump(2) + "\n";
}

std::string to_text(const LawReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " on " << report.instance.kind;
  if (report.instance.state_size) os << " (|S|=" << *report.instance.state_size << ")";
  os << ", object sizes 1.." << report.max_size << ", budget " << report.budget << "\n";
  for (const LawCheck& c : report.checks) {
    std::string tag = to_string(c.verdict);
    if (c.kind == CheckKind::Diagnostic) tag = c.verdict == Verdict::Pass ? "holds" : "fails";
    os << "  " << tag << std::string(tag.size() < 10 ? 10 - tag.size() : 1, ' ') << c.id << "  [" << c.cases
       << " cases, " << c.tuples << " tuples]";
    if (!c.skipped.empty()) os << " (" << c.skipped.size() << " cases skipped over budget)";
    os << "\n";
    if (c.witness) {
      for (const auto& [k, v] : c.witness->bindings) os << "            " << k << " = " << v << "\n";
    }
  }
  if (report.wall_seconds) os << "wall time " << *report.wall_seconds << " s\n";
  os << (report.ok() ? "all laws hold" : "LAW FAILURES") << "\n";
  return os.str();
}

}  // namespace cec
