#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cec {

// Law: must hold. Diagnostic: a property reported either way (it is expected to
// fail in some instances). Search: an existential claim, verdict found/not_found.
enum class CheckKind { Law, Diagnostic, Search };
enum class Verdict { Pass, Fail, Skipped, Found, NotFound };

std::string to_string(CheckKind kind);
std::string to_string(Verdict verdict);

// Ordered bindings for the quantified variables: objects as sizes, morphisms as
// literals (parseable by the instance).
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;

  const std::string& at(const std::string& name) const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LawCheck {
  std::string id;
  std::string statement;
  std::vector<std::string> quantifiers;
  CheckKind kind = CheckKind::Law;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  // Object assignments whose hom-sets exceeded the budget.
  std::vector<std::string> skipped;
  std::uint64_t cases = 0;
  // Quantifier tuples on which the conclusion was evaluated.
  std::uint64_t tuples = 0;
};

struct InstanceInfo {
  std::string kind;
  std::optional<std::size_t> state_size;
};

struct LawReport {
  std::string suite;
  InstanceInfo instance;
  std::size_t max_size = 0;
  std::uint64_t budget = 0;
  std::vector<LawCheck> checks;
  // Only serialized when timing was requested, so that reports are reproducible.
  std::optional<double> wall_seconds;

  // No Law-kind check failed.
  bool ok() const;
  const LawCheck* find(const std::string& id) const;
};

std::string to_structured(const LawReport& report);
std::string to_text(const LawReport& report);

}  // namespace cec
