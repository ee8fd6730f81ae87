#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cec/law_report.hpp"

namespace cec {

// Static description of one check. Quantifiers are listed outermost first; the
// engine enumerates them in exactly this order, which fixes which witness is
// reported first.
struct CheckSpec {
  std::string id;
  std::vector<std::string> suites;
  CheckKind kind = CheckKind::Law;
  std::string statement;
  std::vector<std::string> quantifiers;
};

const std::vector<CheckSpec>& law_inventory();
// Throws UnknownCheckId.
const CheckSpec& check_spec(std::string_view id);
std::vector<std::string> suite_names();
// Ids of a suite in inventory order. "all" is every suite except "arrows".
// Throws UnknownCheckId for an unknown suite.
std::vector<std::string> suite_ids(std::string_view suite);

// One line per check: "<suite> <id>".
std::string manifest_text();

}  // namespace cec
