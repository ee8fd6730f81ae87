#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cec/law_report.hpp"
#include "cec/proof/script.hpp"

namespace cec::proof {

struct Outcome {
  enum class Kind { Valid, ParseError, TypeError, RuleViolation, GoalMismatch };
  Kind kind = Kind::Valid;
  std::string label;  // failing step, when there is one
  std::string reason;

  bool valid() const { return kind == Kind::Valid; }
  std::string summary() const;
};

// Finds cited lemmas as <dir>/<name>.eqp in the search directories, first hit
// wins. A cited lemma must itself check valid.
class LemmaLibrary {
 public:
  explicit LemmaLibrary(std::vector<std::string> dirs = {}) : dirs_(std::move(dirs)) {}
  void add_dir(const std::string& dir);

  // Throws RuleFailure when the lemma is missing, invalid or cites itself.
  const ProofScript& resolve(const std::string& name);

 private:
  struct Entry {
    std::optional<ProofScript> script;
    Outcome outcome;
    bool in_progress = false;
  };
  std::vector<std::string> dirs_;
  std::map<std::string, Entry> cache_;
};

class RuleFailure : public Error {
 public:
  using Error::Error;
};

Outcome check_script(const ProofScript& script, LemmaLibrary* lemmas = nullptr);
Outcome check_text(const std::string& text, LemmaLibrary* lemmas = nullptr);

struct ScriptResult {
  std::string path;
  std::string name;
  Outcome outcome;

  bool valid() const { return outcome.valid(); }
  std::string summary() const { return outcome.summary(); }
};

// A directory expands to its *.eqp files in name order. Lemmas are looked up in
// every given directory and in the directory of every given file.
std::vector<ScriptResult> check_paths(const std::vector<std::string>& paths);
std::vector<ScriptResult> check_path(const std::string& path);
std::vector<ScriptResult> check_corpus(const std::string& directory);

// One Law-kind check per script under suite "proofs"; a failing script carries
// its step and reason as witness bindings.
LawReport proofs_report(const std::vector<ScriptResult>& results);

}  // namespace cec::proof
