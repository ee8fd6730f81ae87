#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cec/proof/term.hpp"

namespace cec::proof {

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class Rel { Strong, Semi };

struct Judgment {
  Rel rel;
  TermPtr lhs, rhs;
};

std::string render(const Judgment& j);
bool same(const Judgment& a, const Judgment& b);

struct SymbolDecl {
  std::string name;
  Obj dom, cod;
  bool pure;
};

// Names in scope while parsing a script.
struct Scope {
  std::vector<std::string> objects;  // declaration order
  std::vector<SymbolDecl> symbols;   // declaration order
  std::map<std::string, TermPtr> defines;

  bool has_object(const std::string& name) const;
  const SymbolDecl* symbol(const std::string& name) const;
};

struct Justification {
  std::string rule;
  std::vector<std::string> premises;
  std::string lemma;  // rule == "lemma"
  // Lemma instantiation, kept as source text and parsed against the cited
  // script's declarations when the step is checked.
  std::vector<std::pair<std::string, std::string>> instantiation;
};

struct Step {
  std::string label;
  std::size_t line = 0;
  Judgment judgment;
  Justification by;
};

struct Assumption {
  std::string label;
  Judgment judgment;
};

struct ProofScript {
  std::string name;
  Scope scope;
  std::vector<Assumption> assumptions;
  std::optional<Judgment> goal;
  std::vector<Step> steps;
};

// Throws ParseError or TypeError (the latter prefixed with its line).
ProofScript parse_script(const std::string& text, const std::string& name = "");
ProofScript parse_script_file(const std::string& path);

TermPtr parse_term(const std::string& text, const Scope& scope);
Obj parse_object(const std::string& text, const Scope& scope);

}  // namespace cec::proof
