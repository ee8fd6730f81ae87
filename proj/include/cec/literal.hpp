#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cec/error.hpp"

namespace cec {

// Text form of a morphism table:
//
//   literal := [name ':'] ['S' '=' nat ','] nat '->' nat '=' '[' [entry {',' entry}] ']'
//   entry   := '_' | nat | '(' nat ',' nat ')' ['->' '(' nat ',' nat ')']
//
// Instances validate which entry shapes they accept.
struct LiteralEntry {
  enum class Shape { Bottom, Value, Pair, Explicit };
  Shape shape = Shape::Value;
  std::size_t a = 0, b = 0;  // value, or (s', y), or the (s, x) of an explicit entry
  std::size_t c = 0, d = 0;  // (s', y) of an explicit entry
};

struct MapLiteral {
  std::string name;
  std::optional<std::size_t> states;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<LiteralEntry> entries;
};

class LiteralError : public UsageError {
 public:
  LiteralError(const std::string& what, std::size_t column)
      : UsageError("literal: " + what + " at column " + std::to_string(column + 1)),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

MapLiteral parse_map_literal(std::string_view text);

}  // namespace cec
