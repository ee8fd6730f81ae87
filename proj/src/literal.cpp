#include "cec/literal.hpp"

#include <cctype>

namespace cec {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }
  // An identifier followed by ':' names the literal; otherwise rewinds.
  std::string optional_name() {
    skip_space();
    std::size_t p = pos_;
    while (p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_' || text_[p] == '\'')) {
      ++p;
    }
    if (p == pos_ || std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {};
    std::size_t q = p;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    if (q < text_.size() && text_[q] == ':') {
      std::string name(text_.substr(pos_, p - pos_));
      pos_ = q + 1;
      return name;
    }
    return {};
  }
  [[noreturn]] void fail(const std::string& what) const { throw LiteralError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

LiteralEntry parse_entry(Cursor& in) {
  LiteralEntry e;
  if (in.accept("_")) {
    e.shape = LiteralEntry::Shape::Bottom;
    return e;
  }
  if (in.accept("(")) {
    e.a = in.number();
    in.expect(",");
    e.b = in.number();
    in.expect(")");
    e.shape = LiteralEntry::Shape::Pair;
    if (in.accept("->")) {
      in.expect("(");
      e.c = in.number();
      in.expect(",");
      e.d = in.number();
      in.expect(")");
      e.shape = LiteralEntry::Shape::Explicit;
    }
    return e;
  }
  e.a = in.number();
  return e;
}

}  // namespace

MapLiteral parse_map_literal(std::string_view text) {
  Cursor in(text);
  MapLiteral lit;
  lit.name = in.optional_name();
  if (in.accept("S")) {
    in.expect("=");
    lit.states = in.number();
    in.expect(",");
  }
  lit.source = in.number();
  in.expect("->");
  lit.target = in.number();
  in.expect("=");
  in.expect("[");
  if (!in.accept("]")) {
    do {
      lit.entries.push_back(parse_entry(in));
    } while (in.accept(","));
    in.expect("]");
  }
  if (!in.at_end()) in.fail("trailing input");
  return lit;
}

}  // namespace cec
