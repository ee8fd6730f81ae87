#pragma once

#include <memory>
#include <string>

#include "cec/error.hpp"

namespace cec::proof {

// Object expression: a declared base name, the unit U, or a binary product.
class Obj {
 public:
  static Obj base(std::string name);
  static Obj unit();
  static Obj product(const Obj& left, const Obj& right);

  bool is_base() const { return node_->kind == Kind::Base; }
  bool is_unit() const { return node_->kind == Kind::Unit; }
  bool is_product() const { return node_->kind == Kind::Product; }

  const std::string& name() const { return node_->text; }
  const Obj& left() const;
  const Obj& right() const;

  // Canonical text, e.g. "X", "U", "A*B", "(A*B)*C".
  const std::string& text() const { return node_->text; }

  friend bool operator==(const Obj& a, const Obj& b) { return a.node_->text == b.node_->text; }

 private:
  enum class Kind { Base, Unit, Product };
  struct Node {
    Kind kind;
    std::string text;
    std::unique_ptr<Obj> left, right;
  };
  explicit Obj(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

class TypeError : public UsageError {
 public:
  using UsageError::UsageError;
  TypeError(const std::string& message, std::string label) : UsageError(message), label_(std::move(label)) {}
  // Step label when the error is inside a step.
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

}  // namespace cec::proof
