#include "cec/proof/object.hpp"

namespace cec::proof {

Obj Obj::base(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->text = std::move(name);
  return Obj(std::move(node));
}

Obj Obj::unit() {
  static const Obj u = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Unit;
    node->text = "U";
    return Obj(std::move(node));
  }();
  return u;
}

Obj Obj::product(const Obj& left, const Obj& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  auto wrap = [](const Obj& o) { return o.is_product() ? "(" + o.text() + ")" : o.text(); };
  node->text = wrap(left) + "*" + wrap(right);
  node->left = std::make_unique<Obj>(left);
  node->right = std::make_unique<Obj>(right);
  return Obj(std::move(node));
}

const Obj& Obj::left() const {
  if (!is_product()) throw TypeError("object " + text() + " is not a product");
  return *node_->left;
}

const Obj& Obj::right() const {
  if (!is_product()) throw TypeError("object " + text() + " is not a product");
  return *node_->right;
}

}  // namespace cec::proof
