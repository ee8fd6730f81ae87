#include "cec/finite_set.hpp"

#include "cec/error.hpp"

namespace cec {

ProductSet::ProductSet(FinSet left, FinSet right) : left_(left), right_(right) {}

Element ProductSet::encode(Element a, Element b) const {
  if (!left_.contains(a) || !right_.contains(b)) {
    throw UsageError("product encode: component out of range");
  }
  return static_cast<Element>(a * right_.size() + b);
}

std::pair<Element, Element> ProductSet::decode(Element e) const {
  if (!carrier().contains(e)) throw UsageError("product decode: element out of range");
  const auto r = static_cast<Element>(right_.size());
  return {e / r, e % r};
}

ProductSet product(FinSet left, FinSet right) { return ProductSet{left, right}; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    result = saturating_mul(result, base);
    if (result == kSaturated || result == 0) break;
  }
  return result;
}

std::uint64_t rank_digits(const Table& digits, std::uint64_t base) {
  std::uint64_t r = 0;
  for (Element d : digits) r = r * base + d;
  return r;
}

Table unrank_digits(std::uint64_t index, std::uint64_t base, std::size_t length) {
  Table digits(length);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<Element>(index % base);
    index /= base;
  }
  return digits;
}

}  // namespace cec
