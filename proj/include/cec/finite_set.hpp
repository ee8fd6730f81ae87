#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>

#include "cec/table.hpp"

namespace cec {

// Marks "undefined" in partial-map tables. Never a valid element.
inline constexpr Element kBottom = std::numeric_limits<Element>::max();

// Tag for constructors that skip table validation; used by operations whose
// results are valid by construction.
struct Trusted {};
inline constexpr Trusted trusted{};

// A finite set {0, ..., size-1}. The empty set is allowed.
class FinSet {
 public:
  constexpr FinSet() = default;
  constexpr explicit FinSet(std::size_t size) : size_(size) {}

  constexpr std::size_t size() const { return size_; }
  constexpr bool contains(Element e) const { return e < size_; }
  constexpr bool empty() const { return size_ == 0; }

  static constexpr FinSet unit() { return FinSet{1}; }

  friend constexpr auto operator<=>(FinSet, FinSet) = default;

 private:
  std::size_t size_ = 0;
};

// Cartesian product with row-major encoding (a, b) -> a * |right| + b.
class ProductSet {
 public:
  ProductSet(FinSet left, FinSet right);

  FinSet left() const { return left_; }
  FinSet right() const { return right_; }
  FinSet carrier() const { return FinSet{left_.size() * right_.size()}; }

  Element encode(Element a, Element b) const;
  std::pair<Element, Element> decode(Element e) const;

 private:
  FinSet left_;
  FinSet right_;
};

ProductSet product(FinSet left, FinSet right);

// Cardinality arithmetic that clamps at UINT64_MAX instead of wrapping.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

// Mixed-radix ranking with the first digit most significant.
std::uint64_t rank_digits(const Table& digits, std::uint64_t base);
Table unrank_digits(std::uint64_t index, std::uint64_t base, std::size_t length);

}  // namespace cec
