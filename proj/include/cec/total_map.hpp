#pragma once

#include <cstdint>
#include <string>

#include "cec/finite_set.hpp"

namespace cec {

// A function between finite sets: a morphism of the base cartesian category of
// sets. Every instance embeds these as its pure morphisms.
class TotalMap {
 public:
  TotalMap(FinSet source, FinSet target, Table table);
  TotalMap(Trusted, FinSet source, FinSet target, Table table)
      : source_(source), target_(target), table_(std::move(table)) {}

  FinSet source() const { return source_; }
  FinSet target() const { return target_; }
  const Table& table() const { return table_; }
  Element operator()(Element x) const { return table_[x]; }

  friend bool operator==(const TotalMap&, const TotalMap&) = default;

 private:
  FinSet source_;
  FinSet target_;
  Table table_;
};

TotalMap identity_map(FinSet x);
TotalMap compose(const TotalMap& g, const TotalMap& f);

TotalMap bang_map(FinSet x);
TotalMap proj1_map(FinSet a, FinSet b);
TotalMap proj2_map(FinSet a, FinSet b);
// <f1, f2> : X -> Y1 x Y2
TotalMap pair_map(const TotalMap& f1, const TotalMap& f2);
// f1 x f2 : X1 x X2 -> Y1 x Y2
TotalMap product_map(const TotalMap& f1, const TotalMap& f2);
// swap_map(a, b) : b x a -> a x b
TotalMap swap_map(FinSet a, FinSet b);
// assoc_map(a, b, c) : a x (b x c) -> (a x b) x c
TotalMap assoc_map(FinSet a, FinSet b, FinSet c);
// assoc_inv_map(a, b, c) : (a x b) x c -> a x (b x c)
TotalMap assoc_inv_map(FinSet a, FinSet b, FinSet c);
TotalMap diagonal_map(FinSet a);

// |y|^|x|, saturating.
std::uint64_t total_count(FinSet x, FinSet y);
// Lexicographic enumeration, first table entry most significant.
TotalMap total_at(FinSet x, FinSet y, std::uint64_t index);
std::uint64_t total_rank(const TotalMap& f);

std::string to_string(const TotalMap& f);

}  // namespace cec
