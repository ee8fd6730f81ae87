#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cec/finite_set.hpp"
#include "cec/total_map.hpp"

namespace cec {

// X -> Y + undefined, stored as a table with kBottom for undefined entries.
class PartialMap {
 public:
  PartialMap(FinSet source, FinSet target, Table table);
  PartialMap(Trusted, FinSet source, FinSet target, Table table)
      : source_(source), target_(target), table_(std::move(table)) {}

  FinSet source() const { return source_; }
  FinSet target() const { return target_; }
  const Table& table() const { return table_; }
  bool defined(Element x) const { return table_[x] != kBottom; }
  std::optional<Element> operator()(Element x) const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  FinSet source_;
  FinSet target_;
  Table table_;
};

// Sets and partial functions. Pure = total; f <= g iff D(f) is contained in
// D(g) and f, g agree on D(f).
class PartialCategory {
 public:
  using Morphism = PartialMap;

  std::string name() const { return "partial"; }

  PartialMap identity(FinSet x) const;
  PartialMap compose(const PartialMap& g, const PartialMap& f) const;
  bool is_pure(const PartialMap& f) const;
  bool semi_eq(const PartialMap& f, const PartialMap& g) const;

  // Digit 0 is "undefined", digit d is element d-1.
  std::uint64_t hom_size(FinSet x, FinSet y) const;
  PartialMap hom_at(FinSet x, FinSet y, std::uint64_t index) const;
  std::uint64_t rank(const PartialMap& f) const;

  PartialMap embed(const TotalMap& t) const;
  std::optional<TotalMap> as_total(const PartialMap& f) const;

  FinSet unit() const { return FinSet::unit(); }
  PartialMap bang(FinSet x) const;
  PartialMap proj1(FinSet a, FinSet b) const;
  PartialMap proj2(FinSet a, FinSet b) const;
  PartialMap pair_fv(const PartialMap& f, const PartialMap& v) const;
  PartialMap pair_vf(const PartialMap& v, const PartialMap& f) const;

  // "2->3 = [1, _]"
  std::string render(const PartialMap& f) const;
  // Accepts "f: 2->3 = [1, _]" or the unnamed form.
  PartialMap parse(std::string_view literal) const;
};

}  // namespace cec
