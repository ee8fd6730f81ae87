#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cec/finite_set.hpp"
#include "cec/total_map.hpp"

namespace cec {

// A total function S x X -> S x Y. Entry (s, x) sits at index s*|X| + x and
// holds s'*|Y| + y.
class StateMap {
 public:
  StateMap(FinSet states, FinSet source, FinSet target, Table table);
  StateMap(Trusted, FinSet states, FinSet source, FinSet target, Table table)
      : states_(states), source_(source), target_(target), table_(std::move(table)) {}

  FinSet states() const { return states_; }
  FinSet source() const { return source_; }
  FinSet target() const { return target_; }
  const Table& table() const { return table_; }

  // (s', y)
  std::pair<Element, Element> apply(Element s, Element x) const;

  friend bool operator==(const StateMap&, const StateMap&) = default;

 private:
  FinSet states_;
  FinSet source_;
  FinSet target_;
  Table table_;
};

// Sets and state-transforming functions over a fixed state set S. Pure = leaves
// the state unchanged with a state-independent value; f <= g iff the value
// components agree everywhere.
class StateCategory {
 public:
  using Morphism = StateMap;

  // |S| >= 1.
  explicit StateCategory(FinSet states);

  FinSet states() const { return states_; }
  std::string name() const { return "state"; }

  StateMap identity(FinSet x) const;
  StateMap compose(const StateMap& g, const StateMap& f) const;
  bool is_pure(const StateMap& f) const;
  bool semi_eq(const StateMap& f, const StateMap& g) const;

  std::uint64_t hom_size(FinSet x, FinSet y) const;
  StateMap hom_at(FinSet x, FinSet y, std::uint64_t index) const;
  std::uint64_t rank(const StateMap& f) const;

  StateMap embed(const TotalMap& t) const;
  std::optional<TotalMap> as_total(const StateMap& f) const;

  FinSet unit() const { return FinSet::unit(); }
  StateMap bang(FinSet x) const;
  StateMap proj1(FinSet a, FinSet b) const;
  StateMap proj2(FinSet a, FinSet b) const;
  StateMap pair_fv(const StateMap& f, const StateMap& v) const;
  StateMap pair_vf(const StateMap& v, const StateMap& f) const;

  // "S=2, 1->1 = [(1,0), (0,0)]", entries in (s, x) row-major order.
  std::string render(const StateMap& f) const;
  // Also accepts explicit "(s,x)->(s',y)" entries in any order.
  StateMap parse(std::string_view literal) const;

 private:
  FinSet states_;
};

}  // namespace cec
