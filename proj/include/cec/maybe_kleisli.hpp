#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cec/finite_set.hpp"
#include "cec/partial_map.hpp"
#include "cec/total_map.hpp"

namespace cec {

// The "maybe" functor on objects: G(Y) = Y + 1, with the extra element |Y|.
FinSet maybe(FinSet y);
inline Element nothing(FinSet y) { return static_cast<Element>(y.size()); }

// A Kleisli arrow X -> G(Y), i.e. a total function into Y + 1.
class KleisliMap {
 public:
  KleisliMap(FinSet source, FinSet target, Table table);
  KleisliMap(Trusted, FinSet source, FinSet target, Table table)
      : source_(source), target_(target), table_(std::move(table)) {}

  FinSet source() const { return source_; }
  FinSet target() const { return target_; }
  const Table& table() const { return table_; }
  bool defined(Element x) const { return table_[x] != nothing(target_); }
  // The underlying set function X -> G(Y).
  TotalMap underlying() const;

  friend bool operator==(const KleisliMap&, const KleisliMap&) = default;

 private:
  FinSet source_;
  FinSet target_;
  Table table_;
};

// Strength t : G(Y1) x Y2 -> G(Y1 x Y2) and its mirror Y1 x G(Y2) -> G(Y1 x Y2).
TotalMap strength(FinSet y1, FinSet y2);
TotalMap strength_right(FinSet y1, FinSet y2);

// Kleisli category of the maybe monad. Semi-pairs go through the strength.
class MaybeKleisliCategory {
 public:
  using Morphism = KleisliMap;

  std::string name() const { return "kleisli-maybe"; }

  KleisliMap identity(FinSet x) const;
  KleisliMap compose(const KleisliMap& g, const KleisliMap& f) const;
  bool is_pure(const KleisliMap& f) const;
  bool semi_eq(const KleisliMap& f, const KleisliMap& g) const;

  std::uint64_t hom_size(FinSet x, FinSet y) const;
  KleisliMap hom_at(FinSet x, FinSet y, std::uint64_t index) const;
  std::uint64_t rank(const KleisliMap& f) const;

  KleisliMap embed(const TotalMap& t) const;
  std::optional<TotalMap> as_total(const KleisliMap& f) const;

  FinSet unit() const { return FinSet::unit(); }
  KleisliMap bang(FinSet x) const;
  KleisliMap proj1(FinSet a, FinSet b) const;
  KleisliMap proj2(FinSet a, FinSet b) const;
  KleisliMap pair_fv(const KleisliMap& f, const KleisliMap& v) const;
  KleisliMap pair_vf(const KleisliMap& v, const KleisliMap& f) const;

  std::string render(const KleisliMap& f) const;
  KleisliMap parse(std::string_view literal) const;
};

KleisliMap to_kleisli(const PartialMap& f);
PartialMap from_kleisli(const KleisliMap& k);

}  // namespace cec
