#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "cec/finite_set.hpp"
#include "cec/total_map.hpp"

namespace cec {

// An effect category over finite sets: morphisms with a pure subcategory, the
// strong relation (table equality) and the semi-congruence.
//
// hom_at/rank enumerate hom(X, Y) lexicographically; pure morphisms are exactly
// the images of embed, enumerated in the order of total_at.
template <class C>
concept EffectCategory = requires(const C& c, const typename C::Morphism& f, FinSet x,
                                  std::uint64_t i, const TotalMap& t) {
  typename C::Morphism;
  { c.name() } -> std::convertible_to<std::string>;
  { f.source() } -> std::same_as<FinSet>;
  { f.target() } -> std::same_as<FinSet>;
  { f == f } -> std::same_as<bool>;
  { c.identity(x) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.is_pure(f) } -> std::same_as<bool>;
  { c.semi_eq(f, f) } -> std::same_as<bool>;
  { c.hom_size(x, x) } -> std::same_as<std::uint64_t>;
  { c.hom_at(x, x, i) } -> std::same_as<typename C::Morphism>;
  { c.rank(f) } -> std::same_as<std::uint64_t>;
  { c.embed(t) } -> std::same_as<typename C::Morphism>;
  { c.render(f) } -> std::same_as<std::string>;
};

// Adds the semi-terminal object and the two semi-pair constructions. Pairs
// throw PurityViolation when the designated component is not pure.
template <class C>
concept CartesianEffectCategory =
    EffectCategory<C> && requires(const C& c, const typename C::Morphism& f, FinSet x) {
      { c.unit() } -> std::same_as<FinSet>;
      { c.bang(x) } -> std::same_as<typename C::Morphism>;
      { c.proj1(x, x) } -> std::same_as<typename C::Morphism>;
      { c.proj2(x, x) } -> std::same_as<typename C::Morphism>;
      { c.pair_fv(f, f) } -> std::same_as<typename C::Morphism>;
      { c.pair_vf(f, f) } -> std::same_as<typename C::Morphism>;
    };

template <class C>
using MorphismOf = typename C::Morphism;

// The strong relation is table equality in every instance.
template <EffectCategory C>
bool strong_eq(const C&, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  return f == g;
}

template <EffectCategory C>
std::uint64_t pure_size(const C&, FinSet x, FinSet y) {
  return total_count(x, y);
}

template <EffectCategory C>
MorphismOf<C> pure_at(const C& c, FinSet x, FinSet y, std::uint64_t index) {
  return c.embed(total_at(x, y, index));
}

}  // namespace cec
