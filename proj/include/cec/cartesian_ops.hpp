#pragma once

#include <vector>

#include "cec/effect_category.hpp"
#include "cec/error.hpp"

namespace cec {

// Derived constructions of a cartesian effect category, built only from the
// instance primitives (identity, compose, projections, semi-pairs).

template <class M>
struct StructuralIso {
  M forward;
  M backward;
};

// f1 x v2 = <f1 o p1, v2 o p2>
template <CartesianEffectCategory C>
MorphismOf<C> semi_product_fv(const C& c, const MorphismOf<C>& f1, const MorphismOf<C>& v2) {
  const FinSet x1 = f1.source(), x2 = v2.source();
  return c.pair_fv(c.compose(f1, c.proj1(x1, x2)), c.compose(v2, c.proj2(x1, x2)));
}

// v1 x f2 = <v1 o p1, f2 o p2>
template <CartesianEffectCategory C>
MorphismOf<C> semi_product_vf(const C& c, const MorphismOf<C>& v1, const MorphismOf<C>& f2) {
  const FinSet x1 = v1.source(), x2 = f2.source();
  return c.pair_vf(c.compose(v1, c.proj1(x1, x2)), c.compose(f2, c.proj2(x1, x2)));
}

// Whichever semi-product is well formed; the fv form when both components are pure.
template <CartesianEffectCategory C>
MorphismOf<C> semi_product(const C& c, const MorphismOf<C>& a, const MorphismOf<C>& b) {
  if (c.is_pure(b)) return semi_product_fv(c, a, b);
  if (c.is_pure(a)) return semi_product_vf(c, a, b);
  throw PurityViolation("semi-product needs a pure component");
}

template <CartesianEffectCategory C>
MorphismOf<C> semi_pair(const C& c, const MorphismOf<C>& a, const MorphismOf<C>& b) {
  if (c.is_pure(b)) return c.pair_fv(a, b);
  if (c.is_pure(a)) return c.pair_vf(a, b);
  throw PurityViolation("semi-pair needs a pure component");
}

// forward : X2 x X1 -> X1 x X2
template <CartesianEffectCategory C>
StructuralIso<MorphismOf<C>> swap_iso(const C& c, FinSet x1, FinSet x2) {
  return {c.pair_fv(c.proj2(x2, x1), c.proj1(x2, x1)), c.pair_fv(c.proj2(x1, x2), c.proj1(x1, x2))};
}

// forward : X1 x (X2 x X3) -> (X1 x X2) x X3
template <CartesianEffectCategory C>
StructuralIso<MorphismOf<C>> assoc_iso(const C& c, FinSet x1, FinSet x2, FinSet x3) {
  const FinSet x23 = product(x2, x3).carrier();
  const FinSet x12 = product(x1, x2).carrier();
  const auto right = c.proj2(x1, x23);
  auto forward = c.pair_fv(c.pair_fv(c.proj1(x1, x23), c.compose(c.proj1(x2, x3), right)),
                           c.compose(c.proj2(x2, x3), right));
  const auto left = c.proj1(x12, x3);
  auto backward = c.pair_fv(c.compose(c.proj1(x1, x2), left),
                            c.pair_fv(c.compose(c.proj2(x1, x2), left), c.proj2(x12, x3)));
  return {std::move(forward), std::move(backward)};
}

// rho_X = p1 : X x U -> X
template <CartesianEffectCategory C>
MorphismOf<C> unit_proj(const C& c, FinSet x) {
  return c.proj1(x, c.unit());
}

template <CartesianEffectCategory C>
MorphismOf<C> diagonal(const C& c, FinSet x) {
  return c.pair_fv(c.identity(x), c.identity(x));
}

// f1 |x f2 = (id x f2) o (f1 x id): f1 runs first.
template <CartesianEffectCategory C>
MorphismOf<C> seq_left(const C& c, const MorphismOf<C>& f1, const MorphismOf<C>& f2) {
  return c.compose(semi_product_vf(c, c.identity(f1.target()), f2),
                   semi_product_fv(c, f1, c.identity(f2.source())));
}

// f1 x| f2 = (f1 x id) o (id x f2): f2 runs first.
template <CartesianEffectCategory C>
MorphismOf<C> seq_right(const C& c, const MorphismOf<C>& f1, const MorphismOf<C>& f2) {
  return c.compose(semi_product_fv(c, f1, c.identity(f2.target())),
                   semi_product_vf(c, c.identity(f1.source()), f2));
}

// <f1, f2>_l = (f1 |x f2) o <id, id>
template <CartesianEffectCategory C>
MorphismOf<C> seq_pair_left(const C& c, const MorphismOf<C>& f1, const MorphismOf<C>& f2) {
  if (f1.source() != f2.source()) throw UsageError("sequential pair: sources differ");
  return c.compose(seq_left(c, f1, f2), diagonal(c, f1.source()));
}

template <CartesianEffectCategory C>
MorphismOf<C> seq_pair_right(const C& c, const MorphismOf<C>& f1, const MorphismOf<C>& f2) {
  if (f1.source() != f2.source()) throw UsageError("sequential pair: sources differ");
  return c.compose(seq_right(c, f1, f2), diagonal(c, f1.source()));
}

// Pure morphisms U -> X, in enumeration order.
template <CartesianEffectCategory C>
std::vector<MorphismOf<C>> pure_points(const C& c, FinSet x) {
  std::vector<MorphismOf<C>> out;
  const std::uint64_t n = pure_size(c, c.unit(), x);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(pure_at(c, c.unit(), x, i));
  return out;
}

}  // namespace cec
