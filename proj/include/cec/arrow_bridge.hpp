#pragma once

#include "cec/cartesian_ops.hpp"
#include "cec/total_map.hpp"

namespace cec {

// Arrow operations on top of a cartesian effect category. Arrows from X to Y
// are the morphisms X -> Y themselves.
template <CartesianEffectCategory C>
class DerivedArrow {
 public:
  using M = MorphismOf<C>;

  explicit DerivedArrow(const C& c) : c_(c) {}

  const C& category() const { return c_; }

  M arr(const TotalMap& v) const { return c_.embed(v); }
  // f >>> g
  M then(const M& f, const M& g) const { return c_.compose(g, f); }
  // first f : X×Z -> Y×Z
  M first(const M& f, FinSet z) const { return semi_product_fv(c_, f, c_.identity(z)); }

  // second f = arr swap >>> first f >>> arr swap : Z×X -> Z×Y
  M second(const M& f, FinSet z) const {
    return then(then(arr(swap_map(f.source(), z)), first(f, z)), arr(swap_map(z, f.target())));
  }
  // f *** g = first f >>> second g
  M seqpar(const M& f, const M& g) const { return then(first(f, g.source()), second(g, f.target())); }
  // f &&& g = arr diag >>> (f *** g)
  M fanout(const M& f, const M& g) const { return then(arr(diagonal_map(f.source())), seqpar(f, g)); }

  M fst(FinSet x, FinSet y) const { return arr(proj1_map(x, y)); }

 private:
  const C& c_;
};

}  // namespace cec
