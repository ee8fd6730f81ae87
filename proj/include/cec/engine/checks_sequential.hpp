#pragma once

#include "cec/engine/checks_core.hpp"

// Sequential products and the searches that separate them from products.
namespace cec::checks {

template <class C>
void prop_seq_lproduct(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        s.expect(seq_left(c, f1, v2) == semi_product_fv(c, f1, v2), [&](auto& w) { w.mor("f1", f1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void prop_seq_rproduct(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        s.expect(seq_right(c, v1, f2) == semi_product_vf(c, v1, f2), [&](auto& w) { w.mor("v1", v1).mor("f2", f2); });
      });
    });
  });
}

template <class C>
void prop_seq_pair_pure(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        const auto p = c.pair_fv(v1, v2);
        s.expect(seq_pair_left(c, v1, v2) == p && seq_pair_right(c, v1, v2) == p,
                 [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void prop_seq_congruence(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& f1s = s.homs(o[0], o[2]);
    const auto& f2s = s.homs(o[1], o[3]);
    const auto c1 = equal_classes(f1s);
    const auto c2 = equal_classes(f2s);
    for (std::size_t i = 0; i < f1s.size() && !s.decided(); ++i) {
      for (std::size_t j = 0; j < f2s.size() && !s.decided(); ++j) {
        const auto lhs = seq_left(c, f1s[i], f2s[j]);
        for (std::size_t i2 : c1[i]) {
          for (std::size_t j2 : c2[j]) {
            s.expect(lhs == seq_left(c, f1s[i2], f2s[j2]), [&](auto& w) {
              w.mor("f1", f1s[i]).mor("f2", f2s[j]).mor("f1'", f1s[i2]).mor("f2'", f2s[j2]);
            });
          }
        }
      }
    }
  });
}

// Both sides are expanded through f ⋉ g = (id × g) ∘ (f × id) so that every
// factor depending on fewer variables is built once, outside the inner loops.
// objects X1, X2, Y1, Y2, Z1, Z2
template <class C>
void prop_seq_comp(Sweep<C>& s) {
  const C& c = s.cat();
  using M = MorphismOf<C>;
  s.objects([&](const Objs& o) {
    const FinSet x1 = o[0], x2 = o[1], y1 = o[2], y2 = o[3], z1 = o[4], z2 = o[5];
    const auto& g1s = s.homs(y1, z1);
    const auto& f1s = s.homs(x1, y1);
    const auto& g2s = s.homs(y2, z2);
    const auto& v2s = s.pures(x2, y2);
    const auto idz1 = c.identity(z1), idy2 = c.identity(y2), idx2 = c.identity(x2);

    std::vector<M> id_g2;
    std::vector<std::vector<M>> id_g2v2(g2s.size());
    for (std::size_t k = 0; k < g2s.size(); ++k) {
      id_g2.push_back(semi_product_vf(c, idz1, g2s[k]));
      for (const auto& v2 : v2s) id_g2v2[k].push_back(semi_product_vf(c, idz1, c.compose(g2s[k], v2)));
    }
    std::vector<std::vector<M>> f1_v2(f1s.size());
    for (std::size_t j = 0; j < f1s.size(); ++j) {
      for (const auto& v2 : v2s) f1_v2[j].push_back(semi_product_fv(c, f1s[j], v2));
    }

    std::vector<M> middle;
    for (std::size_t i = 0; i < g1s.size() && !s.decided(); ++i) {
      const auto g1_id = semi_product_fv(c, g1s[i], idy2);
      for (std::size_t j = 0; j < f1s.size() && !s.decided(); ++j) {
        const auto rhs_right = semi_product_fv(c, c.compose(g1s[i], f1s[j]), idx2);
        middle.clear();
        for (const auto& p : f1_v2[j]) middle.push_back(c.compose(g1_id, p));
        for (std::size_t k = 0; k < g2s.size() && !s.decided(); ++k) {
          for (std::size_t l = 0; l < v2s.size() && !s.decided(); ++l) {
            s.expect(c.compose(id_g2[k], middle[l]) == c.compose(id_g2v2[k][l], rhs_right), [&](auto& w) {
              w.mor("g1", g1s[i]).mor("f1", f1s[j]).mor("g2", g2s[k]).mor("v2", v2s[l]);
            });
          }
        }
      }
    }
  });
}

template <class C>
void prop_seq_swap(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gx_inv = swap_iso(c, o[0], o[1]).backward;
    const auto gy = swap_iso(c, o[2], o[3]).forward;
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        s.expect(c.compose(gy, c.compose(seq_right(c, f2, f1), gx_inv)) == seq_left(c, f1, f2),
                 [&](auto& w) { w.mor("f1", f1).mor("f2", f2); });
      });
    });
  });
}

// Expanded like prop_seq_comp.
// objects X1, X2, X3, Y1, Y2, Y3; quantifier order f2, f3, f1
template <class C>
void prop_seq_assoc(Sweep<C>& s) {
  const C& c = s.cat();
  using M = MorphismOf<C>;
  s.objects([&](const Objs& o) {
    const FinSet x1 = o[0], x2 = o[1], x3 = o[2], y1 = o[3], y2 = o[4], y3 = o[5];
    const auto& f1s = s.homs(x1, y1);
    const auto& f2s = s.homs(x2, y2);
    const auto& f3s = s.homs(x3, y3);
    const auto ax = assoc_iso(c, x1, x2, x3).forward;
    const auto ay = assoc_iso(c, y1, y2, y3).forward;
    const auto idx23 = c.identity(product(x2, x3).carrier());
    const auto idy12 = c.identity(product(y1, y2).carrier());
    const auto idy1 = c.identity(y1), idx3 = c.identity(x3);

    std::vector<M> f1_id;
    for (const auto& f1 : f1s) f1_id.push_back(semi_product_fv(c, f1, idx23));

    std::vector<M> a_id_ax;
    for (std::size_t j = 0; j < f2s.size() && !s.decided(); ++j) {
      a_id_ax.clear();
      for (const auto& f1 : f1s) a_id_ax.push_back(c.compose(semi_product_fv(c, seq_left(c, f1, f2s[j]), idx3), ax));
      for (std::size_t k = 0; k < f3s.size() && !s.decided(); ++k) {
        const auto b = seq_left(c, f2s[j], f3s[k]);
        const auto ay_id_b = c.compose(ay, semi_product_vf(c, idy1, b));
        const auto id_f3 = semi_product_vf(c, idy12, f3s[k]);
        for (std::size_t i = 0; i < f1s.size() && !s.decided(); ++i) {
          s.expect(c.compose(ay_id_b, f1_id[i]) == c.compose(id_f3, a_id_ax[i]),
                   [&](auto& w) { w.mor("f2", f2s[j]).mor("f3", f3s[k]).mor("f1", f1s[i]); });
        }
      }
    }
  });
}

template <class C>
void prop_seq_val(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      const auto f1p1 = c.compose(f1, p1);
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        s.expect(c.semi_eq(c.compose(q1, seq_left(c, f1, f2)), f1p1),
                 [&](auto& w) { w.mor("f1", f1).mor("f2", f2); });
      });
    });
  });
}

// objects X1, Y1, X2
template <class C>
void lemma_seq_terminal(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto idy1 = c.identity(o[1]);
    const auto bx1 = c.bang(o[0]), by1 = c.bang(o[1]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.points(o[2]), [&](const auto& x2) {
        s.expect(c.compose(c.pair_fv(idy1, c.compose(x2, by1)), f1) == c.pair_fv(f1, c.compose(x2, bx1)),
                 [&](auto& w) { w.mor("f1", f1).mor("x2", x2); });
      });
    });
  });
}

template <class C>
void prop_seq_com(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q2 = c.proj2(o[2], o[3]);
    const auto idx1 = c.identity(o[0]);
    const auto bx1 = c.bang(o[0]), by1 = c.bang(o[2]);
    const auto& xs = s.points(o[1]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      const auto bf1 = c.compose(by1, f1);
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        const auto q2l = c.compose(q2, seq_left(c, f1, f2));
        s.each(xs, [&](const auto& x2) {
          const auto lhs = c.compose(q2l, c.pair_fv(idx1, c.compose(x2, bx1)));
          const auto rhs = c.compose(f2, c.compose(x2, bf1));
          s.expect(lhs == rhs, [&](auto& w) { w.mor("f1", f1).mor("f2", f2).mor("x2", x2); });
        });
      });
    });
  });
}

template <class C>
void seq_prod_points(Sweep<C>& s, bool value) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    const auto by1 = c.bang(o[2]);
    const auto& x1s = s.points(o[0]);
    const auto& x2s = s.points(o[1]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        const auto l = seq_left(c, f1, f2);
        const auto proj = c.compose(value ? q1 : q2, l);
        s.each(x1s, [&](const auto& x1) {
          const auto f1x1 = c.compose(f1, x1);
          s.each(x2s, [&](const auto& x2) {
            const auto lhs = c.compose(proj, c.pair_fv(x1, x2));
            const bool ok = value ? c.semi_eq(lhs, f1x1)
                                  : lhs == c.compose(f2, c.compose(x2, c.compose(by1, f1x1)));
            s.expect(ok, [&](auto& w) { w.mor("f1", f1).mor("f2", f2).mor("x1", x1).mor("x2", x2); });
          });
        });
      });
    });
  });
}

template <class C>
void thm_seq_prod_value(Sweep<C>& s) {
  seq_prod_points(s, true);
}

template <class C>
void thm_seq_prod_effect(Sweep<C>& s) {
  seq_prod_points(s, false);
}

template <class C>
void cor_seq_pair_value(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.homs(o[0], o[2]), [&](const auto& f2) {
        s.expect(c.semi_eq(c.compose(q1, seq_pair_left(c, f1, f2)), f1),
                 [&](auto& w) { w.mor("f1", f1).mor("f2", f2); });
      });
    });
  });
}

template <class C>
void seq_pair_points(Sweep<C>& s, bool value) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]), q2 = c.proj2(o[1], o[2]);
    const auto by1 = c.bang(o[1]);
    const auto& xs = s.points(o[0]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.homs(o[0], o[2]), [&](const auto& f2) {
        const auto proj = c.compose(value ? q1 : q2, seq_pair_left(c, f1, f2));
        s.each(xs, [&](const auto& x) {
          const auto lhs = c.compose(proj, x);
          const auto f1x = c.compose(f1, x);
          const bool ok = value ? c.semi_eq(lhs, f1x) : lhs == c.compose(f2, c.compose(x, c.compose(by1, f1x)));
          s.expect(ok, [&](auto& w) { w.mor("f1", f1).mor("f2", f2).mor("x", x); });
        });
      });
    });
  });
}

template <class C>
void cor_seq_pair_point(Sweep<C>& s) {
  seq_pair_points(s, true);
}

template <class C>
void cor_seq_pair_effect(Sweep<C>& s) {
  seq_pair_points(s, false);
}

template <class C>
void witness_seq_not_parallel(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
        s.found_if(seq_left(c, f1, f2) != seq_right(c, f1, f2), [&](auto& w) { w.mor("f1", f1).mor("f2", f2); });
      });
    });
  });
}

template <class C>
void witness_fanout_not_product(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.homs(o[0], o[2]), [&](const auto& g) {
        s.found_if(c.compose(q1, seq_pair_left(c, f, g)) != f, [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void witness_replacement_fails(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& gs = s.homs(o[0], o[1]);
    const auto& hs = s.homs(o[1], o[2]);
    s.each(semi_pairs_of(c, gs), [&](const auto& ij) {
      const auto& g1 = gs[ij.first];
      const auto& g2 = gs[ij.second];
      s.each(hs, [&](const auto& h) {
        s.found_if(!c.semi_eq(c.compose(h, g1), c.compose(h, g2)),
                   [&](auto& w) { w.mor("g1", g1).mor("g2", g2).mor("h", h); });
      });
    });
  });
}

template <class C>
void witness_semi_not_symmetric(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& hs = s.homs(o[0], o[1]);
    s.each(hs, [&](const auto& f) {
      s.each(hs, [&](const auto& g) {
        if (!c.semi_eq(f, g)) return;
        s.found_if(!c.semi_eq(g, f), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

}  // namespace cec::checks
