#pragma once

#include "cec/engine/checks_core.hpp"

// Semi-terminal object, semi-pairs and semi-products with their decorated
// propositions.
namespace cec::checks {

template <class C>
void def_semi_terminal(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto bang = c.bang(o[0]);
    const bool pure = c.is_pure(bang);
    s.each(s.homs(o[0], c.unit()), [&](const auto& g) {
      s.expect(pure && c.semi_eq(g, bang), [&](auto& w) { w.mor("g", g); });
    });
  });
}

template <class C>
void def_structure_pure(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.expect(c.is_pure(c.bang(o[0])) && c.is_pure(c.proj1(o[0], o[1])) && c.is_pure(c.proj2(o[0], o[1])),
             [](auto&) {});
  });
}

template <class C>
void def_semi_pair_fv(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]), q2 = c.proj2(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v) {
        const auto h = c.pair_fv(f, v);
        s.expect(c.compose(q1, h) == f && c.semi_eq(c.compose(q2, h), v),
                 [&](auto& w) { w.mor("f", f).mor("v", v); });
      });
    });
  });
}

template <class C>
void def_semi_pair_vf(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]), q2 = c.proj2(o[1], o[2]);
    s.each(s.pures(o[0], o[1]), [&](const auto& v) {
      s.each(s.homs(o[0], o[2]), [&](const auto& f) {
        const auto h = c.pair_vf(v, f);
        s.expect(c.semi_eq(c.compose(q1, h), v) && c.compose(q2, h) == f,
                 [&](auto& w) { w.mor("v", v).mor("f", f); });
      });
    });
  });
}

// Any f with q1 ∘ h ≡ f is q1 ∘ h itself, so the sweep only needs h and v.
template <class C>
void def_semi_pair_fv_unique(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]), q2 = c.proj2(o[1], o[2]);
    const auto& vs = s.pures(o[0], o[2]);
    s.sweep_hom(o[0], product(o[1], o[2]).carrier(), [&](const auto& h) {
      const auto f = c.compose(q1, h);
      const auto second = c.compose(q2, h);
      s.each(vs, [&](const auto& v) {
        if (!c.semi_eq(second, v)) return;
        s.expect(h == c.pair_fv(f, v), [&](auto& w) { w.mor("h", h).mor("v", v); });
      });
    });
  });
}

template <class C>
void def_semi_pair_vf_unique(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]), q2 = c.proj2(o[1], o[2]);
    const auto& vs = s.pures(o[0], o[1]);
    s.sweep_hom(o[0], product(o[1], o[2]).carrier(), [&](const auto& h) {
      const auto f = c.compose(q2, h);
      const auto first = c.compose(q1, h);
      s.each(vs, [&](const auto& v) {
        if (!c.semi_eq(first, v)) return;
        s.expect(h == c.pair_vf(v, f), [&](auto& w) { w.mor("h", h).mor("v", v); });
      });
    });
  });
}

template <class C>
void def_semi_pair_pure(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        const auto h = c.pair_fv(v1, v2);
        s.expect(h == c.pair_vf(v1, v2) && c.is_pure(h), [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void def_semi_product_fv(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v) {
        const auto p = semi_product_fv(c, f, v);
        s.expect(c.compose(q1, p) == c.compose(f, p1) && c.semi_eq(c.compose(q2, p), c.compose(v, p2)),
                 [&](auto& w) { w.mor("f", f).mor("v", v); });
      });
    });
  });
}

template <class C>
void def_semi_product_vf(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    s.each(s.pures(o[0], o[2]), [&](const auto& v) {
      s.each(s.homs(o[1], o[3]), [&](const auto& f) {
        const auto p = semi_product_vf(c, v, f);
        s.expect(c.semi_eq(c.compose(q1, p), c.compose(v, p1)) && c.compose(q2, p) == c.compose(f, p2),
                 [&](auto& w) { w.mor("v", v).mor("f", f); });
      });
    });
  });
}

// With an empty factor there is no section; the source product is empty, so
// fall back to quantifying over f directly.
template <class C>
void semi_product_unique_empty(Sweep<C>& s, const Objs& o, bool fv) {
  const C& c = s.cat();
  const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
  const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
  const auto& fs = fv ? s.homs(o[0], o[2]) : s.homs(o[1], o[3]);
  const auto& vs = fv ? s.pures(o[1], o[3]) : s.pures(o[0], o[2]);
  s.sweep_hom(product(o[0], o[1]).carrier(), product(o[2], o[3]).carrier(), [&](const auto& h) {
    s.each(fs, [&](const auto& f) {
      s.each(vs, [&](const auto& v) {
        const bool premise = fv ? c.compose(q1, h) == c.compose(f, p1) && c.semi_eq(c.compose(q2, h), c.compose(v, p2))
                                : c.semi_eq(c.compose(q1, h), c.compose(v, p1)) && c.compose(q2, h) == c.compose(f, p2);
        if (!premise) return;
        const auto built = fv ? semi_product_fv(c, f, v) : semi_product_vf(c, v, f);
        s.expect(h == built, [&](auto& w) { w.mor("h", h).mor("v", v); });
      });
    });
  });
}

// If q1 ∘ h ≡ f ∘ p1 then f ≡ q1 ∘ h ∘ σ for the section σ = ⟨id, x ∘ ⟨⟩⟩ at
// any point x of X2, so f is recovered from h and the first point.
template <class C>
void def_semi_product_fv_unique(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    if (o[1].empty()) return semi_product_unique_empty(s, o, true);
    const auto sigma = c.pair_fv(c.identity(o[0]), c.compose(s.points(o[1]).front(), c.bang(o[0])));
    std::vector<MorphismOf<C>> vp2;
    const auto& vs = s.pures(o[1], o[3]);
    for (const auto& v : vs) vp2.push_back(c.compose(v, p2));
    s.sweep_hom(product(o[0], o[1]).carrier(), product(o[2], o[3]).carrier(), [&](const auto& h) {
      const auto first = c.compose(q1, h);
      const auto f = c.compose(first, sigma);
      if (first != c.compose(f, p1)) return;
      const auto second = c.compose(q2, h);
      for (std::size_t i = 0; i < vs.size() && !s.decided(); ++i) {
        if (!c.semi_eq(second, vp2[i])) continue;
        s.expect(h == semi_product_fv(c, f, vs[i]), [&](auto& w) { w.mor("h", h).mor("v", vs[i]); });
      }
    });
  });
}

template <class C>
void def_semi_product_vf_unique(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    if (o[0].empty()) return semi_product_unique_empty(s, o, false);
    const auto sigma = c.pair_vf(c.compose(s.points(o[0]).front(), c.bang(o[1])), c.identity(o[1]));
    std::vector<MorphismOf<C>> vp1;
    const auto& vs = s.pures(o[0], o[2]);
    for (const auto& v : vs) vp1.push_back(c.compose(v, p1));
    s.sweep_hom(product(o[0], o[1]).carrier(), product(o[2], o[3]).carrier(), [&](const auto& h) {
      const auto second = c.compose(q2, h);
      const auto f = c.compose(second, sigma);
      if (second != c.compose(f, p2)) return;
      const auto first = c.compose(q1, h);
      for (std::size_t i = 0; i < vs.size() && !s.decided(); ++i) {
        if (!c.semi_eq(first, vp1[i])) continue;
        s.expect(h == semi_product_vf(c, vs[i], f), [&](auto& w) { w.mor("h", h).mor("v", vs[i]); });
      }
    });
  });
}

template <class C>
void def_semi_product_pure(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        const auto p = semi_product_fv(c, v1, v2);
        s.expect(p == semi_product_vf(c, v1, v2) && c.is_pure(p), [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

// f1 ≡ f1' ∧ v2 ≡ v2' ⇒ build(f1, v2) ≡ build(f1', v2'). The primed variables
// range over the ≡-class of the unprimed ones.
template <class C, class Build>
void congruence(Sweep<C>& s, const Objs& o, FinSet fx, FinSet fy, FinSet vx, FinSet vy, Build build) {
  (void)o;
  const auto& fs = s.homs(fx, fy);
  const auto& vs = s.pures(vx, vy);
  const auto fcls = equal_classes(fs);
  const auto vcls = equal_classes(vs);
  for (std::size_t i = 0; i < fs.size() && !s.decided(); ++i) {
    for (std::size_t i2 : fcls[i]) {
      for (std::size_t j = 0; j < vs.size() && !s.decided(); ++j) {
        const auto lhs = build(fs[i], vs[j]);
        for (std::size_t j2 : vcls[j]) {
          s.expect(lhs == build(fs[i2], vs[j2]), [&](auto& w) {
            w.mor("f1", fs[i]).mor("f1'", fs[i2]).mor("v2", vs[j]).mor("v2'", vs[j2]);
          });
        }
      }
    }
  }
}

template <class C>
void prop_congruence_decorated_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    congruence(s, o, o[0], o[1], o[0], o[2], [&](const auto& f, const auto& v) { return c.pair_fv(f, v); });
  });
}

template <class C>
void prop_congruence_decorated_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    congruence(s, o, o[0], o[2], o[1], o[3], [&](const auto& f, const auto& v) { return semi_product_fv(c, f, v); });
  });
}

template <class C>
void prop_composition_decorated_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v) {
      s.each(s.homs(o[1], o[2]), [&](const auto& g1) {
        const auto g1v = c.compose(g1, v);
        s.each(s.pures(o[1], o[3]), [&](const auto& w2) {
          s.expect(c.compose(c.pair_fv(g1, w2), v) == c.pair_fv(g1v, c.compose(w2, v)),
                   [&](auto& w) { w.mor("v", v).mor("g1", g1).mor("w2", w2); });
        });
      });
    });
  });
}

template <class C>
void prop_composition_decorated_1_sym(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v) {
      s.each(s.pures(o[1], o[2]), [&](const auto& w1) {
        const auto w1v = c.compose(w1, v);
        s.each(s.homs(o[1], o[3]), [&](const auto& g2) {
          s.expect(c.compose(c.pair_vf(w1, g2), v) == c.pair_vf(w1v, c.compose(g2, v)),
                   [&](auto& w) { w.mor("v", v).mor("w1", w1).mor("g2", g2); });
        });
      });
    });
  });
}

// objects X, Y1, Y2, Z1, Z2
template <class C>
void prop_composition_decorated_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& vs = s.pures(o[0], o[2]);
    const auto& ws = s.pures(o[2], o[4]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.homs(o[1], o[3]), [&](const auto& g1) {
        const auto g1f1 = c.compose(g1, f1);
        s.each(vs, [&](const auto& v2) {
          const auto pair = c.pair_fv(f1, v2);
          s.each(ws, [&](const auto& w2) {
            s.expect(c.compose(semi_product_fv(c, g1, w2), pair) == c.pair_fv(g1f1, c.compose(w2, v2)),
                     [&](auto& w) { w.mor("f1", f1).mor("g1", g1).mor("v2", v2).mor("w2", w2); });
          });
        });
      });
    });
  });
}

template <class C>
void prop_composition_decorated_2_sym(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& vs = s.pures(o[0], o[1]);
    const auto& ws = s.pures(o[1], o[3]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f2) {
      s.each(s.homs(o[2], o[4]), [&](const auto& g2) {
        const auto g2f2 = c.compose(g2, f2);
        s.each(vs, [&](const auto& v1) {
          const auto pair = c.pair_vf(v1, f2);
          s.each(ws, [&](const auto& w1) {
            s.expect(c.compose(semi_product_vf(c, w1, g2), pair) == c.pair_vf(c.compose(w1, v1), g2f2),
                     [&](auto& w) { w.mor("f2", f2).mor("g2", g2).mor("v1", v1).mor("w1", w1); });
          });
        });
      });
    });
  });
}

// objects X1, X2, Y1, Y2, Z1, Z2
template <class C>
void prop_composition_decorated_3(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& vs = s.pures(o[1], o[3]);
    const auto& ws = s.pures(o[3], o[5]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.homs(o[2], o[4]), [&](const auto& g1) {
        const auto g1f1 = c.compose(g1, f1);
        s.each(vs, [&](const auto& v2) {
          const auto fv = semi_product_fv(c, f1, v2);
          s.each(ws, [&](const auto& w2) {
            s.expect(c.compose(semi_product_fv(c, g1, w2), fv) == semi_product_fv(c, g1f1, c.compose(w2, v2)),
                     [&](auto& w) { w.mor("f1", f1).mor("g1", g1).mor("v2", v2).mor("w2", w2); });
          });
        });
      });
    });
  });
}

template <class C>
void prop_composition_decorated_3_sym(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& vs = s.pures(o[0], o[2]);
    const auto& ws = s.pures(o[2], o[4]);
    s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
      s.each(s.homs(o[3], o[5]), [&](const auto& g2) {
        const auto g2f2 = c.compose(g2, f2);
        s.each(vs, [&](const auto& v1) {
          const auto vf = semi_product_vf(c, v1, f2);
          s.each(ws, [&](const auto& w1) {
            s.expect(c.compose(semi_product_vf(c, w1, g2), vf) == semi_product_vf(c, c.compose(w1, v1), g2f2),
                     [&](auto& w) { w.mor("f2", f2).mor("g2", g2).mor("v1", v1).mor("w1", w1); });
          });
        });
      });
    });
  });
}

template <class C>
void prop_swap_decorated_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gy = swap_iso(c, o[1], o[2]).forward;
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        s.expect(c.compose(gy, c.pair_vf(v2, f1)) == c.pair_fv(f1, v2),
                 [&](auto& w) { w.mor("f1", f1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void prop_swap_decorated_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gx_inv = swap_iso(c, o[0], o[1]).backward;
    const auto gy = swap_iso(c, o[2], o[3]).forward;
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        s.expect(c.compose(gy, c.compose(semi_product_vf(c, v2, f1), gx_inv)) == semi_product_fv(c, f1, v2),
                 [&](auto& w) { w.mor("f1", f1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void prop_swap_decorated_2_sym(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gx_inv = swap_iso(c, o[0], o[1]).backward;
    const auto gy = swap_iso(c, o[2], o[3]).forward;
    s.each(s.homs(o[1], o[3]), [&](const auto& f2) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
        s.expect(c.compose(gy, c.compose(semi_product_fv(c, f2, v1), gx_inv)) == semi_product_vf(c, v1, f2),
                 [&](auto& w) { w.mor("f2", f2).mor("v1", v1); });
      });
    });
  });
}

template <class C>
void prop_assoc_decorated_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto ay = assoc_iso(c, o[1], o[2], o[3]).forward;
    s.each(s.homs(o[0], o[1]), [&](const auto& f1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        const auto f1v2 = c.pair_fv(f1, v2);
        s.each(s.pures(o[0], o[3]), [&](const auto& v3) {
          s.expect(c.compose(ay, c.pair_fv(f1, c.pair_fv(v2, v3))) == c.pair_fv(f1v2, v3),
                   [&](auto& w) { w.mor("f1", f1).mor("v2", v2).mor("v3", v3); });
        });
      });
    });
  });
}

template <class C>
void prop_assoc_decorated_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto ax = assoc_iso(c, o[0], o[1], o[2]).forward;
    const auto ay = assoc_iso(c, o[3], o[4], o[5]).forward;
    s.each(s.homs(o[0], o[3]), [&](const auto& f1) {
      s.each(s.pures(o[1], o[4]), [&](const auto& v2) {
        const auto f1v2 = semi_product_fv(c, f1, v2);
        s.each(s.pures(o[2], o[5]), [&](const auto& v3) {
          const auto lhs = c.compose(ay, semi_product_fv(c, f1, semi_product_fv(c, v2, v3)));
          const auto rhs = c.compose(semi_product_fv(c, f1v2, v3), ax);
          s.expect(lhs == rhs, [&](auto& w) { w.mor("f1", f1).mor("v2", v2).mor("v3", v3); });
        });
      });
    });
  });
}

template <class C>
void prop_parallelism_decorated(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto idx1 = c.identity(o[0]), idx2 = c.identity(o[1]);
    const auto idy1 = c.identity(o[2]), idy2 = c.identity(o[3]);
    s.each(s.homs(o[0], o[2]), [&](const auto& f1) {
      const auto f1_id = semi_product_fv(c, f1, idx2);
      const auto f1_idy = semi_product_fv(c, f1, idy2);
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        const auto p = semi_product_fv(c, f1, v2);
        const auto a = c.compose(semi_product_fv(c, idy1, v2), f1_id);
        const auto b = c.compose(f1_idy, semi_product_fv(c, idx1, v2));
        s.expect(p == a && p == b, [&](auto& w) { w.mor("f1", f1).mor("v2", v2); });
      });
    });
  });
}

}  // namespace cec::checks
