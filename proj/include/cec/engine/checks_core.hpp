#pragma once

#include <set>

#include "cec/engine/sweep.hpp"

// Effect category axioms, purity closure, and products on the pure fragment.
namespace cec::checks {

using Objs = std::vector<FinSet>;

template <class C>
void cat_unit_left(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto id = c.identity(o[1]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(c.compose(id, f) == f, [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void cat_unit_right(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto id = c.identity(o[0]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(c.compose(f, id) == f, [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void cat_assoc(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& hs = s.homs(o[2], o[3]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.homs(o[1], o[2]), [&](const auto& g) {
        const auto gf = c.compose(g, f);
        s.each(hs, [&](const auto& h) {
          s.expect(c.compose(h, gf) == c.compose(c.compose(h, g), f),
                   [&](auto& w) { w.mor("f", f).mor("g", g).mor("h", h); });
        });
      });
    });
  });
}

template <class C>
void effect_pure_wide(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const bool id_pure = c.is_pure(c.identity(o[0]));
    s.each(s.pures(o[0], o[1]), [&](const auto& v) {
      s.each(s.pures(o[1], o[2]), [&](const auto& wm) {
        s.expect(id_pure && c.is_pure(v) && c.is_pure(c.compose(wm, v)),
                 [&](auto& w) { w.mor("v", v).mor("w", wm); });
      });
    });
  });
}

template <class C>
void effect_pure_embedding(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    std::set<std::uint64_t> embedded;
    for (const auto& v : s.pures(o[0], o[1])) embedded.insert(c.rank(v));
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(c.is_pure(f) == embedded.contains(c.rank(f)), [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void effect_weaker(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(c.semi_eq(f, f), [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void effect_transitive(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& hs = s.homs(o[0], o[1]);
    const auto le = semi_matrix(c, hs);
    const std::size_t n = hs.size();
    for (std::size_t i = 0; i < n && !s.decided(); ++i) {
      for (std::size_t j = 0; j < n && !s.decided(); ++j) {
        if (!le[i * n + j]) continue;
        for (std::size_t k = 0; k < n && !s.decided(); ++k) {
          if (!le[j * n + k]) continue;
          s.expect(le[i * n + k], [&](auto& w) { w.mor("f", hs[i]).mor("g", hs[j]).mor("h", hs[k]); });
        }
      }
    }
  });
}

template <class C>
void effect_coincide_on_pure(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& ps = s.pures(o[0], o[1]);
    s.each(ps, [&](const auto& v1) {
      s.each(ps, [&](const auto& v2) {
        s.expect(c.semi_eq(v1, v2) == (v1 == v2), [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

// Pairs (i, j) with hs[i] ≲ hs[j], in enumeration order.
template <class C>
std::vector<std::pair<std::size_t, std::size_t>> semi_pairs_of(const C& c, const std::vector<MorphismOf<C>>& hs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (c.semi_eq(hs[i], hs[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

template <class C>
void effect_substitution(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& gs = s.homs(o[1], o[2]);
    const auto related = semi_pairs_of(c, gs);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(related, [&](const auto& ij) {
        const auto& g1 = gs[ij.first];
        const auto& g2 = gs[ij.second];
        s.expect(c.semi_eq(c.compose(g1, f), c.compose(g2, f)),
                 [&](auto& w) { w.mor("f", f).mor("g1", g1).mor("g2", g2); });
      });
    });
  });
}

// h ranges over `outer`; pure for the law, all morphisms for the diagnostic.
template <class C>
void replacement_over(Sweep<C>& s, bool pure_only, const char* name) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& gs = s.homs(o[0], o[1]);
    const auto& hs = pure_only ? s.pures(o[1], o[2]) : s.homs(o[1], o[2]);
    s.each(semi_pairs_of(c, gs), [&](const auto& ij) {
      const auto& g1 = gs[ij.first];
      const auto& g2 = gs[ij.second];
      s.each(hs, [&](const auto& h) {
        s.expect(c.semi_eq(c.compose(h, g1), c.compose(h, g2)),
                 [&](auto& w) { w.mor("g1", g1).mor("g2", g2).mor(name, h); });
      });
    });
  });
}

template <class C>
void effect_replacement_pure(Sweep<C>& s) {
  replacement_over(s, true, "v");
}

template <class C>
void diag_replacement_all(Sweep<C>& s) {
  replacement_over(s, false, "h");
}

template <class C>
void diag_semi_symmetric(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& hs = s.homs(o[0], o[1]);
    s.each(hs, [&](const auto& f) {
      s.each(hs, [&](const auto& g) {
        if (!c.semi_eq(f, g)) return;
        s.expect(c.semi_eq(g, f), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void purity_identity(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) { s.expect(c.is_pure(c.identity(o[0])), [](auto&) {}); });
}

template <class C>
void purity_closed(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& gs = s.homs(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      if (!c.is_pure(f)) return;
      s.each(gs, [&](const auto& g) {
        if (!c.is_pure(g)) return;
        s.expect(c.is_pure(c.compose(g, f)), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void purity_reflects(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto& gs = s.homs(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      const bool fp = c.is_pure(f);
      s.each(gs, [&](const auto& g) {
        if (!c.is_pure(c.compose(g, f))) return;
        s.expect(fp && c.is_pure(g), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void basic_terminal(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto bang = c.bang(o[0]);
    s.each(s.pures(o[0], c.unit()), [&](const auto& v) {
      s.expect(v == bang, [&](auto& w) { w.mor("v", v); });
    });
  });
}

template <class C>
void basic_pair(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]);
    const auto q2 = c.proj2(o[1], o[2]);
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        const auto h = c.pair_fv(v1, v2);
        s.expect(c.compose(q1, h) == v1 && c.compose(q2, h) == v2 && c.is_pure(h),
                 [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void basic_pair_unique(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto q1 = c.proj1(o[1], o[2]);
    const auto q2 = c.proj2(o[1], o[2]);
    s.each(s.pures(o[0], product(o[1], o[2]).carrier()), [&](const auto& h) {
      s.expect(h == c.pair_fv(c.compose(q1, h), c.compose(q2, h)), [&](auto& w) { w.mor("h", h); });
    });
  });
}

template <class C>
void basic_product(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto p1 = c.proj1(o[0], o[1]), p2 = c.proj2(o[0], o[1]);
    const auto q1 = c.proj1(o[2], o[3]), q2 = c.proj2(o[2], o[3]);
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        const auto p = semi_product_fv(c, v1, v2);
        s.expect(c.compose(q1, p) == c.compose(v1, p1) && c.compose(q2, p) == c.compose(v2, p2),
                 [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void basic_composition_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v) {
      s.each(s.pures(o[1], o[2]), [&](const auto& w1) {
        s.each(s.pures(o[1], o[3]), [&](const auto& w2) {
          s.expect(c.compose(c.pair_fv(w1, w2), v) == c.pair_fv(c.compose(w1, v), c.compose(w2, v)),
                   [&](auto& w) { w.mor("v", v).mor("w1", w1).mor("w2", w2); });
        });
      });
    });
  });
}

template <class C>
void basic_composition_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        const auto pv = c.pair_fv(v1, v2);
        s.each(s.pures(o[1], o[3]), [&](const auto& w1) {
          s.each(s.pures(o[2], o[4]), [&](const auto& w2) {
            s.expect(c.compose(semi_product_fv(c, w1, w2), pv) == c.pair_fv(c.compose(w1, v1), c.compose(w2, v2)),
                     [&](auto& w) { w.mor("v1", v1).mor("v2", v2).mor("w1", w1).mor("w2", w2); });
          });
        });
      });
    });
  });
}

template <class C>
void basic_composition_3(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        const auto pv = semi_product_fv(c, v1, v2);
        s.each(s.pures(o[2], o[4]), [&](const auto& w1) {
          s.each(s.pures(o[3], o[5]), [&](const auto& w2) {
            s.expect(c.compose(semi_product_fv(c, w1, w2), pv) ==
                         semi_product_fv(c, c.compose(w1, v1), c.compose(w2, v2)),
                     [&](auto& w) { w.mor("v1", v1).mor("v2", v2).mor("w1", w1).mor("w2", w2); });
          });
        });
      });
    });
  });
}

template <class C>
void basic_swap_iso(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto g12 = swap_iso(c, o[0], o[1]).forward;  // X2×X1 → X1×X2
    const auto g21 = swap_iso(c, o[1], o[0]).forward;  // X1×X2 → X2×X1
    const bool ok = c.compose(g21, g12) == c.identity(product(o[1], o[0]).carrier()) &&
                    c.compose(g12, g21) == c.identity(product(o[0], o[1]).carrier()) && c.is_pure(g12) &&
                    c.is_pure(g21);
    s.expect(ok, [](auto&) {});
  });
}

template <class C>
void basic_swap_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gy = swap_iso(c, o[1], o[2]).forward;
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        s.expect(c.compose(gy, c.pair_fv(v2, v1)) == c.pair_fv(v1, v2),
                 [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void basic_swap_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto gx_inv = swap_iso(c, o[0], o[1]).backward;
    const auto gy = swap_iso(c, o[2], o[3]).forward;
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        s.expect(c.compose(gy, c.compose(semi_product_fv(c, v2, v1), gx_inv)) == semi_product_fv(c, v1, v2),
                 [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

template <class C>
void basic_assoc_iso(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto a = assoc_iso(c, o[0], o[1], o[2]);
    const bool ok = c.compose(a.backward, a.forward) == c.identity(a.forward.source()) &&
                    c.compose(a.forward, a.backward) == c.identity(a.backward.source()) && c.is_pure(a.forward) &&
                    c.is_pure(a.backward);
    s.expect(ok, [](auto&) {});
  });
}

template <class C>
void basic_assoc_1(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto ay = assoc_iso(c, o[1], o[2], o[3]).forward;
    s.each(s.pures(o[0], o[1]), [&](const auto& v1) {
      s.each(s.pures(o[0], o[2]), [&](const auto& v2) {
        s.each(s.pures(o[0], o[3]), [&](const auto& v3) {
          s.expect(c.compose(ay, c.pair_fv(v1, c.pair_fv(v2, v3))) == c.pair_fv(c.pair_fv(v1, v2), v3),
                   [&](auto& w) { w.mor("v1", v1).mor("v2", v2).mor("v3", v3); });
        });
      });
    });
  });
}

template <class C>
void basic_assoc_2(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto ax = assoc_iso(c, o[0], o[1], o[2]).forward;
    const auto ay = assoc_iso(c, o[3], o[4], o[5]).forward;
    s.each(s.pures(o[0], o[3]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[4]), [&](const auto& v2) {
        s.each(s.pures(o[2], o[5]), [&](const auto& v3) {
          const auto lhs = c.compose(ay, semi_product_fv(c, v1, semi_product_fv(c, v2, v3)));
          const auto rhs = c.compose(semi_product_fv(c, semi_product_fv(c, v1, v2), v3), ax);
          s.expect(lhs == rhs, [&](auto& w) { w.mor("v1", v1).mor("v2", v2).mor("v3", v3); });
        });
      });
    });
  });
}

template <class C>
void basic_unit_proj_iso(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto rho = unit_proj(c, o[0]);
    const auto k = c.pair_fv(c.identity(o[0]), c.bang(o[0]));
    s.expect(c.compose(rho, k) == c.identity(o[0]) && c.compose(k, rho) == c.identity(rho.source()),
             [](auto&) {});
  });
}

template <class C>
void basic_parallelism(Sweep<C>& s) {
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto idx1 = c.identity(o[0]), idx2 = c.identity(o[1]);
    const auto idy1 = c.identity(o[2]), idy2 = c.identity(o[3]);
    s.each(s.pures(o[0], o[2]), [&](const auto& v1) {
      s.each(s.pures(o[1], o[3]), [&](const auto& v2) {
        const auto p = semi_product_fv(c, v1, v2);
        const auto a = c.compose(semi_product_fv(c, idy1, v2), semi_product_fv(c, v1, idx2));
        const auto b = c.compose(semi_product_fv(c, v1, idy2), semi_product_fv(c, idx1, v2));
        s.expect(p == a && p == b, [&](auto& w) { w.mor("v1", v1).mor("v2", v2); });
      });
    });
  });
}

}  // namespace cec::checks
