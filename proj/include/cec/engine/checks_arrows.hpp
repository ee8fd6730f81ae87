#pragma once

#include "cec/arrow_bridge.hpp"
#include "cec/engine/checks_core.hpp"

namespace cec::checks {

inline std::vector<TotalMap> functions(FinSet x, FinSet y) {
  std::vector<TotalMap> out;
  const std::uint64_t n = total_count(x, y);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(total_at(x, y, i));
  return out;
}

template <class C>
void arrow_law_1(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto id = a.arr(identity_map(o[1]));
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(a.then(f, id) == f, [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void arrow_law_2(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto id = a.arr(identity_map(o[0]));
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(a.then(id, f) == f, [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void arrow_law_3(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto& hs = s.homs(o[2], o[3]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.homs(o[1], o[2]), [&](const auto& g) {
        const auto fg = a.then(f, g);
        s.each(hs, [&](const auto& h) {
          s.expect(a.then(fg, h) == a.then(f, a.then(g, h)), [&](auto& w) { w.mor("f", f).mor("g", g).mor("h", h); });
        });
      });
    });
  });
}

template <class C>
void arrow_law_4(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto ws = functions(o[1], o[2]);
    s.each(functions(o[0], o[1]), [&](const TotalMap& v) {
      s.each(ws, [&](const TotalMap& wm) {
        s.expect(a.arr(compose(wm, v)) == a.then(a.arr(v), a.arr(wm)),
                 [&](auto& w) { w.mor("v", a.arr(v)).mor("w", a.arr(wm)); });
      });
    });
  });
}

template <class C>
void arrow_law_5(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto idz = identity_map(o[2]);
    s.each(functions(o[0], o[1]), [&](const TotalMap& v) {
      s.expect(a.first(a.arr(v), o[2]) == a.arr(product_map(v, idz)), [&](auto& w) { w.mor("v", a.arr(v)); });
    });
  });
}

template <class C>
void arrow_law_6(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const FinSet wo = o[3];
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      const auto ff = a.first(f, wo);
      s.each(s.homs(o[1], o[2]), [&](const auto& g) {
        s.expect(a.first(a.then(f, g), wo) == a.then(ff, a.first(g, wo)), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

// objects X, Y, Z, W; v : Z -> W
template <class C>
void arrow_law_7(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto idx = identity_map(o[0]), idy = identity_map(o[1]);
    const auto vs = functions(o[2], o[3]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      const auto fz = a.first(f, o[2]);
      const auto fw = a.first(f, o[3]);
      s.each(vs, [&](const TotalMap& v) {
        s.expect(a.then(fz, a.arr(product_map(idy, v))) == a.then(a.arr(product_map(idx, v)), fw),
                 [&](auto& w) { w.mor("f", f).mor("v", a.arr(v)); });
      });
    });
  });
}

template <class C>
void arrow_law_8(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const auto fst_y = a.fst(o[1], o[2]);
    const auto fst_x = a.fst(o[0], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(a.then(a.first(f, o[2]), fst_y) == a.then(fst_x, f), [&](auto& w) { w.mor("f", f); });
    });
  });
}

// assoc : (A×B)×C -> A×(B×C)
template <class C>
void arrow_law_9(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  s.objects([&](const Objs& o) {
    const FinSet z12 = product(o[2], o[3]).carrier();
    const auto assoc_y = a.arr(assoc_inv_map(o[1], o[2], o[3]));
    const auto assoc_x = a.arr(assoc_inv_map(o[0], o[2], o[3]));
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(a.then(a.first(a.first(f, o[2]), o[3]), assoc_y) == a.then(assoc_x, a.first(f, z12)),
               [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void arrow_second(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto idz = c.identity(o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.expect(a.second(f, o[2]) == semi_product_vf(c, idz, f), [&](auto& w) { w.mor("f", f); });
    });
  });
}

template <class C>
void arrow_seqpar(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.homs(o[0], o[2]), [&](const auto& f) {
      s.each(s.homs(o[1], o[3]), [&](const auto& g) {
        s.expect(a.seqpar(f, g) == seq_left(c, f, g), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void arrow_fanout(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.homs(o[0], o[2]), [&](const auto& g) {
        s.expect(a.fanout(f, g) == seq_pair_left(c, f, g), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

template <class C>
void arrow_fanout_semi(Sweep<C>& s) {
  DerivedArrow<C> a(s.cat());
  const C& c = s.cat();
  s.objects([&](const Objs& o) {
    const auto fst = a.fst(o[1], o[2]);
    s.each(s.homs(o[0], o[1]), [&](const auto& f) {
      s.each(s.homs(o[0], o[2]), [&](const auto& g) {
        s.expect(c.semi_eq(a.then(a.fanout(f, g), fst), f), [&](auto& w) { w.mor("f", f).mor("g", g); });
      });
    });
  });
}

}  // namespace cec::checks
