#include "cec/cartesian_ops.hpp"
#include "cec/partial_map.hpp"
#include "cec/state_map.hpp"
#include "doctest.h"

using namespace cec;

namespace {

std::vector<StateMap> all_state(const StateCategory& c, FinSet x, FinSet y) {
  std::vector<StateMap> out;
  for (std::uint64_t i = 0; i < c.hom_size(x, y); ++i) out.push_back(c.hom_at(x, y, i));
  return out;
}

std::vector<PartialMap> all_partial(const PartialCategory& c, FinSet x, FinSet y) {
  std::vector<PartialMap> out;
  for (std::uint64_t i = 0; i < c.hom_size(x, y); ++i) out.push_back(c.hom_at(x, y, i));
  return out;
}

Element enc(Element a, Element b, FinSet right) { return static_cast<Element>(a * right.size() + b); }

// Left-to-right state threading, written out by hand.
std::pair<Element, Element> run_left(const StateMap& f1, const StateMap& f2, Element s, Element x1, Element x2) {
  const auto [s1, y1] = f1.apply(s, x1);
  const auto [s2, y2] = f2.apply(s1, x2);
  return {s2, enc(y1, y2, f2.target())};
}

std::pair<Element, Element> run_right(const StateMap& f1, const StateMap& f2, Element s, Element x1, Element x2) {
  const auto [s1, y2] = f2.apply(s, x2);
  const auto [s2, y1] = f1.apply(s1, x1);
  return {s2, enc(y1, y2, f2.target())};
}

const std::vector<FinSet> kSmall = {FinSet{1}, FinSet{2}};

}  // namespace

TEST_SUITE("cartesian_ops") {

TEST_CASE("state sequential products thread the state in the stated order") {
  const StateCategory c(FinSet{2});
  for (FinSet x1 : kSmall) {
    for (FinSet x2 : kSmall) {
      for (FinSet y1 : kSmall) {
        for (FinSet y2 : {FinSet{2}}) {
          const auto fs1 = all_state(c, x1, y1);
          const auto fs2 = all_state(c, x2, y2);
          for (std::size_t i = 0; i < fs1.size(); i += 3) {
            for (std::size_t j = 0; j < fs2.size(); j += 5) {
              const StateMap l = seq_left(c, fs1[i], fs2[j]);
              const StateMap r = seq_right(c, fs1[i], fs2[j]);
              for (Element s = 0; s < 2; ++s) {
                for (Element a = 0; a < x1.size(); ++a) {
                  for (Element b = 0; b < x2.size(); ++b) {
                    CHECK(l.apply(s, enc(a, b, x2)) == run_left(fs1[i], fs2[j], s, a, b));
                    CHECK(r.apply(s, enc(a, b, x2)) == run_right(fs1[i], fs2[j], s, a, b));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("write-then-read example") {
  const StateCategory c(FinSet{2});
  // writes 1
  const StateMap w{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  // reads the state as a value
  const StateMap rd{FinSet{2}, FinSet{1}, FinSet{2}, Table{0, 3}};
  const StateMap l = seq_left(c, w, rd);
  const StateMap r = seq_right(c, w, rd);
  CHECK(l.apply(0, 0) == std::pair<Element, Element>{1, 1});
  CHECK(r.apply(0, 0) == std::pair<Element, Element>{1, 0});
  CHECK(l != r);
  CHECK_FALSE(c.semi_eq(l, r));
}

TEST_CASE("partial sequential products are defined exactly where both factors are") {
  const PartialCategory c;
  for (FinSet x : kSmall) {
    for (FinSet y : kSmall) {
      const auto fs = all_partial(c, x, y);
      for (const auto& f1 : fs) {
        for (const auto& f2 : fs) {
          const PartialMap l = seq_left(c, f1, f2);
          CHECK(l == seq_right(c, f1, f2));
          for (Element a = 0; a < x.size(); ++a) {
            for (Element b = 0; b < x.size(); ++b) {
              const Element got = l.table()[enc(a, b, x)];
              if (f1.table()[a] == kBottom || f2.table()[b] == kBottom) {
                CHECK(got == kBottom);
              } else {
                CHECK(got == enc(f1.table()[a], f2.table()[b], y));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE_TEMPLATE("semi-product clauses hold exhaustively", C, PartialCategory, StateCategory) {
  const C c = [] {
    if constexpr (std::is_same_v<C, StateCategory>) return StateCategory(FinSet{2});
    else return PartialCategory{};
  }();
  for (FinSet x1 : kSmall) {
    for (FinSet x2 : kSmall) {
      for (FinSet y1 : kSmall) {
        for (FinSet y2 : kSmall) {
          for (std::uint64_t i = 0; i < c.hom_size(x1, y1); ++i) {
            const auto f = c.hom_at(x1, y1, i);
            for (std::uint64_t j = 0; j < pure_size(c, x2, y2); ++j) {
              const auto v = pure_at(c, x2, y2, j);
              const auto fv = semi_product_fv(c, f, v);
              CHECK(c.compose(c.proj1(y1, y2), fv) == c.compose(f, c.proj1(x1, x2)));
              CHECK(c.semi_eq(c.compose(c.proj2(y1, y2), fv), c.compose(v, c.proj2(x1, x2))));
              const auto vf = semi_product_vf(c, v, f);
              CHECK(c.compose(c.proj2(y2, y1), vf) == c.compose(f, c.proj2(x2, x1)));
              CHECK(semi_product(c, f, v) == fv);
            }
          }
        }
      }
    }
  }
}

TEST_CASE_TEMPLATE("structural isomorphisms are inverse pairs of pure maps", C, PartialCategory, StateCategory) {
  const C c = [] {
    if constexpr (std::is_same_v<C, StateCategory>) return StateCategory(FinSet{3});
    else return PartialCategory{};
  }();
  const std::vector<FinSet> sizes = {FinSet{0}, FinSet{1}, FinSet{2}, FinSet{3}};
  for (FinSet a : sizes) {
    for (FinSet b : sizes) {
      const auto s = swap_iso(c, a, b);
      CHECK(c.is_pure(s.forward));
      CHECK(c.compose(s.forward, s.backward) == c.identity(s.backward.source()));
      CHECK(c.compose(s.backward, s.forward) == c.identity(s.forward.source()));
      CHECK(c.compose(c.proj1(a, b), s.forward) == c.proj2(b, a));
      for (FinSet d : {FinSet{1}, FinSet{2}}) {
        const auto t = assoc_iso(c, a, b, d);
        CHECK(c.is_pure(t.forward));
        CHECK(c.compose(t.forward, t.backward) == c.identity(t.backward.source()));
        CHECK(c.compose(t.backward, t.forward) == c.identity(t.forward.source()));
      }
    }
    const auto rho = unit_proj(c, a);
    CHECK(c.compose(rho, c.pair_fv(c.identity(a), c.bang(a))) == c.identity(a));
  }
}

TEST_CASE("diagonal duplicates") {
  const PartialCategory c;
  CHECK(diagonal(c, FinSet{2}).table() == Table{0, 3});
  CHECK(diagonal(c, FinSet{3}).table() == Table{0, 4, 8});
}

TEST_CASE("mixed semi-pairs need a pure side") {
  const StateCategory c(FinSet{2});
  const StateMap w{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  CHECK_THROWS_AS(semi_pair(c, w, w), PurityViolation);
  CHECK_THROWS_AS(semi_product(c, w, w), PurityViolation);
  CHECK(semi_pair(c, w, c.identity(FinSet{1})) == c.pair_fv(w, c.identity(FinSet{1})));
  CHECK(semi_pair(c, c.identity(FinSet{1}), w) == c.pair_vf(c.identity(FinSet{1}), w));
  CHECK_THROWS_AS(seq_pair_left(c, w, c.identity(FinSet{2})), UsageError);
}

TEST_CASE("the sequential pair's first projection keeps the second effect") {
  const StateCategory c(FinSet{2});
  const StateMap f = c.identity(FinSet{1});
  const StateMap g{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  const StateMap q1f = c.compose(c.proj1(FinSet{1}, FinSet{1}), seq_pair_left(c, f, g));
  CHECK(q1f == g);
  CHECK(q1f != f);
  CHECK(c.semi_eq(q1f, f));
}

TEST_CASE("pure points enumerate the elements") {
  const StateCategory c(FinSet{2});
  const auto pts = pure_points(c, FinSet{3});
  REQUIRE(pts.size() == 3);
  for (Element i = 0; i < 3; ++i) CHECK(pts[i].apply(1, 0) == std::pair<Element, Element>{1, i});
}

}  // TEST_SUITE

TEST_SUITE("effect_core") {

TEST_CASE_TEMPLATE("semi-congruence axioms hold exhaustively on small sets", C, PartialCategory, StateCategory) {
  const C c = [] {
    if constexpr (std::is_same_v<C, StateCategory>) return StateCategory(FinSet{2});
    else return PartialCategory{};
  }();
  for (FinSet x : kSmall) {
    for (FinSet y : kSmall) {
      std::vector<MorphismOf<C>> hs;
      for (std::uint64_t i = 0; i < c.hom_size(x, y); ++i) hs.push_back(c.hom_at(x, y, i));
      for (const auto& f : hs) {
        CHECK(c.semi_eq(f, f));
        CHECK(strong_eq(c, f, f));
        for (const auto& g : hs) {
          if (!c.semi_eq(f, g)) continue;
          for (const auto& h : hs) {
            if (c.semi_eq(g, h)) CHECK(c.semi_eq(f, h));
          }
          // on pure maps, <= is equality
          if (c.is_pure(f) && c.is_pure(g)) CHECK(f == g);
        }
      }
    }
  }
}

TEST_CASE("replacement with a pure outer map, substitution with any inner map") {
  const StateCategory c(FinSet{2});
  const FinSet one{1}, two{2};
  const auto fs = all_state(c, one, two);
  const auto inner = all_state(c, two, one);
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      if (!c.semi_eq(f, g)) continue;
      for (std::uint64_t k = 0; k < pure_size(c, two, two); ++k) {
        const auto v = pure_at(c, two, two, k);
        CHECK(c.semi_eq(c.compose(v, f), c.compose(v, g)));
      }
      for (const auto& h : inner) CHECK(c.semi_eq(c.compose(f, h), c.compose(g, h)));
    }
  }
}

TEST_CASE_TEMPLATE("category laws", C, PartialCategory, StateCategory) {
  const C c = [] {
    if constexpr (std::is_same_v<C, StateCategory>) return StateCategory(FinSet{2});
    else return PartialCategory{};
  }();
  const FinSet a{1}, b{2};
  for (std::uint64_t i = 0; i < c.hom_size(a, b); ++i) {
    const auto f = c.hom_at(a, b, i);
    CHECK(c.compose(c.identity(b), f) == f);
    CHECK(c.compose(f, c.identity(a)) == f);
    for (std::uint64_t j = 0; j < c.hom_size(b, a); ++j) {
      const auto g = c.hom_at(b, a, j);
      for (std::uint64_t k = 0; k < c.hom_size(a, b); k += 2) {
        const auto h = c.hom_at(a, b, k);
        CHECK(c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f));
      }
    }
  }
}

TEST_CASE("every morphism into the unit is below bang") {
  const StateCategory s(FinSet{2});
  const PartialCategory p;
  for (FinSet x : {FinSet{0}, FinSet{1}, FinSet{2}}) {
    for (const auto& g : all_state(s, x, s.unit())) CHECK(s.semi_eq(g, s.bang(x)));
    for (const auto& g : all_partial(p, x, p.unit())) CHECK(p.semi_eq(g, p.bang(x)));
    CHECK(s.is_pure(s.bang(x)));
  }
}

}  // TEST_SUITE
