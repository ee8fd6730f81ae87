#include <set>

#include "cec/effect_category.hpp"
#include "cec/error.hpp"
#include "cec/literal.hpp"
#include "cec/maybe_kleisli.hpp"
#include "cec/partial_map.hpp"
#include "cec/state_map.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cec;

namespace {

std::vector<Element> with_bottom(std::size_t n) {
  auto a = oracle::range(n);
  a.push_back(kBottom);
  return a;
}

}  // namespace

static_assert(CartesianEffectCategory<PartialCategory>);
static_assert(CartesianEffectCategory<StateCategory>);
static_assert(CartesianEffectCategory<MaybeKleisliCategory>);

TEST_SUITE("instances") {

TEST_CASE("partial hom-set sizes match brute-force enumeration") {
  const PartialCategory c;
  CHECK(c.hom_size(FinSet{2}, FinSet{1}) == 4);
  CHECK(pure_size(c, FinSet{2}, FinSet{1}) == 1);
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const FinSet x{nx}, y{ny};
      std::uint64_t total = 0, pure = 0;
      oracle::all_tables(nx, with_bottom(ny), [&](const Table& t) {
        ++total;
        if (c.is_pure(PartialMap{x, y, t})) ++pure;
      });
      CHECK(c.hom_size(x, y) == total);
      CHECK(pure_size(c, x, y) == pure);
      std::set<std::uint64_t> ranks;
      for (std::uint64_t i = 0; i < c.hom_size(x, y); ++i) {
        const PartialMap f = c.hom_at(x, y, i);
        CHECK(c.rank(f) == i);
        ranks.insert(c.rank(f));
      }
      CHECK(ranks.size() == total);
      for (std::uint64_t i = 0; i < pure_size(c, x, y); ++i) CHECK(c.is_pure(pure_at(c, x, y, i)));
    }
  }
}

TEST_CASE("partial enumeration starts with the everywhere-undefined map") {
  const PartialCategory c;
  CHECK(c.hom_at(FinSet{2}, FinSet{2}, 0).table() == Table{kBottom, kBottom});
  CHECK(c.hom_at(FinSet{2}, FinSet{2}, 1).table() == Table{kBottom, 0});
}

TEST_CASE("state hom-set sizes match brute-force enumeration") {
  const StateCategory c{FinSet{2}};
  CHECK(c.hom_size(FinSet{1}, FinSet{1}) == 4);
  CHECK(pure_size(c, FinSet{1}, FinSet{1}) == 1);
  for (std::size_t nx = 0; nx <= 2; ++nx) {
    for (std::size_t ny = 0; ny <= 2; ++ny) {
      const FinSet x{nx}, y{ny};
      std::uint64_t total = 0, pure = 0;
      oracle::all_tables(2 * nx, oracle::range(2 * ny), [&](const Table& t) {
        ++total;
        if (c.is_pure(StateMap{FinSet{2}, x, y, t})) ++pure;
      });
      CHECK(c.hom_size(x, y) == total);
      CHECK(pure_size(c, x, y) == pure);
      for (std::uint64_t i = 0; i < c.hom_size(x, y); ++i) CHECK(c.rank(c.hom_at(x, y, i)) == i);
    }
  }
}

TEST_CASE("hom from the empty set has exactly one morphism, and it is pure") {
  const PartialCategory p;
  const StateCategory s{FinSet{2}};
  for (std::size_t ny = 0; ny <= 3; ++ny) {
    CHECK(p.hom_size(FinSet{0}, FinSet{ny}) == 1);
    CHECK(p.is_pure(p.hom_at(FinSet{0}, FinSet{ny}, 0)));
    CHECK(s.hom_size(FinSet{0}, FinSet{ny}) == 1);
    CHECK(s.is_pure(s.hom_at(FinSet{0}, FinSet{ny}, 0)));
  }
}

TEST_CASE("partial composition propagates undefinedness") {
  const PartialCategory c;
  const PartialMap f{FinSet{1}, FinSet{2}, Table{1}};
  const PartialMap g{FinSet{2}, FinSet{2}, Table{0, kBottom}};
  CHECK(c.compose(g, f).table() == Table{kBottom});
  CHECK_THROWS_AS(c.compose(f, f), UsageError);
}

TEST_CASE("partial semi-congruence is the extension order") {
  const PartialCategory c;
  const PartialMap undefined{FinSet{1}, FinSet{1}, Table{kBottom}};
  const PartialMap id = c.identity(FinSet{1});
  CHECK(c.semi_eq(undefined, id));
  CHECK_FALSE(c.semi_eq(id, undefined));
  const PartialMap a{FinSet{2}, FinSet{2}, Table{0, kBottom}};
  const PartialMap b{FinSet{2}, FinSet{2}, Table{1, 1}};
  CHECK_FALSE(c.semi_eq(a, b));
}

TEST_CASE("state purity and semi-congruence") {
  const StateCategory c{FinSet{2}};
  // Writes state 1, returns the input.
  const StateMap write1{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  CHECK_FALSE(c.is_pure(write1));
  CHECK(c.semi_eq(write1, c.identity(FinSet{1})));
  CHECK(c.semi_eq(c.identity(FinSet{1}), write1));
  // Returns the current state as a value in {0, 1} and keeps it.
  const StateMap read{FinSet{2}, FinSet{1}, FinSet{2}, Table{0, 3}};
  CHECK_FALSE(c.is_pure(read));
}

TEST_CASE("pairs reject non-pure designated components") {
  const PartialCategory p;
  const PartialMap f{FinSet{1}, FinSet{1}, Table{kBottom}};
  CHECK_THROWS_AS(p.pair_fv(f, f), PurityViolation);
  CHECK_THROWS_AS(p.pair_vf(f, f), PurityViolation);
  CHECK_NOTHROW(p.pair_fv(f, p.identity(FinSet{1})));
  const StateCategory s{FinSet{2}};
  const StateMap w{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  CHECK_THROWS_AS(s.pair_fv(w, w), PurityViolation);
  CHECK_THROWS_AS(s.pair_vf(w, w), PurityViolation);
}

TEST_CASE("state pair keeps the effect of the non-pure component") {
  const StateCategory c{FinSet{2}};
  const StateMap w{FinSet{2}, FinSet{1}, FinSet{1}, Table{1, 1}};
  const StateMap v = c.identity(FinSet{1});
  const StateMap h = c.pair_fv(w, v);
  CHECK(h.apply(0, 0) == std::pair<Element, Element>{1, 0});
  CHECK(h.apply(1, 0) == std::pair<Element, Element>{1, 0});
}

TEST_CASE("state instance needs a non-empty state set") {
  CHECK_THROWS_AS(StateCategory{FinSet{0}}, UsageError);
}

TEST_CASE("literals round-trip") {
  const PartialCategory p;
  const PartialMap f = p.parse("f: 2->3 = [1, _]");
  CHECK(f.table() == Table{1, kBottom});
  CHECK(p.render(f) == "2->3 = [1, _]");
  CHECK(p.parse(p.render(f)) == f);

  const StateCategory s{FinSet{2}};
  const StateMap g = s.parse("g: S=2, 1->2 = [(1,0), (0,1)]");
  CHECK(g.apply(0, 0) == std::pair<Element, Element>{1, 0});
  CHECK(g.apply(1, 0) == std::pair<Element, Element>{0, 1});
  CHECK(s.parse(s.render(g)) == g);
  CHECK(s.parse("S=2, 1->2 = [(1,0)->(0,1), (0,0)->(1,0)]") == g);

  CHECK_THROWS_AS(p.parse("f: 2->3 = [1]"), UsageError);
  CHECK_THROWS_AS(p.parse("f: 2->3 = [1, 3]"), UsageError);
  CHECK_THROWS_AS(s.parse("S=3, 1->1 = [(0,0), (0,0), (0,0)]"), UsageError);
  CHECK_THROWS_AS(s.parse("S=2, 1->1 = [(0,0)->(0,0), (0,0)->(1,0)]"), UsageError);
  CHECK_THROWS_AS(parse_map_literal("2->3 = [1, _"), LiteralError);
}

TEST_CASE("kleisli translation round-trips on every partial map") {
  const PartialCategory p;
  const MaybeKleisliCategory k;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < p.hom_size(FinSet{2}, FinSet{2}); ++i) {
    const PartialMap f = p.hom_at(FinSet{2}, FinSet{2}, i);
    CHECK(from_kleisli(to_kleisli(f)) == f);
    CHECK(to_kleisli(f) == k.hom_at(FinSet{2}, FinSet{2}, i));
    ++count;
  }
  // (|Y| + 1)^|X| with |X| = |Y| = 2.
  CHECK(count == 9);
}

TEST_CASE("strength sends nothing to nothing") {
  const TotalMap t = strength(FinSet{2}, FinSet{3});
  CHECK(t.source().size() == 9);
  CHECK(t.target().size() == 7);
  const ProductSet in{FinSet{3}, FinSet{3}};
  CHECK(t(in.encode(2, 1)) == 6);
  CHECK(t(in.encode(1, 2)) == 5);
}

}
