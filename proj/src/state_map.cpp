#include "cec/state_map.hpp"

#include <algorithm>

#include "cec/error.hpp"
#include "cec/literal.hpp"

namespace cec {

StateMap::StateMap(FinSet states, FinSet source, FinSet target, Table table)
    : states_(states), source_(source), target_(target), table_(std::move(table)) {
  if (table_.size() != states_.size() * source_.size()) {
    throw UsageError("state map: table length != |S|*|source|");
  }
  const std::size_t out = states_.size() * target_.size();
  for (Element e : table_) {
    if (e >= out) throw UsageError("state map: entry outside S x target");
  }
}

std::pair<Element, Element> StateMap::apply(Element s, Element x) const {
  const Element e = table_[s * source_.size() + x];
  const auto ty = static_cast<Element>(target_.size());
  return {e / ty, e % ty};
}

StateCategory::StateCategory(FinSet states) : states_(states) {
  if (states.empty()) throw UsageError("state instance needs |S| >= 1");
}

StateMap StateCategory::identity(FinSet x) const { return embed(identity_map(x)); }

// S x X -> S x Y is row-major in (s, y), which is exactly the index space of
// the next table, so composition is plain table composition.
StateMap StateCategory::compose(const StateMap& g, const StateMap& f) const {
  if (f.target() != g.source()) throw UsageError("compose: codomain/domain mismatch");
  const Table& ft = f.table();
  const Table& gt = g.table();
  Table t(ft.size());
  for (std::size_t i = 0; i < ft.size(); ++i) t[i] = gt[ft[i]];
  return {trusted, states_, f.source(), g.target(), std::move(t)};
}

bool StateCategory::is_pure(const StateMap& f) const {
  const std::size_t nx = f.source().size(), ny = f.target().size();
  const Table& t = f.table();
  for (std::size_t s = 0; s < states_.size(); ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      // Pure iff (s, x) -> (s, y0(x)) where y0(x) is the value at state 0.
      if (t[s * nx + x] != s * ny + t[x] % ny) return false;
    }
  }
  return true;
}

bool StateCategory::semi_eq(const StateMap& f, const StateMap& g) const {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  const std::size_t ny = f.target().size();
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (f.table()[i] % ny != g.table()[i] % ny) return false;
  }
  return true;
}

std::uint64_t StateCategory::hom_size(FinSet x, FinSet y) const {
  return saturating_pow(states_.size() * y.size(), states_.size() * x.size());
}

StateMap StateCategory::hom_at(FinSet x, FinSet y, std::uint64_t index) const {
  if (index >= hom_size(x, y)) throw UsageError("hom_at: index out of range");
  return {trusted, states_, x, y, unrank_digits(index, states_.size() * y.size(), states_.size() * x.size())};
}

std::uint64_t StateCategory::rank(const StateMap& f) const {
  return rank_digits(f.table(), states_.size() * f.target().size());
}

StateMap StateCategory::embed(const TotalMap& t) const {
  const std::size_t nx = t.source().size(), ny = t.target().size();
  Table table(states_.size() * nx);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    for (std::size_t x = 0; x < nx; ++x) table[s * nx + x] = static_cast<Element>(s * ny + t.table()[x]);
  }
  return {trusted, states_, t.source(), t.target(), std::move(table)};
}

std::optional<TotalMap> StateCategory::as_total(const StateMap& f) const {
  if (!is_pure(f)) return std::nullopt;
  const auto ny = static_cast<Element>(f.target().size());
  Table t(f.source().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f.table()[x] % ny;
  return TotalMap{f.source(), f.target(), std::move(t)};
}

StateMap StateCategory::bang(FinSet x) const { return embed(bang_map(x)); }
StateMap StateCategory::proj1(FinSet a, FinSet b) const { return embed(proj1_map(a, b)); }
StateMap StateCategory::proj2(FinSet a, FinSet b) const { return embed(proj2_map(a, b)); }

StateMap StateCategory::pair_fv(const StateMap& f, const StateMap& v) const {
  if (!is_pure(v)) throw PurityViolation("pair_fv: second component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const std::size_t n1 = f.target().size(), n2 = v.target().size(), nx = f.source().size();
  Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element e = f.table()[i];
    const std::size_t y2 = v.table()[i % nx] % n2;
    t[i] = static_cast<Element>((e / n1) * n1 * n2 + (e % n1) * n2 + y2);
  }
  return {trusted, states_, f.source(), FinSet{n1 * n2}, std::move(t)};
}

StateMap StateCategory::pair_vf(const StateMap& v, const StateMap& f) const {
  if (!is_pure(v)) throw PurityViolation("pair_vf: first component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const std::size_t n1 = v.target().size(), n2 = f.target().size(), nx = f.source().size();
  Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element e = f.table()[i];
    const std::size_t y1 = v.table()[i % nx] % n1;
    t[i] = static_cast<Element>((e / n2) * n1 * n2 + y1 * n2 + e % n2);
  }
  return {trusted, states_, f.source(), FinSet{n1 * n2}, std::move(t)};
}

std::string StateCategory::render(const StateMap& f) const {
  const std::size_t ny = f.target().size();
  std::string s = "S=" + std::to_string(states_.size()) + ", " + std::to_string(f.source().size()) + "->" +
                  std::to_string(ny) + " = [";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(f.table()[i] / ny) + "," + std::to_string(f.table()[i] % ny) + ")";
  }
  return s + "]";
}

StateMap StateCategory::parse(std::string_view literal) const {
  const MapLiteral lit = parse_map_literal(literal);
  if (!lit.states) throw UsageError("state literal: missing 'S=' prefix");
  if (*lit.states != states_.size()) throw UsageError("state literal: state size differs from the instance");
  const std::size_t ns = states_.size(), nx = lit.source, ny = lit.target;
  if (lit.entries.size() != ns * nx) throw UsageError("state literal: expected |S|*|X| entries");
  Table t(ns * nx, 0);
  std::vector<bool> seen(ns * nx, false);
  const auto out = [&](std::size_t s2, std::size_t y) {
    if (s2 >= ns || y >= ny) throw UsageError("state literal: entry outside S x target");
    return static_cast<Element>(s2 * ny + y);
  };
  const bool explicit_form = !lit.entries.empty() && lit.entries.front().shape == LiteralEntry::Shape::Explicit;
  for (std::size_t i = 0; i < lit.entries.size(); ++i) {
    const LiteralEntry& e = lit.entries[i];
    if (explicit_form) {
      if (e.shape != LiteralEntry::Shape::Explicit) throw UsageError("state literal: mixed entry forms");
      if (e.a >= ns || e.b >= nx) throw UsageError("state literal: argument outside S x source");
      const std::size_t idx = e.a * nx + e.b;
      if (seen[idx]) throw UsageError("state literal: duplicate argument");
      seen[idx] = true;
      t[idx] = out(e.c, e.d);
    } else {
      if (e.shape != LiteralEntry::Shape::Pair) throw UsageError("state literal: entries are (s',y) pairs");
      t[i] = out(e.a, e.b);
    }
  }
  return {states_, FinSet{nx}, FinSet{ny}, std::move(t)};
}

}  // namespace cec
