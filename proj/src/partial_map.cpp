#include "cec/partial_map.hpp"

#include "cec/error.hpp"
#include "cec/literal.hpp"

namespace cec {

PartialMap::PartialMap(FinSet source, FinSet target, Table table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (table_.size() != source_.size()) throw UsageError("partial map: table length != |source|");
  for (Element e : table_) {
    if (e != kBottom && !target_.contains(e)) throw UsageError("partial map: entry outside target");
  }
}

std::optional<Element> PartialMap::operator()(Element x) const {
  if (table_[x] == kBottom) return std::nullopt;
  return table_[x];
}

PartialMap PartialCategory::identity(FinSet x) const { return embed(identity_map(x)); }

PartialMap PartialCategory::compose(const PartialMap& g, const PartialMap& f) const {
  if (f.target() != g.source()) throw UsageError("compose: codomain/domain mismatch");
  const Table& ft = f.table();
  const Table& gt = g.table();
  Table t(ft.size());
  for (std::size_t i = 0; i < ft.size(); ++i) t[i] = ft[i] == kBottom ? kBottom : gt[ft[i]];
  return {trusted, f.source(), g.target(), std::move(t)};
}

bool PartialCategory::is_pure(const PartialMap& f) const {
  for (Element e : f.table()) {
    if (e == kBottom) return false;
  }
  return true;
}

bool PartialCategory::semi_eq(const PartialMap& f, const PartialMap& g) const {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (f.table()[i] != kBottom && f.table()[i] != g.table()[i]) return false;
  }
  return true;
}

std::uint64_t PartialCategory::hom_size(FinSet x, FinSet y) const {
  return saturating_pow(y.size() + 1, x.size());
}

PartialMap PartialCategory::hom_at(FinSet x, FinSet y, std::uint64_t index) const {
  if (index >= hom_size(x, y)) throw UsageError("hom_at: index out of range");
  Table t = unrank_digits(index, y.size() + 1, x.size());
  for (Element& e : t) e = e == 0 ? kBottom : e - 1;
  return {trusted, x, y, std::move(t)};
}

std::uint64_t PartialCategory::rank(const PartialMap& f) const {
  const std::uint64_t base = f.target().size() + 1;
  std::uint64_t r = 0;
  for (Element e : f.table()) r = r * base + (e == kBottom ? 0 : e + 1);
  return r;
}

PartialMap PartialCategory::embed(const TotalMap& t) const { return {trusted, t.source(), t.target(), t.table()}; }

std::optional<TotalMap> PartialCategory::as_total(const PartialMap& f) const {
  if (!is_pure(f)) return std::nullopt;
  return TotalMap{f.source(), f.target(), f.table()};
}

PartialMap PartialCategory::bang(FinSet x) const { return embed(bang_map(x)); }
PartialMap PartialCategory::proj1(FinSet a, FinSet b) const { return embed(proj1_map(a, b)); }
PartialMap PartialCategory::proj2(FinSet a, FinSet b) const { return embed(proj2_map(a, b)); }

PartialMap PartialCategory::pair_fv(const PartialMap& f, const PartialMap& v) const {
  if (!is_pure(v)) throw PurityViolation("pair_fv: second component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const ProductSet y{f.target(), v.target()};
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    t[x] = f.table()[x] == kBottom ? kBottom : y.encode(f.table()[x], v.table()[x]);
  }
  return {trusted, f.source(), y.carrier(), std::move(t)};
}

PartialMap PartialCategory::pair_vf(const PartialMap& v, const PartialMap& f) const {
  if (!is_pure(v)) throw PurityViolation("pair_vf: first component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const ProductSet y{v.target(), f.target()};
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    t[x] = f.table()[x] == kBottom ? kBottom : y.encode(v.table()[x], f.table()[x]);
  }
  return {trusted, f.source(), y.carrier(), std::move(t)};
}

std::string PartialCategory::render(const PartialMap& f) const {
  std::string s = std::to_string(f.source().size()) + "->" + std::to_string(f.target().size()) + " = [";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) s += ", ";
    s += f.table()[i] == kBottom ? std::string("_") : std::to_string(f.table()[i]);
  }
  return s + "]";
}

PartialMap PartialCategory::parse(std::string_view literal) const {
  const MapLiteral lit = parse_map_literal(literal);
  if (lit.states) throw UsageError("partial literal: unexpected state size");
  if (lit.entries.size() != lit.source) throw UsageError("partial literal: expected one entry per source element");
  Table t;
  for (const LiteralEntry& e : lit.entries) {
    switch (e.shape) {
      case LiteralEntry::Shape::Bottom: t.push_back(kBottom); break;
      case LiteralEntry::Shape::Value:
        if (e.a >= lit.target) throw UsageError("partial literal: entry outside target");
        t.push_back(static_cast<Element>(e.a));
        break;
      default: throw UsageError("partial literal: entries are elements or '_'");
    }
  }
  return {FinSet{lit.source}, FinSet{lit.target}, std::move(t)};
}

}  // namespace cec
