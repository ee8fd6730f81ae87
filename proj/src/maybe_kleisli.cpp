#include "cec/maybe_kleisli.hpp"

#include "cec/error.hpp"
#include "cec/literal.hpp"

namespace cec {

FinSet maybe(FinSet y) { return FinSet{y.size() + 1}; }

KleisliMap::KleisliMap(FinSet source, FinSet target, Table table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (table_.size() != source_.size()) throw UsageError("kleisli map: table length != |source|");
  for (Element e : table_) {
    if (e > target_.size()) throw UsageError("kleisli map: entry outside G(target)");
  }
}

TotalMap KleisliMap::underlying() const { return {source_, maybe(target_), table_}; }

TotalMap strength(FinSet y1, FinSet y2) {
  const ProductSet in{maybe(y1), y2};
  const ProductSet out{y1, y2};
  Table t(in.carrier().size());
  for (Element e = 0; e < t.size(); ++e) {
    const auto [a, b] = in.decode(e);
    t[e] = a == nothing(y1) ? nothing(out.carrier()) : out.encode(a, b);
  }
  return {trusted, in.carrier(), maybe(out.carrier()), std::move(t)};
}

TotalMap strength_right(FinSet y1, FinSet y2) {
  const ProductSet in{y1, maybe(y2)};
  const ProductSet out{y1, y2};
  Table t(in.carrier().size());
  for (Element e = 0; e < t.size(); ++e) {
    const auto [a, b] = in.decode(e);
    t[e] = b == nothing(y2) ? nothing(out.carrier()) : out.encode(a, b);
  }
  return {trusted, in.carrier(), maybe(out.carrier()), std::move(t)};
}

KleisliMap MaybeKleisliCategory::identity(FinSet x) const { return embed(identity_map(x)); }

// g* o f: nothing propagates, otherwise continue with g.
KleisliMap MaybeKleisliCategory::compose(const KleisliMap& g, const KleisliMap& f) const {
  if (f.target() != g.source()) throw UsageError("compose: codomain/domain mismatch");
  const Element none_y = nothing(f.target()), none_z = nothing(g.target());
  Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element e = f.table()[i];
    t[i] = e == none_y ? none_z : g.table()[e];
  }
  return {trusted, f.source(), g.target(), std::move(t)};
}

bool MaybeKleisliCategory::is_pure(const KleisliMap& f) const {
  for (Element e : f.table()) {
    if (e == nothing(f.target())) return false;
  }
  return true;
}

bool MaybeKleisliCategory::semi_eq(const KleisliMap& f, const KleisliMap& g) const {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (f.table()[i] != nothing(f.target()) && f.table()[i] != g.table()[i]) return false;
  }
  return true;
}

std::uint64_t MaybeKleisliCategory::hom_size(FinSet x, FinSet y) const {
  return saturating_pow(y.size() + 1, x.size());
}

// Same order as the partial instance: digit 0 is "nothing".
KleisliMap MaybeKleisliCategory::hom_at(FinSet x, FinSet y, std::uint64_t index) const {
  if (index >= hom_size(x, y)) throw UsageError("hom_at: index out of range");
  Table t = unrank_digits(index, y.size() + 1, x.size());
  for (Element& e : t) e = e == 0 ? nothing(y) : e - 1;
  return {trusted, x, y, std::move(t)};
}

std::uint64_t MaybeKleisliCategory::rank(const KleisliMap& f) const {
  const std::uint64_t base = f.target().size() + 1;
  std::uint64_t r = 0;
  for (Element e : f.table()) r = r * base + (e == nothing(f.target()) ? 0 : e + 1);
  return r;
}

KleisliMap MaybeKleisliCategory::embed(const TotalMap& t) const { return {trusted, t.source(), t.target(), t.table()}; }

std::optional<TotalMap> MaybeKleisliCategory::as_total(const KleisliMap& f) const {
  if (!is_pure(f)) return std::nullopt;
  return TotalMap{f.source(), f.target(), f.table()};
}

KleisliMap MaybeKleisliCategory::bang(FinSet x) const { return embed(bang_map(x)); }
KleisliMap MaybeKleisliCategory::proj1(FinSet a, FinSet b) const { return embed(proj1_map(a, b)); }
KleisliMap MaybeKleisliCategory::proj2(FinSet a, FinSet b) const { return embed(proj2_map(a, b)); }

// <f, v> = t o <f, v0> in the base category of sets.
KleisliMap MaybeKleisliCategory::pair_fv(const KleisliMap& f, const KleisliMap& v) const {
  const auto v0 = as_total(v);
  if (!v0) throw PurityViolation("pair_fv: second component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const TotalMap h = cec::compose(strength(f.target(), v.target()), pair_map(f.underlying(), *v0));
  return {trusted, h.source(), product(f.target(), v.target()).carrier(), h.table()};
}

KleisliMap MaybeKleisliCategory::pair_vf(const KleisliMap& v, const KleisliMap& f) const {
  const auto v0 = as_total(v);
  if (!v0) throw PurityViolation("pair_vf: first component is not pure");
  if (f.source() != v.source()) throw UsageError("pair: sources differ");
  const TotalMap h = cec::compose(strength_right(v.target(), f.target()), pair_map(*v0, f.underlying()));
  return {trusted, h.source(), product(v.target(), f.target()).carrier(), h.table()};
}

std::string MaybeKleisliCategory::render(const KleisliMap& f) const {
  std::string s = std::to_string(f.source().size()) + "->" + std::to_string(f.target().size()) + " = [";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) s += ", ";
    s += f.defined(static_cast<Element>(i)) ? std::to_string(f.table()[i]) : std::string("_");
  }
  return s + "]";
}

KleisliMap MaybeKleisliCategory::parse(std::string_view literal) const {
  return to_kleisli(PartialCategory{}.parse(literal));
}

KleisliMap to_kleisli(const PartialMap& f) {
  Table t(f.table());
  for (Element& e : t) e = e == kBottom ? nothing(f.target()) : e;
  return {trusted, f.source(), f.target(), std::move(t)};
}

PartialMap from_kleisli(const KleisliMap& k) {
  Table t(k.table());
  for (Element& e : t) e = e == nothing(k.target()) ? kBottom : e;
  return {k.source(), k.target(), std::move(t)};
}

}  // namespace cec
