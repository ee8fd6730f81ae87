#include "cec/total_map.hpp"

#include "cec/error.hpp"

namespace cec {

TotalMap::TotalMap(FinSet source, FinSet target, Table table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (table_.size() != source_.size()) throw UsageError("total map: table length != |source|");
  for (Element e : table_) {
    if (!target_.contains(e)) throw UsageError("total map: entry outside target");
  }
}

TotalMap identity_map(FinSet x) {
  Table t(x.size());
  for (Element i = 0; i < x.size(); ++i) t[i] = i;
  return {trusted, x, x, std::move(t)};
}

TotalMap compose(const TotalMap& g, const TotalMap& f) {
  if (f.target() != g.source()) throw UsageError("compose: codomain/domain mismatch");
  Table t(f.source().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(static_cast<Element>(i)));
  return {trusted, f.source(), g.target(), std::move(t)};
}

TotalMap bang_map(FinSet x) { return {trusted, x, FinSet::unit(), Table(x.size(), 0)}; }

TotalMap proj1_map(FinSet a, FinSet b) {
  Table t(a.size() * b.size());
  std::size_t e = 0;
  for (Element i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) t[e++] = i;
  }
  return {trusted, FinSet{t.size()}, a, std::move(t)};
}

TotalMap proj2_map(FinSet a, FinSet b) {
  Table t(a.size() * b.size());
  std::size_t e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Element j = 0; j < b.size(); ++j) t[e++] = j;
  }
  return {trusted, FinSet{t.size()}, b, std::move(t)};
}

TotalMap pair_map(const TotalMap& f1, const TotalMap& f2) {
  if (f1.source() != f2.source()) throw UsageError("pair: sources differ");
  const ProductSet y{f1.target(), f2.target()};
  Table t(f1.source().size());
  const auto n2 = static_cast<Element>(f2.target().size());
  for (Element x = 0; x < t.size(); ++x) t[x] = f1(x) * n2 + f2(x);
  return {trusted, f1.source(), y.carrier(), std::move(t)};
}

TotalMap product_map(const TotalMap& f1, const TotalMap& f2) {
  const FinSet a = f1.source(), b = f2.source();
  return pair_map(compose(f1, proj1_map(a, b)), compose(f2, proj2_map(a, b)));
}

TotalMap swap_map(FinSet a, FinSet b) { return pair_map(proj2_map(b, a), proj1_map(b, a)); }

TotalMap assoc_map(FinSet a, FinSet b, FinSet c) {
  const FinSet bc = product(b, c).carrier();
  const TotalMap inner = proj2_map(a, bc);
  return pair_map(pair_map(proj1_map(a, bc), compose(proj1_map(b, c), inner)),
                  compose(proj2_map(b, c), inner));
}

TotalMap assoc_inv_map(FinSet a, FinSet b, FinSet c) {
  const FinSet ab = product(a, b).carrier();
  const TotalMap inner = proj1_map(ab, c);
  return pair_map(compose(proj1_map(a, b), inner),
                  pair_map(compose(proj2_map(a, b), inner), proj2_map(ab, c)));
}

TotalMap diagonal_map(FinSet a) { return pair_map(identity_map(a), identity_map(a)); }

std::uint64_t total_count(FinSet x, FinSet y) { return saturating_pow(y.size(), x.size()); }

TotalMap total_at(FinSet x, FinSet y, std::uint64_t index) {
  if (index >= total_count(x, y)) throw UsageError("total_at: index out of range");
  return {trusted, x, y, unrank_digits(index, y.size(), x.size())};
}

std::uint64_t total_rank(const TotalMap& f) { return rank_digits(f.table(), f.target().size()); }

std::string to_string(const TotalMap& f) {
  std::string s = std::to_string(f.source().size()) + "->" + std::to_string(f.target().size()) + " [";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f.table()[i]);
  }
  return s + "]";
}

}  // namespace cec
