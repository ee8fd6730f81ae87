#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cec/cartesian_ops.hpp"
#include "cec/proof/script.hpp"

namespace cec::proof {

class AssignmentMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

using ObjectMap = std::map<std::string, FinSet>;

template <CartesianEffectCategory C>
using Assignment = std::map<std::string, MorphismOf<C>>;

template <CartesianEffectCategory C>
FinSet object_of(const C& c, const Obj& o, const ObjectMap& objects) {
  if (o.is_unit()) return c.unit();
  if (o.is_product())
    return product(object_of(c, o.left(), objects), object_of(c, o.right(), objects)).carrier();
  auto it = objects.find(o.name());
  if (it == objects.end()) throw AssignmentMismatch("object '" + o.name() + "' is not assigned");
  return it->second;
}

namespace detail {

// Semantics of a term node from its already evaluated arguments.
template <CartesianEffectCategory C>
MorphismOf<C> apply(const C& c, const Term& t, const ObjectMap& objects,
                    const std::vector<const MorphismOf<C>*>& args) {
  auto o = [&](std::size_t i) { return object_of(c, t.objs[i], objects); };
  switch (t.op) {
    case Op::Id: return c.identity(o(0));
    case Op::Bang: return c.bang(o(0));
    case Op::Proj1: return c.proj1(o(0), o(1));
    case Op::Proj2: return c.proj2(o(0), o(1));
    case Op::Swap: return swap_iso(c, o(0), o(1)).forward;
    case Op::Assoc: return assoc_iso(c, o(0), o(1), o(2)).forward;
    case Op::AssocInv: return assoc_iso(c, o(0), o(1), o(2)).backward;
    case Op::Rho: return unit_proj(c, o(0));
    case Op::Diag: return diagonal(c, o(0));
    case Op::Comp: {
      MorphismOf<C> m = *args.back();
      for (std::size_t i = args.size() - 1; i-- > 0;) m = c.compose(*args[i], m);
      return m;
    }
    case Op::Pair:
      return t.side == Side::FV ? c.pair_fv(*args[0], *args[1]) : c.pair_vf(*args[0], *args[1]);
    case Op::Prod:
      return t.side == Side::FV ? semi_product_fv(c, *args[0], *args[1])
                                : semi_product_vf(c, *args[0], *args[1]);
    case Op::LTimes: return seq_left(c, *args[0], *args[1]);
    case Op::RTimes: return seq_right(c, *args[0], *args[1]);
    case Op::LPair: return seq_pair_left(c, *args[0], *args[1]);
    case Op::RPair: return seq_pair_right(c, *args[0], *args[1]);
    case Op::Sym: break;
  }
  throw UsageError("symbol reached apply");
}

template <CartesianEffectCategory C>
void check_binding(const C& c, const std::string& name, const Obj& dom, const Obj& cod, bool pure,
                   const MorphismOf<C>& m, const ObjectMap& objects) {
  if (m.source() != object_of(c, dom, objects) || m.target() != object_of(c, cod, objects))
    throw AssignmentMismatch("'" + name + "' is assigned a morphism of the wrong type");
  if (pure && !c.is_pure(m)) throw AssignmentMismatch("pure symbol '" + name + "' is assigned " + c.render(m));
}

}  // namespace detail

// Compositional evaluation of a term in an instance.
template <CartesianEffectCategory C>
MorphismOf<C> evaluate_term(const C& c, const TermPtr& t, const Assignment<C>& assignment,
                            const ObjectMap& objects) {
  if (t->op == Op::Sym) {
    auto it = assignment.find(t->name);
    if (it == assignment.end()) throw AssignmentMismatch("symbol '" + t->name + "' is not assigned");
    detail::check_binding(c, t->name, t->dom, t->cod, t->pure, it->second, objects);
    return it->second;
  }
  std::vector<MorphismOf<C>> values;
  values.reserve(t->args.size());
  for (const auto& a : t->args) values.push_back(evaluate_term(c, a, assignment, objects));
  std::vector<const MorphismOf<C>*> ptrs;
  for (const auto& v : values) ptrs.push_back(&v);
  return detail::apply(c, *t, objects, ptrs);
}

template <CartesianEffectCategory C>
bool holds(const C& c, const Judgment& j, const Assignment<C>& assignment, const ObjectMap& objects) {
  const auto l = evaluate_term(c, j.lhs, assignment, objects);
  const auto r = evaluate_term(c, j.rhs, assignment, objects);
  return j.rel == Rel::Strong ? l == r : c.semi_eq(l, r);
}

struct SoundnessOptions {
  std::size_t max_size = 2;
  std::uint64_t budget = 1'000'000;
};

struct SoundnessResult {
  std::uint64_t object_maps = 0;
  std::uint64_t assignments = 0;  // assignments satisfying every assumption
  std::vector<std::string> skipped;
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample; }
};

namespace detail {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
  }
};

// Evaluates a fixed set of judgments under every assignment of the script's
// symbols. Shared subterms are evaluated once per change of the symbols they
// mention, and binary pair/product nodes are memoised on the ranks of their
// arguments.
template <CartesianEffectCategory C>
class SoundnessSweep {
 public:
  using M = MorphismOf<C>;

  SoundnessSweep(const C& c, const ProofScript& script, const std::vector<Judgment>& targets)
      : c_(c), script_(script) {
    for (const auto& a : script.assumptions) hyps_.push_back(compile(a.judgment));
    for (const auto& t : targets) targets_.push_back({compile(t), t});
  }

  SoundnessResult run(const SoundnessOptions& options) {
    SoundnessResult result;
    const auto& objs = script_.scope.objects;
    std::vector<std::size_t> sizes(objs.size(), 1);
    while (true) {
      ObjectMap om;
      for (std::size_t i = 0; i < objs.size(); ++i) om[objs[i]] = FinSet{sizes[i]};
      ++result.object_maps;
      if (!run_objects(om, options, result)) return result;
      std::size_t k = objs.size();
      while (k > 0 && sizes[k - 1] == options.max_size) sizes[--k] = 1;
      if (k == 0) break;
      ++sizes[k - 1];
    }
    return result;
  }

 private:
  struct Node {
    const Term* term = nullptr;
    std::vector<int> kids;
    int dep = -1;
    int symbol = -1;
    bool memoize = false;
    std::optional<M> value;
    std::optional<std::uint64_t> rank;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, M, PairHash> memo;
  };
  struct Compiled {
    Rel rel;
    int lhs, rhs;
    int dep;
  };
  struct Target {
    Compiled compiled;
    Judgment judgment;
  };

  static constexpr std::size_t kMemoCap = 1u << 20;

  int symbol_index(const std::string& name) const {
    const auto& syms = script_.scope.symbols;
    for (std::size_t i = 0; i < syms.size(); ++i)
      if (syms[i].name == name) return static_cast<int>(i);
    throw AssignmentMismatch("undeclared symbol '" + name + "'");
  }

  int add(Node n, const std::string& key) {
    auto [it, fresh] = index_.emplace(key, static_cast<int>(nodes_.size()));
    if (fresh) nodes_.push_back(std::move(n));
    return it->second;
  }

  int compile(const TermPtr& t) {
    if (auto it = index_.find(t->key); it != index_.end()) return it->second;
    Node n;
    n.term = t.get();
    if (t->op == Op::Sym) {
      n.symbol = symbol_index(t->name);
      n.dep = n.symbol;
      return add(std::move(n), t->key);
    }
    if (t->op == Op::Comp) {
      // Right-nested binary chain so inner suffixes are shared and cached.
      int acc = compile(t->args.back());
      std::string key = t->args.back()->key;
      for (std::size_t i = t->args.size() - 1; i-- > 0;) {
        key = t->args[i]->key + " . " + key;
        if (auto it = index_.find(key); it != index_.end()) {
          acc = it->second;
          continue;
        }
        int g = compile(t->args[i]);
        Node c;
        c.term = t.get();
        c.kids = {g, acc};
        c.dep = std::max(nodes_[g].dep, nodes_[acc].dep);
        acc = add(std::move(c), key);
      }
      return acc;
    }
    for (const auto& a : t->args) {
      int k = compile(a);
      n.kids.push_back(k);
      n.dep = std::max(n.dep, nodes_[k].dep);
    }
    n.memoize = n.kids.size() == 2;
    return add(std::move(n), t->key);
  }

  Compiled compile(const Judgment& j) {
    int l = compile(j.lhs), r = compile(j.rhs);
    return {j.rel, l, r, std::max(nodes_[l].dep, nodes_[r].dep)};
  }

  std::uint64_t rank(int i) {
    Node& n = nodes_[i];
    if (!n.rank) n.rank = c_.rank(eval(i));
    return *n.rank;
  }

  const M& eval(int i) {
    Node& n = nodes_[i];
    if (n.value) return *n.value;
    if (n.symbol >= 0) throw UsageError("unassigned symbol");
    if (n.kids.empty()) {
      n.value = apply(c_, *n.term, objects_, {});
    } else if (n.term->op == Op::Comp) {
      const M& g = eval(n.kids[0]);
      const M& f = eval(n.kids[1]);
      nodes_[i].value = c_.compose(g, f);
    } else if (n.memoize) {
      const std::pair<std::uint64_t, std::uint64_t> key{rank(n.kids[0]), rank(n.kids[1])};
      Node& m = nodes_[i];
      if (auto it = m.memo.find(key); it != m.memo.end()) {
        m.value = it->second;
      } else {
        M v = apply(c_, *m.term, objects_, {&eval(m.kids[0]), &eval(m.kids[1])});
        if (m.memo.size() < kMemoCap) m.memo.emplace(key, v);
        m.value = std::move(v);
      }
    } else {
      std::vector<const M*> args;
      for (int k : n.kids) args.push_back(&eval(k));
      nodes_[i].value = apply(c_, *nodes_[i].term, objects_, args);
    }
    return *nodes_[i].value;
  }

  bool holds(const Compiled& j) {
    const M& l = eval(j.lhs);
    const M& r = eval(j.rhs);
    return j.rel == Rel::Strong ? l == r : c_.semi_eq(l, r);
  }

  void invalidate(int from) {
    for (auto& n : nodes_) {
      if (n.dep >= from) {
        if (n.symbol < 0) n.value.reset();
        n.rank.reset();
      }
    }
  }

  bool hyps_hold(int dep) {
    for (const auto& h : hyps_)
      if (h.dep == dep && !holds(h)) return false;
    return true;
  }

  // False once a counterexample is recorded.
  bool run_objects(const ObjectMap& om, const SoundnessOptions& options, SoundnessResult& result) {
    objects_ = om;
    for (auto& n : nodes_) {
      n.value.reset();
      n.rank.reset();
      n.memo.clear();
    }
    const auto& syms = script_.scope.symbols;
    candidates_.assign(syms.size(), {});
    for (std::size_t i = 0; i < syms.size(); ++i) {
      const FinSet x = object_of(c_, syms[i].dom, om), y = object_of(c_, syms[i].cod, om);
      const std::uint64_t n = syms[i].pure ? pure_size(c_, x, y) : c_.hom_size(x, y);
      if (n > options.budget) {
        result.skipped.push_back(describe(om));
        return true;
      }
      for (std::uint64_t k = 0; k < n; ++k)
        candidates_[i].push_back(syms[i].pure ? pure_at(c_, x, y, k) : c_.hom_at(x, y, k));
    }
    chosen_.assign(syms.size(), 0);
    if (!hyps_hold(-1)) return true;
    return assign(0, om, result);
  }

  bool assign(std::size_t k, const ObjectMap& om, SoundnessResult& result) {
    const auto& syms = script_.scope.symbols;
    if (k == syms.size()) {
      ++result.assignments;
      for (const auto& t : targets_) {
        if (!holds(t.compiled)) {
          std::string s = describe(om) + "; " + render(t.judgment) + " fails with";
          for (std::size_t i = 0; i < syms.size(); ++i)
            s += " " + syms[i].name + "=" + c_.render(candidates_[i][chosen_[i]]);
          result.counterexample = s;
          return false;
        }
      }
      return true;
    }
    const int node = sym_node(k);
    for (std::size_t idx = 0; idx < candidates_[k].size(); ++idx) {
      chosen_[k] = idx;
      invalidate(static_cast<int>(k));
      if (node >= 0) nodes_[node].value = candidates_[k][idx];
      if (!hyps_hold(static_cast<int>(k))) continue;
      if (!assign(k + 1, om, result)) return false;
    }
    return true;
  }

  // Node of symbol k, or -1 when the judgments never mention it.
  int sym_node(std::size_t k) {
    if (sym_nodes_.empty()) {
      for (std::size_t i = 0; i < script_.scope.symbols.size(); ++i) {
        auto it = index_.find(script_.scope.symbols[i].name);
        sym_nodes_[i] = it == index_.end() ? -1 : it->second;
      }
    }
    return sym_nodes_.at(k);
  }

  static std::string describe(const ObjectMap& om) {
    std::string s;
    for (const auto& [name, set] : om) s += (s.empty() ? "" : ", ") + name + "=" + std::to_string(set.size());
    return s;
  }

  const C& c_;
  const ProofScript& script_;
  std::vector<Node> nodes_;
  std::map<std::string, int> index_;
  std::vector<Compiled> hyps_;
  std::vector<Target> targets_;
  ObjectMap objects_;
  std::vector<std::vector<M>> candidates_;
  std::map<std::size_t, int> sym_nodes_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

// The script's goal holds under every assignment, at every object size up to
// the bound, that satisfies its assumptions.
template <CartesianEffectCategory C>
SoundnessResult check_goal_soundness(const C& c, const ProofScript& script,
                                     const SoundnessOptions& options = {}) {
  if (!script.goal) throw UsageError("script has no goal");
  return detail::SoundnessSweep<C>(c, script, {*script.goal}).run(options);
}

// Every step of the script holds at object size 1.
template <CartesianEffectCategory C>
SoundnessResult check_step_soundness(const C& c, const ProofScript& script) {
  std::vector<Judgment> all;
  for (const auto& s : script.steps) all.push_back(s.judgment);
  SoundnessOptions options;
  options.max_size = 1;
  return detail::SoundnessSweep<C>(c, script, all).run(options);
}

}  // namespace cec::proof
