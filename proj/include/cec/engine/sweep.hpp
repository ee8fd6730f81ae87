#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cec/cartesian_ops.hpp"
#include "cec/effect_category.hpp"
#include "cec/law_inventory.hpp"
#include "cec/law_report.hpp"

namespace cec {

struct SweepOptions {
  std::size_t max_size = 2;
  std::uint64_t budget = 1'000'000;
  // Explicit object list; when absent, objects are the sets of size 1..max_size.
  std::optional<std::vector<FinSet>> objects;
};

// A parsed witness: objects by position, morphisms by name in binding order.
template <class M>
struct ReplayTarget {
  std::vector<FinSet> objects;
  std::vector<std::pair<std::string, M>> morphisms;
};

// Records the bindings of the current tuple, or in replay mode only compares
// them against a target.
template <CartesianEffectCategory C>
class WitnessBuilder {
 public:
  explicit WitnessBuilder(const C& c, const ReplayTarget<MorphismOf<C>>* target = nullptr)
      : c_(c), target_(target) {}
  WitnessBuilder& obj(const std::string& name, FinSet x) {
    if (!target_) w_.bindings.emplace_back(name, std::to_string(x.size()));
    return *this;
  }
  WitnessBuilder& mor(const std::string& name, const MorphismOf<C>& f) {
    if (!target_) {
      w_.bindings.emplace_back(name, c_.render(f));
    } else if (matched_) {
      matched_ = next_ < target_->morphisms.size() && target_->morphisms[next_].first == name &&
                 target_->morphisms[next_].second == f;
      ++next_;
    }
    return *this;
  }
  Witness build() { return std::move(w_); }
  bool matched() const { return matched_ && next_ == target_->morphisms.size(); }

 private:
  const C& c_;
  const ReplayTarget<MorphismOf<C>>* target_;
  Witness w_;
  bool matched_ = true;
  std::size_t next_ = 0;
};

// Exhaustive enumeration state for a single check. Objects range over sizes
// 1..max_size; hom-sets are materialized per object assignment and cached.
// Enumeration stops at the first decision (a counterexample for laws, an
// example for searches), so the reported witness is the first one in
// quantifier order.
template <CartesianEffectCategory C>
class Sweep {
 public:
  using M = MorphismOf<C>;
  using Objects = std::vector<FinSet>;

  Sweep(const C& c, const CheckSpec& spec, SweepOptions options)
      : c_(c), spec_(spec), options_(std::move(options)), object_names_(parse_object_names(spec)) {}

  // Replay mode: only the target's object tuple is visited, and the first
  // conclusion evaluated on the target's morphisms decides.
  void replay(const ReplayTarget<M>* target) { target_ = target; }
  // Replay outcome: true if the tuple was met and the conclusion failed (laws)
  // or held (searches).
  std::optional<bool> replay_outcome() const { return replay_outcome_; }

  const std::vector<std::string>& object_names() const { return object_names_; }

  const C& cat() const { return c_; }
  bool decided() const { return decided_; }

  // Calls fn(objects) for every tuple of objects, first one outermost.
  template <class Fn>
  void objects(Fn&& fn) {
    std::vector<FinSet> pool;
    if (options_.objects) {
      pool = *options_.objects;
    } else {
      for (std::size_t n = 1; n <= options_.max_size; ++n) pool.emplace_back(n);
    }
    const std::size_t n = object_names_.size();
    if (n == 0) {
      Objects none;
      run_case(none, fn);
      return;
    }
    if (pool.empty()) return;
    std::vector<std::size_t> at(n, 0);
    Objects current(n, pool.front());
    while (!decided_) {
      for (std::size_t i = 0; i < n; ++i) current[i] = pool[at[i]];
      if (!target_ || current == target_->objects) run_case(current, fn);
      std::size_t i = n;
      for (;;) {
        if (i == 0) return;
        --i;
        if (++at[i] < pool.size()) break;
        at[i] = 0;
      }
    }
  }

  // Hom-set in enumeration order. Over budget, the current case is skipped.
  const std::vector<M>& homs(FinSet x, FinSet y) {
    const auto key = std::make_pair(x.size(), y.size());
    if (auto it = homs_.find(key); it != homs_.end()) return it->second;
    const std::uint64_t n = c_.hom_size(x, y);
    if (n > options_.budget) throw SkipCase{"hom(" + std::to_string(x.size()) + "," + std::to_string(y.size()) + ") has " +
                                             std::to_string(n) + " morphisms, over"};
    std::vector<M> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(c_.hom_at(x, y, i));
    return homs_.emplace(key, std::move(out)).first->second;
  }

  const std::vector<M>& pures(FinSet x, FinSet y) {
    const auto key = std::make_pair(x.size(), y.size());
    if (auto it = pures_.find(key); it != pures_.end()) return it->second;
    const std::uint64_t n = pure_size(c_, x, y);
    if (n > options_.budget) throw SkipCase{"pure(" + std::to_string(x.size()) + "," + std::to_string(y.size()) + ")"};
    std::vector<M> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(pure_at(c_, x, y, i));
    return pures_.emplace(key, std::move(out)).first->second;
  }

  const std::vector<M>& points(FinSet x) { return pures(c_.unit(), x); }

  // Streams hom(x, y) without materializing it; used by uniqueness sweeps
  // over product objects. Over budget, the current case is skipped.
  template <class Fn>
  void sweep_hom(FinSet x, FinSet y, Fn&& fn) {
    const std::uint64_t n = c_.hom_size(x, y);
    if (n > options_.budget) throw SkipCase{"hom(" + std::to_string(x.size()) + "," + std::to_string(y.size()) + ") has " +
                                             std::to_string(n) + " morphisms, over"};
    for (std::uint64_t i = 0; i < n && !decided_; ++i) fn(c_.hom_at(x, y, i));
  }

  template <class Range, class Fn>
  void each(const Range& range, Fn&& fn) {
    for (const auto& m : range) {
      if (decided_) return;
      fn(m);
    }
  }

  // For laws and diagnostics. `bind` fills a WitnessBuilder with the
  // morphisms of the current tuple.
  template <class Bind>
  void expect(bool ok, Bind&& bind) {
    ++tuples_;
    if (target_) return replay_match(!ok, bind);
    if (!ok && !decided_) decide(bind);
  }

  // For searches.
  template <class Bind>
  void found_if(bool hit, Bind&& bind) {
    ++tuples_;
    if (target_) return replay_match(hit, bind);
    if (hit && !decided_) decide(bind);
  }

  LawCheck finish() const {
    LawCheck out;
    out.id = spec_.id;
    out.statement = spec_.statement;
    out.quantifiers = spec_.quantifiers;
    out.kind = spec_.kind;
    out.cases = cases_;
    out.tuples = tuples_;
    out.skipped = skipped_;
    out.witness = witness_;
    const bool all_skipped = cases_ == 0 && !skipped_.empty();
    if (spec_.kind == CheckKind::Search) {
      out.verdict = decided_ ? Verdict::Found : all_skipped ? Verdict::Skipped : Verdict::NotFound;
    } else {
      out.verdict = decided_ ? Verdict::Fail : all_skipped ? Verdict::Skipped : Verdict::Pass;
    }
    return out;
  }

 private:
  struct SkipCase {
    std::string what;
  };

  static std::vector<std::string> parse_object_names(const CheckSpec& spec) {
    std::vector<std::string> names;
    if (spec.quantifiers.empty()) return names;
    const std::string& q = spec.quantifiers.front();
    const auto colon = q.find(':');
    if (colon == std::string::npos) return names;
    const std::string kind = q.substr(colon + 1);
    if (kind.find("obj") == std::string::npos && kind.find("set") == std::string::npos) return names;
    std::string cur;
    for (char ch : q.substr(0, colon)) {
      if (ch == ',') {
        names.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    if (!cur.empty()) names.push_back(cur);
    return names;
  }

  template <class Fn>
  void run_case(const Objects& objects, Fn& fn) {
    current_objects_ = &objects;
    try {
      fn(objects);
      ++cases_;
    } catch (const SkipCase& skip) {
      std::string where;
      for (std::size_t i = 0; i < objects.size(); ++i) {
        where += (i ? ", " : "") + object_names_[i] + "=" + std::to_string(objects[i].size());
      }
      skipped_.push_back(where + ": " + skip.what + " budget " + std::to_string(options_.budget));
    }
    current_objects_ = nullptr;
  }

  template <class Bind>
  void replay_match(bool outcome, Bind& bind) {
    if (decided_) return;
    WitnessBuilder<C> w(c_, target_);
    bind(w);
    if (!w.matched()) return;
    decided_ = true;
    replay_outcome_ = outcome;
  }

  template <class Bind>
  void decide(Bind& bind) {
    decided_ = true;
    WitnessBuilder<C> w(c_);
    if (current_objects_) {
      for (std::size_t i = 0; i < current_objects_->size(); ++i) w.obj(object_names_[i], (*current_objects_)[i]);
    }
    bind(w);
    witness_ = w.build();
  }

  const C& c_;
  const CheckSpec& spec_;
  SweepOptions options_;
  std::vector<std::string> object_names_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<M>> homs_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<M>> pures_;
  const Objects* current_objects_ = nullptr;
  const ReplayTarget<M>* target_ = nullptr;
  std::optional<bool> replay_outcome_;
  bool decided_ = false;
  std::uint64_t cases_ = 0;
  std::uint64_t tuples_ = 0;
  std::vector<std::string> skipped_;
  std::optional<Witness> witness_;
};

// Indices of the strongly equal elements of a hom list, for quantifying over
// f' with f' ≡ f without a quadratic scan per use.
template <class M>
std::vector<std::vector<std::size_t>> equal_classes(const std::vector<M>& ms) {
  std::vector<std::vector<std::size_t>> out(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (ms[i] == ms[j]) out[i].push_back(j);
    }
  }
  return out;
}

// Row-major boolean matrix of f_i ≲ f_j.
template <CartesianEffectCategory C>
std::vector<char> semi_matrix(const C& c, const std::vector<MorphismOf<C>>& ms) {
  std::vector<char> out(ms.size() * ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) out[i * ms.size() + j] = c.semi_eq(ms[i], ms[j]);
  }
  return out;
}

}  // namespace cec
