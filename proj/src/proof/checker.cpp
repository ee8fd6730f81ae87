#include "cec/proof/checker.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>

namespace cec::proof {

namespace fs = std::filesystem;

namespace {

using Factors = std::vector<TermPtr>;

const char* rel_text(Rel r) { return r == Rel::Strong ? "≡" : "≲"; }

[[noreturn]] void fail(const std::string& reason) { throw RuleFailure(reason); }

bool same_factors(const Factors& a, std::size_t from, const Factors& b) {
  if (from + b.size() > a.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!same(a[from + i], b[i])) return false;
  return true;
}

// Builds an expected term; a type error means the judgment has the wrong shape.
std::optional<TermPtr> build(const std::function<TermPtr()>& f) {
  try {
    return f();
  } catch (const TypeError&) {
    return std::nullopt;
  }
}

bool matches(const std::optional<TermPtr>& expected, const TermPtr& actual) {
  return expected && same(*expected, actual);
}

std::vector<std::pair<TermPtr, TermPtr>> orientations(const Judgment& j) {
  if (j.rel == Rel::Strong) return {{j.lhs, j.rhs}, {j.rhs, j.lhs}};
  return {{j.lhs, j.rhs}};
}

void need_strong(const std::string& rule, const Judgment& j) {
  if (j.rel != Rel::Strong) fail(rule + " yields ≡, not ≲");
}

// Axiom with a fixed ≡ conclusion, accepted in either orientation.
void strong_axiom(const std::string& rule, const Judgment& j,
                  const std::function<bool(const TermPtr&, const TermPtr&)>& shape) {
  need_strong(rule, j);
  for (const auto& [l, r] : orientations(j))
    if (shape(l, r)) return;
  fail("not an instance of " + rule);
}

// Axiom whose relation depends on purity: ≡ when `strong` holds for the
// matched instance, ≲ otherwise.
void graded_axiom(const std::string& rule, const Judgment& j,
                  const std::function<std::optional<bool>(const TermPtr&, const TermPtr&)>& shape,
                  const std::string& why_semi) {
  for (const auto& [l, r] : orientations(j)) {
    std::optional<bool> strong = shape(l, r);
    if (!strong) continue;
    if (*strong && j.rel == Rel::Semi) fail(rule + " yields ≡ here; weaken it explicitly");
    if (!*strong && j.rel == Rel::Strong) fail(rule + " yields only ≲ here: " + why_semi);
    return;
  }
  fail("not an instance of " + rule);
}

void axiom(const std::string& rule, const Judgment& j) {
  if (rule == "refl") {
    need_strong(rule, j);
    if (!same(j.lhs, j.rhs)) fail("sides differ");
  } else if (rule == "unit_left") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      return f.size() >= 2 && f[0]->op == Op::Id &&
             same(compose_all(Factors(f.begin() + 1, f.end())), r);
    });
  } else if (rule == "unit_right") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      return f.size() >= 2 && f.back()->op == Op::Id &&
             same(compose_all(Factors(f.begin(), f.end() - 1)), r);
    });
  } else if (rule == "pair_fst" || rule == "pair_snd") {
    const bool fst = rule == "pair_fst";
    graded_axiom(
        rule, j,
        [fst](const TermPtr& l, const TermPtr& r) -> std::optional<bool> {
          Factors f = factors(l);
          if (f.size() != 2 || f[0]->op != (fst ? Op::Proj1 : Op::Proj2) || f[1]->op != Op::Pair)
            return std::nullopt;
          const auto& a = f[1]->args;
          if (!same(a[fst ? 0 : 1], r)) return std::nullopt;
          return a[fst ? 1 : 0]->pure;
        },
        fst ? "the second component is not pure" : "the first component is not pure");
  } else if (rule == "prod_fst" || rule == "prod_snd") {
    const bool fst = rule == "prod_fst";
    graded_axiom(
        rule, j,
        [fst](const TermPtr& l, const TermPtr& r) -> std::optional<bool> {
          Factors f = factors(l);
          if (f.size() != 2 || f[0]->op != (fst ? Op::Proj1 : Op::Proj2) || f[1]->op != Op::Prod)
            return std::nullopt;
          const auto& a = f[1]->args;
          auto expected = build([&] {
            return fst ? make_comp(a[0], make_proj1(a[0]->dom, a[1]->dom))
                       : make_comp(a[1], make_proj2(a[0]->dom, a[1]->dom));
          });
          if (!matches(expected, r)) return std::nullopt;
          return a[fst ? 1 : 0]->pure;
        },
        fst ? "the second factor is not pure" : "the first factor is not pure");
  } else if (rule == "prod_def") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      if (l->op != Op::Prod) return false;
      const auto& a = l->args;
      return matches(build([&] {
                       return make_pairing(make_comp(a[0], make_proj1(a[0]->dom, a[1]->dom)),
                                        make_comp(a[1], make_proj2(a[0]->dom, a[1]->dom)));
                     }),
                     r);
    });
  } else if (rule == "ltimes_def" || rule == "rtimes_def") {
    const bool left = rule == "ltimes_def";
    strong_axiom(rule, j, [left](const TermPtr& l, const TermPtr& r) {
      if (l->op != (left ? Op::LTimes : Op::RTimes)) return false;
      const TermPtr& f = l->args[0];
      const TermPtr& g = l->args[1];
      return matches(build([&] {
                       if (left)
                         return make_comp(make_prod(make_id(f->cod), g), make_prod(f, make_id(g->dom)));
                       return make_comp(make_prod(f, make_id(g->cod)), make_prod(make_id(f->dom), g));
                     }),
                     r);
    });
  } else if (rule == "lpair_def" || rule == "rpair_def") {
    const bool left = rule == "lpair_def";
    strong_axiom(rule, j, [left](const TermPtr& l, const TermPtr& r) {
      if (l->op != (left ? Op::LPair : Op::RPair)) return false;
      const TermPtr& f = l->args[0];
      const TermPtr& g = l->args[1];
      return matches(build([&] {
                       return make_comp(left ? make_ltimes(f, g) : make_rtimes(f, g), make_diag(f->dom));
                     }),
                     r);
    });
  } else if (rule == "diag_def") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      if (l->op != Op::Diag) return false;
      const Obj& a = l->objs[0];
      return same(make_pairing(make_id(a), make_id(a)), r);
    });
  } else if (rule == "swap_fst" || rule == "swap_snd") {
    const bool fst = rule == "swap_fst";
    strong_axiom(rule, j, [fst](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      if (f.size() != 2 || f[0]->op != (fst ? Op::Proj1 : Op::Proj2) || f[1]->op != Op::Swap)
        return false;
      const Obj& a = f[1]->objs[0];
      const Obj& b = f[1]->objs[1];
      return same(fst ? make_proj2(b, a) : make_proj1(b, a), r);
    });
  } else if (rule == "swap_inv") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      if (f.size() != 2 || f[1]->op != Op::Swap) return false;
      const Obj& a = f[1]->objs[0];
      const Obj& b = f[1]->objs[1];
      return same(f[0], make_swap(b, a)) && same(make_id(Obj::product(b, a)), r);
    });
  } else if (rule == "assoc_1" || rule == "assoc_2" || rule == "assoc_3") {
    const int which = rule.back() - '0';
    strong_axiom(rule, j, [which](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      if (f.back()->op != Op::Assoc) return false;
      const Obj& a = f.back()->objs[0];
      const Obj& b = f.back()->objs[1];
      const Obj& c = f.back()->objs[2];
      const Obj bc = Obj::product(b, c);
      const Obj ab = Obj::product(a, b);
      TermPtr al = f.back();
      if (which == 1)
        return same(l, compose_all({make_proj1(a, b), make_proj1(ab, c), al})) &&
               same(r, make_proj1(a, bc));
      if (which == 2)
        return same(l, compose_all({make_proj2(a, b), make_proj1(ab, c), al})) &&
               same(r, make_comp(make_proj1(b, c), make_proj2(a, bc)));
      return same(l, make_comp(make_proj2(ab, c), al)) &&
             same(r, make_comp(make_proj2(b, c), make_proj2(a, bc)));
    });
  } else if (rule == "assoc_iso") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      Factors f = factors(l);
      if (f.size() != 2 || r->op != Op::Id) return false;
      const bool inv_first = f[0]->op == Op::AssocInv && f[1]->op == Op::Assoc;
      const bool fwd_first = f[0]->op == Op::Assoc && f[1]->op == Op::AssocInv;
      return (inv_first || fwd_first) && f[0]->objs[0] == f[1]->objs[0] &&
             f[0]->objs[1] == f[1]->objs[1] && f[0]->objs[2] == f[1]->objs[2];
    });
  } else if (rule == "rho_def") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      return l->op == Op::Rho && same(r, make_proj1(l->objs[0], Obj::unit()));
    });
  } else if (rule == "bang_semi") {
    if (j.rel != Rel::Semi) fail("bang_semi yields ≲, not ≡");
    if (j.rhs->op != Op::Bang || !j.lhs->cod.is_unit()) fail("not an instance of bang_semi");
  } else if (rule == "bang_pure") {
    strong_axiom(rule, j, [](const TermPtr& l, const TermPtr& r) {
      return r->op == Op::Bang && l->cod.is_unit();
    });
    const TermPtr& other = j.rhs->op == Op::Bang ? j.lhs : j.rhs;
    if (!other->pure) fail("bang_pure needs a pure morphism, " + other->key + " is not pure");
  } else {
    fail("unknown rule '" + rule + "'");
  }
}

bool is_axiom(const std::string& rule) {
  static const std::set<std::string> names = {
      "refl",       "unit_left",  "unit_right", "pair_fst",   "pair_snd",  "prod_fst",
      "prod_snd",   "prod_def",   "ltimes_def", "rtimes_def", "lpair_def", "rpair_def",
      "diag_def",   "swap_fst",   "swap_snd",   "swap_inv",   "assoc_1",   "assoc_2",
      "assoc_3",    "assoc_iso",  "rho_def",    "bang_semi",  "bang_pure"};
  return names.count(rule) > 0;
}

void arity(const std::string& rule, const std::vector<Judgment>& p, std::size_t n) {
  if (p.size() != n)
    fail(rule + " takes " + std::to_string(n) + " premise" + (n == 1 ? "" : "s") + ", got " +
         std::to_string(p.size()));
}

void premise_rel(const std::string& rule, const Judgment& p, Rel want) {
  if (p.rel != want) fail(rule + " needs a " + rel_text(want) + " premise");
}

// Context rules. The premise sides must appear as the same contiguous block of
// factors on both sides of the conclusion, with an identical outer prefix of
// length >= min_prefix and inner suffix of length >= min_suffix.
void context_rule(const std::string& rule, const Judgment& j, const Judgment& p, bool allow_prefix,
                  bool allow_suffix, bool prefix_must_be_pure) {
  if (j.rel != p.rel) fail(rule + " keeps the premise relation " + rel_text(p.rel));
  Factors fl = factors(j.lhs), fr = factors(j.rhs), pl = factors(p.lhs), pr = factors(p.rhs);
  bool impure_prefix = false;
  for (std::size_t i = 0; i <= fl.size(); ++i) {
    if (i > 0 && !allow_prefix) break;
    if (fl.size() < i + pl.size() || fr.size() < i + pr.size()) break;
    const std::size_t s = fl.size() - i - pl.size();
    if (s != fr.size() - i - pr.size()) continue;
    if (s > 0 && !allow_suffix) continue;
    if (i == 0 && s == 0) continue;
    if (!same_factors(fl, i, pl) || !same_factors(fr, i, pr)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) ok = same(fl[k], fr[k]);
    for (std::size_t k = 0; k < s && ok; ++k) ok = same(fl[fl.size() - 1 - k], fr[fr.size() - 1 - k]);
    if (!ok) continue;
    if (prefix_must_be_pure && i > 0 && !compose_all(Factors(fl.begin(), fl.begin() + i))->pure) {
      impure_prefix = true;
      continue;
    }
    return;
  }
  if (impure_prefix) fail("repl_≲ outer morphism not pure");
  fail("conclusion is not the premise in a context allowed by " + rule);
}

Obj subst_obj(const Obj& o, const std::map<std::string, Obj>& objs) {
  if (o.is_unit()) return o;
  if (o.is_product()) return Obj::product(subst_obj(o.left(), objs), subst_obj(o.right(), objs));
  return objs.at(o.name());
}

TermPtr subst(const TermPtr& t, const std::map<std::string, Obj>& objs,
              const std::map<std::string, TermPtr>& syms) {
  auto o = [&](std::size_t i) { return subst_obj(t->objs[i], objs); };
  auto a = [&](std::size_t i) { return subst(t->args[i], objs, syms); };
  switch (t->op) {
    case Op::Id: return make_id(o(0));
    case Op::Bang: return make_bang(o(0));
    case Op::Proj1: return make_proj1(o(0), o(1));
    case Op::Proj2: return make_proj2(o(0), o(1));
    case Op::Swap: return make_swap(o(0), o(1));
    case Op::Assoc: return make_assoc(o(0), o(1), o(2));
    case Op::AssocInv: return make_assoc_inv(o(0), o(1), o(2));
    case Op::Rho: return make_rho(o(0));
    case Op::Diag: return make_diag(o(0));
    case Op::Sym: return syms.at(t->name);
    case Op::Comp: {
      Factors fs;
      for (std::size_t i = 0; i < t->args.size(); ++i) fs.push_back(a(i));
      return compose_all(fs);
    }
    case Op::Pair: return make_pairing(a(0), a(1));
    case Op::Prod: return make_prod(a(0), a(1));
    case Op::LTimes: return make_ltimes(a(0), a(1));
    case Op::RTimes: return make_rtimes(a(0), a(1));
    case Op::LPair: return make_lpair(a(0), a(1));
    case Op::RPair: return make_rpair(a(0), a(1));
  }
  throw UsageError("bad term");
}

bool unify(const Obj& pattern, const Obj& target, std::map<std::string, Obj>& objs) {
  if (pattern.is_unit()) return target.is_unit();
  if (pattern.is_product())
    return target.is_product() && unify(pattern.left(), target.left(), objs) &&
           unify(pattern.right(), target.right(), objs);
  auto [it, fresh] = objs.emplace(pattern.name(), target);
  return fresh || it->second == target;
}

Judgment subst(const Judgment& j, const std::map<std::string, Obj>& objs,
               const std::map<std::string, TermPtr>& syms) {
  return {j.rel, subst(j.lhs, objs, syms), subst(j.rhs, objs, syms)};
}

void lemma(const Step& step, const std::vector<Judgment>& premises, const Scope& scope,
           LemmaLibrary* lib) {
  const std::string& name = step.by.lemma;
  if (!lib) fail("lemma " + name + " cannot be resolved without a lemma library");
  const ProofScript& cited = lib->resolve(name);
  const std::string who = "lemma " + name;

  std::map<std::string, Obj> objs;
  std::map<std::string, TermPtr> syms;
  try {
    for (const auto& [var, text] : step.by.instantiation) {
      if (cited.scope.has_object(var)) {
        objs.emplace(var, parse_object(text, scope));
      } else if (!cited.scope.symbol(var)) {
        fail(who + " has no variable '" + var + "'");
      }
    }
    for (const auto& [var, text] : step.by.instantiation) {
      const SymbolDecl* d = cited.scope.symbol(var);
      if (!d) continue;
      TermPtr t = parse_term(text, scope);
      if (d->pure && !t->pure) fail(who + ": pure symbol '" + var + "' instantiated with impure term " + t->key);
      if (!unify(d->dom, t->dom, objs) || !unify(d->cod, t->cod, objs))
        fail(who + ": " + var + " := " + t->key + " has type " + t->dom.text() + " -> " + t->cod.text() +
             ", which does not fit " + d->dom.text() + " -> " + d->cod.text());
      syms.emplace(var, t);
    }
  } catch (const ParseError& e) {
    fail(who + ": bad instantiation: " + e.what());
  } catch (const TypeError& e) {
    fail(who + ": bad instantiation: " + e.what());
  }
  for (const auto& d : cited.scope.symbols)
    if (!syms.count(d.name)) fail(who + ": symbol '" + d.name + "' is not instantiated");
  for (const auto& o : cited.scope.objects)
    if (!objs.count(o)) fail(who + ": object '" + o + "' is not determined");

  try {
    arity(who, premises, cited.assumptions.size());
    for (std::size_t i = 0; i < premises.size(); ++i) {
      Judgment want = subst(cited.assumptions[i].judgment, objs, syms);
      if (!same(want, premises[i]))
        fail(who + ": premise " + std::to_string(i + 1) + " must be " + render(want));
    }
    Judgment want = subst(*cited.goal, objs, syms);
    if (!same(want, step.judgment)) fail(who + " concludes " + render(want));
  } catch (const TypeError& e) {
    fail(who + ": instantiation is ill-typed: " + e.what());
  }
}

void rule(const Step& step, const std::vector<Judgment>& p, const Scope& scope, LemmaLibrary* lib) {
  const std::string& r = step.by.rule;
  const Judgment& j = step.judgment;
  if (r == "lemma") return lemma(step, p, scope, lib);
  if (is_axiom(r)) {
    arity(r, p, 0);
    return axiom(r, j);
  }
  if (r == "sym_le") fail("sym_≲ is not a rule");
  if (r == "sym_eq") {
    arity(r, p, 1);
    premise_rel(r, p[0], Rel::Strong);
    need_strong(r, j);
    if (!same(j.lhs, p[0].rhs) || !same(j.rhs, p[0].lhs)) fail("conclusion is not the premise reversed");
    return;
  }
  if (r == "trans_eq" || r == "trans_le") {
    const bool strong = r == "trans_eq";
    if (p.size() < 2) fail(r + " takes at least 2 premises");
    for (const auto& q : p)
      if (strong) premise_rel(r, q, Rel::Strong);
    if (strong) need_strong(r, j);
    else if (j.rel != Rel::Semi) fail(r + " yields ≲, not ≡");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!same(p[i].rhs, p[i + 1].lhs))
        fail("premises " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " do not chain");
    if (!same(j.lhs, p.front().lhs) || !same(j.rhs, p.back().rhs))
      fail("conclusion does not join the ends of the chain");
    return;
  }
  if (r == "comp") {
    arity(r, p, 2);
    if (p[0].rel == p[1].rel) fail("comp needs one ≡ premise and one ≲ premise");
    if (j.rel != Rel::Semi) fail("comp yields ≲, not ≡");
    if (!same(p[0].rhs, p[1].lhs)) fail("premises do not chain");
    if (!same(j.lhs, p[0].lhs) || !same(j.rhs, p[1].rhs)) fail("conclusion does not join the ends of the chain");
    return;
  }
  if (r == "weaken") {
    arity(r, p, 1);
    premise_rel(r, p[0], Rel::Strong);
    if (j.rel != Rel::Semi) fail("weaken yields ≲");
    if (!same(j.lhs, p[0].lhs) || !same(j.rhs, p[0].rhs)) fail("conclusion differs from the premise");
    return;
  }
  if (r == "pure_coincide") {
    arity(r, p, 1);
    premise_rel(r, p[0], Rel::Semi);
    need_strong(r, j);
    if (!p[0].lhs->pure || !p[0].rhs->pure) fail("pure_coincide needs both sides pure");
    if (!same(j.lhs, p[0].lhs) || !same(j.rhs, p[0].rhs)) fail("conclusion differs from the premise");
    return;
  }
  if (r == "subst_eq" || r == "subst_le" || r == "repl_eq" || r == "repl_le" || r == "subst_repl_eq" ||
      r == "subst_repl_le") {
    arity(r, p, 1);
    const bool strong = r.ends_with("_eq");
    premise_rel(r, p[0], strong ? Rel::Strong : Rel::Semi);
    const bool prefix = r.starts_with("repl") || r.starts_with("subst_repl");
    const bool suffix = r.starts_with("subst");
    return context_rule(r, j, p[0], prefix, suffix, !strong);
  }
  if (r == "pair_unique") {
    arity(r, p, 2);
    need_strong(r, j);
    const TermPtr& h = j.lhs;
    const TermPtr& pair = j.rhs;
    if (pair->op != Op::Pair) fail("pair_unique concludes h ≡ <a, b>");
    const TermPtr& a = pair->args[0];
    const TermPtr& b = pair->args[1];
    auto q1h = build([&] { return make_comp(make_proj1(a->cod, b->cod), h); });
    auto q2h = build([&] { return make_comp(make_proj2(a->cod, b->cod), h); });
    if (!q1h || !q2h) fail("pair_unique: " + h->key + " does not have the pair's type");
    if (!matches(q1h, p[0].lhs) || !same(p[0].rhs, a))
      fail("first premise must relate " + (*q1h)->key + " and " + a->key);
    if (!matches(q2h, p[1].lhs) || !same(p[1].rhs, b))
      fail("second premise must relate " + (*q2h)->key + " and " + b->key);
    const bool fv = p[0].rel == Rel::Strong && b->pure;
    const bool vf = p[1].rel == Rel::Strong && a->pure;
    if (!fv && !vf) fail("pair_unique needs ≡ on the component paired with a pure one");
    return;
  }
  fail("unknown rule '" + r + "'");
}

}  // namespace

std::string Outcome::summary() const {
  switch (kind) {
    case Kind::Valid: return "valid";
    case Kind::ParseError: return "parse error: " + reason;
    case Kind::TypeError:
      return label.empty() ? "type error: " + reason : "type error at step '" + label + "': " + reason;
    case Kind::RuleViolation: return "invalid at step '" + label + "': " + reason;
    case Kind::GoalMismatch:
      return label.empty() ? "goal mismatch: " + reason
                           : "goal mismatch at step '" + label + "': " + reason;
  }
  return "?";
}

Outcome check_script(const ProofScript& script, LemmaLibrary* lemmas) {
  std::map<std::string, Judgment> known;
  for (const auto& a : script.assumptions) known.emplace(a.label, a.judgment);
  for (const Step& step : script.steps) {
    try {
      std::vector<Judgment> premises;
      for (const auto& label : step.by.premises) {
        auto it = known.find(label);
        if (it == known.end()) fail("premise '" + label + "' is not an earlier step");
        premises.push_back(it->second);
      }
      rule(step, premises, script.scope, lemmas);
    } catch (const RuleFailure& e) {
      return {Outcome::Kind::RuleViolation, step.label, e.what()};
    }
    known.emplace(step.label, step.judgment);
  }
  if (!script.goal) return {Outcome::Kind::GoalMismatch, "", "script has no goal"};
  if (script.steps.empty()) return {Outcome::Kind::GoalMismatch, "", "script has no steps"};
  const Step& last = script.steps.back();
  if (!same(last.judgment, *script.goal))
    return {Outcome::Kind::GoalMismatch, last.label,
            "final step proves " + render(last.judgment) + " but the goal is " + render(*script.goal)};
  return {};
}

Outcome check_text(const std::string& text, LemmaLibrary* lemmas) {
  try {
    return check_script(parse_script(text), lemmas);
  } catch (const ParseError& e) {
    return {Outcome::Kind::ParseError, "", e.what()};
  } catch (const TypeError& e) {
    return {Outcome::Kind::TypeError, e.label(), e.what()};
  }
}

void LemmaLibrary::add_dir(const std::string& dir) {
  if (std::find(dirs_.begin(), dirs_.end(), dir) == dirs_.end()) dirs_.push_back(dir);
}

const ProofScript& LemmaLibrary::resolve(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) {
    if (it->second.in_progress) throw RuleFailure("lemma " + name + " is cited circularly");
    if (!it->second.outcome.valid())
      throw RuleFailure("lemma " + name + " is not valid (" + it->second.outcome.summary() + ")");
    return *it->second.script;
  }
  std::optional<std::string> path;
  for (const auto& dir : dirs_) {
    fs::path candidate = fs::path(dir) / (name + ".eqp");
    if (fs::is_regular_file(candidate)) {
      path = candidate.string();
      break;
    }
  }
  if (!path) throw RuleFailure("lemma " + name + " not found");
  Entry& entry = cache_[name];
  entry.in_progress = true;
  try {
    entry.script = parse_script_file(*path);
    entry.outcome = check_script(*entry.script, this);
  } catch (const ParseError& e) {
    entry.outcome = {Outcome::Kind::ParseError, "", e.what()};
  } catch (const TypeError& e) {
    entry.outcome = {Outcome::Kind::TypeError, e.label(), e.what()};
  }
  entry.in_progress = false;
  if (!entry.outcome.valid())
    throw RuleFailure("lemma " + name + " is not valid (" + entry.outcome.summary() + ")");
  return *entry.script;
}

std::vector<ScriptResult> check_paths(const std::vector<std::string>& paths) {
  LemmaLibrary lib;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      lib.add_dir(p);
      std::vector<std::string> here;
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".eqp") here.push_back(e.path().string());
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else if (fs::is_regular_file(p)) {
      fs::path parent = fs::path(p).parent_path();
      lib.add_dir(parent.empty() ? "." : parent.string());
      files.push_back(p);
    } else {
      throw UsageError("no such script or directory: " + p);
    }
  }
  std::vector<ScriptResult> out;
  for (const auto& f : files) {
    ScriptResult r;
    r.path = f;
    r.name = fs::path(f).stem().string();
    try {
      r.outcome = check_script(parse_script_file(f), &lib);
    } catch (const ParseError& e) {
      r.outcome = {Outcome::Kind::ParseError, "", e.what()};
    } catch (const TypeError& e) {
      r.outcome = {Outcome::Kind::TypeError, e.label(), e.what()};
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScriptResult> check_path(const std::string& path) { return check_paths({path}); }

std::vector<ScriptResult> check_corpus(const std::string& directory) {
  if (!fs::is_directory(directory)) throw UsageError("not a directory: " + directory);
  return check_paths({directory});
}

LawReport proofs_report(const std::vector<ScriptResult>& results) {
  LawReport report;
  report.suite = "proofs";
  report.instance.kind = "syntax";
  for (const auto& r : results) {
    LawCheck c;
    c.id = r.name;
    c.statement = r.path;
    c.kind = CheckKind::Law;
    c.verdict = r.valid() ? Verdict::Pass : Verdict::Fail;
    c.cases = 1;
    if (!r.valid()) {
      Witness w;
      if (!r.outcome.label.empty()) w.bindings.emplace_back("step", r.outcome.label);
      w.bindings.emplace_back("reason", r.outcome.summary());
      c.witness = std::move(w);
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace cec::proof
