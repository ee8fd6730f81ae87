#include "cec/proof/term.hpp"

namespace cec::proof {

namespace {

std::string objs_text(const std::vector<Obj>& objs) {
  std::string s = "[";
  for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? "," : "") + objs[i].text();
  return s + "]";
}

// Operands of infix forms need parentheses when they are themselves infix.
std::string operand(const TermPtr& t) {
  switch (t->op) {
    case Op::Comp:
    case Op::Prod:
    case Op::LTimes:
    case Op::RTimes:
      return "(" + t->key + ")";
    default:
      return t->key;
  }
}

TermPtr constant(Op op, const char* name, std::vector<Obj> objs, const Obj& dom, const Obj& cod) {
  auto t = std::make_shared<Term>(Term{op, Side::FV, "", std::move(objs), {}, dom, cod, true, ""});
  t->key = std::string(name) + objs_text(t->objs);
  return t;
}

void same_domain(const char* what, const TermPtr& a, const TermPtr& b) {
  if (!(a->dom == b->dom))
    throw TypeError(std::string(what) + " components have different domains: " + a->key + " : " +
                    a->dom.text() + " and " + b->key + " : " + b->dom.text());
}

Side pure_side(const char* what, const TermPtr& a, const TermPtr& b) {
  if (b->pure) return Side::FV;
  if (a->pure) return Side::VF;
  throw TypeError(std::string(what) + " needs a pure component: " + a->key + ", " + b->key);
}

TermPtr binary(Op op, Side side, const TermPtr& a, const TermPtr& b, const Obj& dom, const Obj& cod,
               std::string key) {
  return std::make_shared<Term>(
      Term{op, side, "", {}, {a, b}, dom, cod, a->pure && b->pure, std::move(key)});
}

}  // namespace

TermPtr make_id(const Obj& a) { return constant(Op::Id, "id", {a}, a, a); }
TermPtr make_bang(const Obj& a) { return constant(Op::Bang, "bang", {a}, a, Obj::unit()); }
TermPtr make_proj1(const Obj& a, const Obj& b) {
  return constant(Op::Proj1, "p1", {a, b}, Obj::product(a, b), a);
}
TermPtr make_proj2(const Obj& a, const Obj& b) {
  return constant(Op::Proj2, "p2", {a, b}, Obj::product(a, b), b);
}
TermPtr make_swap(const Obj& a, const Obj& b) {
  return constant(Op::Swap, "swap", {a, b}, Obj::product(b, a), Obj::product(a, b));
}
TermPtr make_assoc(const Obj& a, const Obj& b, const Obj& c) {
  return constant(Op::Assoc, "assoc", {a, b, c}, Obj::product(a, Obj::product(b, c)),
                  Obj::product(Obj::product(a, b), c));
}
TermPtr make_assoc_inv(const Obj& a, const Obj& b, const Obj& c) {
  return constant(Op::AssocInv, "assoc_inv", {a, b, c}, Obj::product(Obj::product(a, b), c),
                  Obj::product(a, Obj::product(b, c)));
}
TermPtr make_rho(const Obj& a) {
  return constant(Op::Rho, "rho", {a}, Obj::product(a, Obj::unit()), a);
}
TermPtr make_diag(const Obj& a) { return constant(Op::Diag, "diag", {a}, a, Obj::product(a, a)); }

TermPtr make_sym(const std::string& name, const Obj& dom, const Obj& cod, bool pure) {
  return std::make_shared<Term>(Term{Op::Sym, Side::FV, name, {}, {}, dom, cod, pure, name});
}

TermPtr make_comp(const TermPtr& g, const TermPtr& f) {
  if (!(g->dom == f->cod))
    throw TypeError("cannot compose " + g->key + " : " + g->dom.text() + " -> " + g->cod.text() +
                    " after " + f->key + " : " + f->dom.text() + " -> " + f->cod.text());
  std::vector<TermPtr> args = factors(g);
  for (auto& x : factors(f)) args.push_back(x);
  std::string key;
  bool pure = true;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) key += " . ";
    key += args[i]->op == Op::Comp ? "(" + args[i]->key + ")" : args[i]->key;
    pure = pure && args[i]->pure;
  }
  return std::make_shared<Term>(Term{Op::Comp, Side::FV, "", {}, std::move(args), f->dom, g->cod,
                                     pure, std::move(key)});
}

TermPtr make_pairing(const TermPtr& a, const TermPtr& b) {
  same_domain("pair", a, b);
  Side side = pure_side("pair", a, b);
  return binary(Op::Pair, side, a, b, a->dom, Obj::product(a->cod, b->cod),
                "<" + a->key + ", " + b->key + ">");
}

TermPtr make_prod(const TermPtr& a, const TermPtr& b) {
  Side side = pure_side("product", a, b);
  return binary(Op::Prod, side, a, b, Obj::product(a->dom, b->dom), Obj::product(a->cod, b->cod),
                operand(a) + " * " + operand(b));
}

TermPtr make_ltimes(const TermPtr& a, const TermPtr& b) {
  return binary(Op::LTimes, Side::FV, a, b, Obj::product(a->dom, b->dom),
                Obj::product(a->cod, b->cod), operand(a) + " ltimes " + operand(b));
}

TermPtr make_rtimes(const TermPtr& a, const TermPtr& b) {
  return binary(Op::RTimes, Side::FV, a, b, Obj::product(a->dom, b->dom),
                Obj::product(a->cod, b->cod), operand(a) + " rtimes " + operand(b));
}

TermPtr make_lpair(const TermPtr& a, const TermPtr& b) {
  same_domain("sequential pair", a, b);
  return binary(Op::LPair, Side::FV, a, b, a->dom, Obj::product(a->cod, b->cod),
                "<" + a->key + ", " + b->key + ">_l");
}

TermPtr make_rpair(const TermPtr& a, const TermPtr& b) {
  same_domain("sequential pair", a, b);
  return binary(Op::RPair, Side::FV, a, b, a->dom, Obj::product(a->cod, b->cod),
                "<" + a->key + ", " + b->key + ">_r");
}

std::vector<TermPtr> factors(const TermPtr& t) {
  if (t->op == Op::Comp) return t->args;
  return {t};
}

TermPtr compose_all(const std::vector<TermPtr>& fs) {
  if (fs.empty()) throw UsageError("empty composition");
  TermPtr t = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) t = make_comp(fs[i], t);
  return t;
}

bool same(const TermPtr& a, const TermPtr& b) { return a->key == b->key; }

}  // namespace cec::proof
