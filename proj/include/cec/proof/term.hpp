#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cec/proof/object.hpp"

namespace cec::proof {

enum class Op {
  Id,
  Bang,
  Proj1,
  Proj2,
  Swap,      // swap[A,B] : B*A -> A*B
  Assoc,     // assoc[A,B,C] : A*(B*C) -> (A*B)*C
  AssocInv,  // assoc_inv[A,B,C] : (A*B)*C -> A*(B*C)
  Rho,       // rho[A] : A*U -> A
  Diag,
  Sym,
  Comp,  // n-ary, flattened; args[0] is applied last
  Pair,
  Prod,
  LTimes,
  RTimes,
  LPair,
  RPair,
};

// For Pair and Prod: FV when the right component is pure, VF otherwise.
// When both components are pure the canonical side is FV.
enum class Side { FV, VF };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Op op;
  Side side = Side::FV;
  std::string name;       // Sym only
  std::vector<Obj> objs;  // structural constants
  std::vector<TermPtr> args;
  Obj dom, cod;
  bool pure;
  std::string key;  // canonical rendering; equal keys mean equal terms
};

TermPtr make_id(const Obj& a);
TermPtr make_bang(const Obj& a);
TermPtr make_proj1(const Obj& a, const Obj& b);
TermPtr make_proj2(const Obj& a, const Obj& b);
TermPtr make_swap(const Obj& a, const Obj& b);
TermPtr make_assoc(const Obj& a, const Obj& b, const Obj& c);
TermPtr make_assoc_inv(const Obj& a, const Obj& b, const Obj& c);
TermPtr make_rho(const Obj& a);
TermPtr make_diag(const Obj& a);
TermPtr make_sym(const std::string& name, const Obj& dom, const Obj& cod, bool pure);

// g after f. Throws TypeError on a dom/cod mismatch.
TermPtr make_comp(const TermPtr& g, const TermPtr& f);
TermPtr make_pairing(const TermPtr& a, const TermPtr& b);
TermPtr make_prod(const TermPtr& a, const TermPtr& b);
TermPtr make_ltimes(const TermPtr& a, const TermPtr& b);
TermPtr make_rtimes(const TermPtr& a, const TermPtr& b);
TermPtr make_lpair(const TermPtr& a, const TermPtr& b);
TermPtr make_rpair(const TermPtr& a, const TermPtr& b);

// Composition factors, outermost first; a non-composite is its own single factor.
std::vector<TermPtr> factors(const TermPtr& t);
TermPtr compose_all(const std::vector<TermPtr>& fs);

bool same(const TermPtr& a, const TermPtr& b);

}  // namespace cec::proof
