#include "cec/law_inventory.hpp"

#include <algorithm>

#include "cec/error.hpp"

namespace cec {
namespace {

using Q = std::vector<std::string>;

CheckSpec law(std::string id, std::string suite, std::string statement, Q q) {
  return {std::move(id), {std::move(suite)}, CheckKind::Law, std::move(statement), std::move(q)};
}
CheckSpec diagnostic(std::string id, std::string suite, std::string statement, Q q) {
  return {std::move(id), {std::move(suite)}, CheckKind::Diagnostic, std::move(statement), std::move(q)};
}
CheckSpec search(std::string id, std::vector<std::string> suites, std::string statement, Q q) {
  return {std::move(id), std::move(suites), CheckKind::Search, std::move(statement), std::move(q)};
}

std::vector<CheckSpec> build() {
  return {
      // Effect category axioms.
      law("cat.unit_left", "effect", "id_Y ∘ f ≡ f", {"X, Y: obj", "f: X → Y"}),
      law("cat.unit_right", "effect", "f ∘ id_X ≡ f", {"X, Y: obj", "f: X → Y"}),
      law("cat.assoc", "effect", "h ∘ (g ∘ f) ≡ (h ∘ g) ∘ f",
          {"X, Y, Z, W: obj", "f: X → Y", "g: Y → Z", "h: Z → W"}),
      law("effect.pure_wide", "effect", "id_X is pure, and w ∘ v is pure for pure v, w",
          {"X, Y, Z: obj", "v: X ⇝ Y", "w: Y ⇝ Z"}),
      law("effect.pure_embedding", "effect", "f is pure iff f is the embedding of a function of sets",
          {"X, Y: obj", "f: X → Y"}),
      law("effect.weaker", "effect", "f ≡ g ⇒ f ≲ g (≡ is equality, so f ≲ f)", {"X, Y: obj", "f: X → Y"}),
      law("effect.transitive", "effect", "f ≲ g ∧ g ≲ h ⇒ f ≲ h",
          {"X, Y: obj", "f: X → Y", "g: X → Y", "h: X → Y"}),
      law("effect.coincide_on_pure", "effect", "v1 ≲ v2 ⇔ v1 ≡ v2", {"X, Y: obj", "v1: X ⇝ Y", "v2: X ⇝ Y"}),
      law("effect.substitution", "effect", "g1 ≲ g2 ⇒ g1 ∘ f ≲ g2 ∘ f",
          {"X, Y, Z: obj", "f: X → Y", "g1: Y → Z", "g2: Y → Z"}),
      law("effect.replacement_pure", "effect", "g1 ≲ g2 ⇒ v ∘ g1 ≲ v ∘ g2",
          {"X, Y, Z: obj", "g1: X → Y", "g2: X → Y", "v: Y ⇝ Z"}),
      diagnostic("diag.semi_symmetric", "effect", "f ≲ g ⇒ g ≲ f", {"X, Y: obj", "f: X → Y", "g: X → Y"}),
      diagnostic("diag.replacement_all", "effect", "g1 ≲ g2 ⇒ h ∘ g1 ≲ h ∘ g2",
                 {"X, Y, Z: obj", "g1: X → Y", "g2: X → Y", "h: Y → Z"}),

      // Purity closure.
      law("purity.identity", "purity", "id_X is pure", {"X: obj"}),
      law("purity.closed", "purity", "f, g pure ⇒ g ∘ f pure", {"X, Y, Z: obj", "f: X → Y", "g: Y → Z"}),
      diagnostic("purity.reflects", "purity", "g ∘ f pure ⇒ f pure ∧ g pure",
                 {"X, Y, Z: obj", "f: X → Y", "g: Y → Z"}),

      // Products on the pure fragment.
      law("basic.terminal", "basic", "every pure v: X ⇝ U equals ⟨⟩_X", {"X: obj", "v: X ⇝ U"}),
      law("basic.pair", "basic", "q1 ∘ ⟨v1,v2⟩ ≡ v1 ∧ q2 ∘ ⟨v1,v2⟩ ≡ v2, and ⟨v1,v2⟩ is pure",
          {"X, Y1, Y2: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2"}),
      law("basic.pair.unique", "basic", "h ≡ ⟨q1 ∘ h, q2 ∘ h⟩", {"X, Y1, Y2: obj", "h: X ⇝ Y1×Y2"}),
      law("basic.product", "basic", "q1 ∘ (v1×v2) ≡ v1 ∘ p1 ∧ q2 ∘ (v1×v2) ≡ v2 ∘ p2",
          {"X1, X2, Y1, Y2: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2"}),
      law("basic.composition.1", "basic", "⟨w1,w2⟩ ∘ v ≡ ⟨w1 ∘ v, w2 ∘ v⟩",
          {"X, Y, Z1, Z2: obj", "v: X ⇝ Y", "w1: Y ⇝ Z1", "w2: Y ⇝ Z2"}),
      law("basic.composition.2", "basic", "(w1×w2) ∘ ⟨v1,v2⟩ ≡ ⟨w1 ∘ v1, w2 ∘ v2⟩",
          {"X, Y1, Y2, Z1, Z2: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2", "w1: Y1 ⇝ Z1", "w2: Y2 ⇝ Z2"}),
      law("basic.composition.3", "basic", "(w1×w2) ∘ (v1×v2) ≡ (w1 ∘ v1)×(w2 ∘ v2)",
          {"X1, X2, Y1, Y2, Z1, Z2: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2", "w1: Y1 ⇝ Z1", "w2: Y2 ⇝ Z2"}),
      law("basic.swap.iso", "basic", "γ_(X2,X1) ∘ γ_(X1,X2) ≡ id, and γ is pure", {"X1, X2: obj"}),
      law("basic.swap.1", "basic", "γ_Y ∘ ⟨v2,v1⟩ ≡ ⟨v1,v2⟩", {"X, Y1, Y2: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2"}),
      law("basic.swap.2", "basic", "γ_Y ∘ (v2×v1) ∘ γ_X⁻¹ ≡ v1×v2",
          {"X1, X2, Y1, Y2: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2"}),
      law("basic.assoc.iso", "basic", "α⁻¹ ∘ α ≡ id ∧ α ∘ α⁻¹ ≡ id, and α is pure", {"X1, X2, X3: obj"}),
      law("basic.assoc.1", "basic", "α_Y ∘ ⟨v1,⟨v2,v3⟩⟩ ≡ ⟨⟨v1,v2⟩,v3⟩",
          {"X, Y1, Y2, Y3: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2", "v3: X ⇝ Y3"}),
      law("basic.assoc.2", "basic", "α_Y ∘ (v1×(v2×v3)) ≡ ((v1×v2)×v3) ∘ α_X",
          {"X1, X2, X3, Y1, Y2, Y3: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2", "v3: X3 ⇝ Y3"}),
      law("basic.unit_proj.iso", "basic", "ρ_X ∘ ⟨id_X, ⟨⟩_X⟩ ≡ id_X ∧ ⟨id_X, ⟨⟩_X⟩ ∘ ρ_X ≡ id_(X×U)", {"X: obj"}),
      law("basic.parallelism", "basic", "v1×v2 ≡ (id×v2) ∘ (v1×id) ≡ (v1×id) ∘ (id×v2)",
          {"X1, X2, Y1, Y2: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2"}),

      // Semi-terminal object, semi-pairs, semi-products, decorated propositions.
      law("def.semi_terminal", "cartesian", "g ≲ ⟨⟩_X, and ⟨⟩_X is pure", {"X: obj", "g: X → U"}),
      law("def.structure_pure", "cartesian", "⟨⟩_X, p1, p2 are pure", {"X1, X2: obj"}),
      law("def.semi_pair.fv", "cartesian", "q1 ∘ ⟨f,v⟩ ≡ f ∧ q2 ∘ ⟨f,v⟩ ≲ v",
          {"X, Y1, Y2: obj", "f: X → Y1", "v: X ⇝ Y2"}),
      law("def.semi_pair.fv.unique", "cartesian", "q1 ∘ h ≡ f ∧ q2 ∘ h ≲ v ⇒ h ≡ ⟨f,v⟩ (with f := q1 ∘ h)",
          {"X, Y1, Y2: obj", "h: X → Y1×Y2", "v: X ⇝ Y2"}),
      law("def.semi_pair.vf", "cartesian", "q1 ∘ ⟨v,f⟩ ≲ v ∧ q2 ∘ ⟨v,f⟩ ≡ f",
          {"X, Y1, Y2: obj", "v: X ⇝ Y1", "f: X → Y2"}),
      law("def.semi_pair.vf.unique", "cartesian", "q1 ∘ h ≲ v ∧ q2 ∘ h ≡ f ⇒ h ≡ ⟨v,f⟩ (with f := q2 ∘ h)",
          {"X, Y1, Y2: obj", "h: X → Y1×Y2", "v: X ⇝ Y1"}),
      law("def.semi_pair.pure", "cartesian", "both semi-pairs of pure v1, v2 coincide and are pure",
          {"X, Y1, Y2: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2"}),
      law("def.semi_product.fv", "cartesian", "q1 ∘ (f×v) ≡ f ∘ p1 ∧ q2 ∘ (f×v) ≲ v ∘ p2",
          {"X1, X2, Y1, Y2: obj", "f: X1 → Y1", "v: X2 ⇝ Y2"}),
      law("def.semi_product.fv.unique", "cartesian",
          "q1 ∘ h ≡ f ∘ p1 ∧ q2 ∘ h ≲ v ∘ p2 ⇒ h ≡ f×v (f is determined by h)",
          {"X1, X2, Y1, Y2: obj", "h: X1×X2 → Y1×Y2", "v: X2 ⇝ Y2"}),
      law("def.semi_product.vf", "cartesian", "q1 ∘ (v×f) ≲ v ∘ p1 ∧ q2 ∘ (v×f) ≡ f ∘ p2",
          {"X1, X2, Y1, Y2: obj", "v: X1 ⇝ Y1", "f: X2 → Y2"}),
      law("def.semi_product.vf.unique", "cartesian",
          "q1 ∘ h ≲ v ∘ p1 ∧ q2 ∘ h ≡ f ∘ p2 ⇒ h ≡ v×f (f is determined by h)",
          {"X1, X2, Y1, Y2: obj", "h: X1×X2 → Y1×Y2", "v: X1 ⇝ Y1"}),
      law("def.semi_product.pure", "cartesian", "both semi-products of pure v1, v2 coincide and are pure",
          {"X1, X2, Y1, Y2: obj", "v1: X1 ⇝ Y1", "v2: X2 ⇝ Y2"}),
      law("prop.congruence.decorated.1", "cartesian", "f1 ≡ f1' ∧ v2 ≡ v2' ⇒ ⟨f1,v2⟩ ≡ ⟨f1',v2'⟩",
          {"X, Y1, Y2: obj", "f1: X → Y1", "f1': X → Y1", "v2: X ⇝ Y2", "v2': X ⇝ Y2"}),
      law("prop.congruence.decorated.2", "cartesian", "f1 ≡ f1' ∧ v2 ≡ v2' ⇒ f1×v2 ≡ f1'×v2'",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f1': X1 → Y1", "v2: X2 ⇝ Y2", "v2': X2 ⇝ Y2"}),
      law("prop.composition.decorated.1", "cartesian", "⟨g1,w2⟩ ∘ v ≡ ⟨g1 ∘ v, w2 ∘ v⟩",
          {"X, Y, Z1, Z2: obj", "v: X ⇝ Y", "g1: Y → Z1", "w2: Y ⇝ Z2"}),
      law("prop.composition.decorated.1.sym", "cartesian", "⟨w1,g2⟩ ∘ v ≡ ⟨w1 ∘ v, g2 ∘ v⟩",
          {"X, Y, Z1, Z2: obj", "v: X ⇝ Y", "w1: Y ⇝ Z1", "g2: Y → Z2"}),
      law("prop.composition.decorated.2", "cartesian", "(g1×w2) ∘ ⟨f1,v2⟩ ≡ ⟨g1 ∘ f1, w2 ∘ v2⟩",
          {"X, Y1, Y2, Z1, Z2: obj", "f1: X → Y1", "g1: Y1 → Z1", "v2: X ⇝ Y2", "w2: Y2 ⇝ Z2"}),
      law("prop.composition.decorated.2.sym", "cartesian", "(w1×g2) ∘ ⟨v1,f2⟩ ≡ ⟨w1 ∘ v1, g2 ∘ f2⟩",
          {"X, Y1, Y2, Z1, Z2: obj", "f2: X → Y2", "g2: Y2 → Z2", "v1: X ⇝ Y1", "w1: Y1 ⇝ Z1"}),
      law("prop.composition.decorated.3", "cartesian", "(g1×w2) ∘ (f1×v2) ≡ (g1 ∘ f1)×(w2 ∘ v2)",
          {"X1, X2, Y1, Y2, Z1, Z2: obj", "f1: X1 → Y1", "g1: Y1 → Z1", "v2: X2 ⇝ Y2", "w2: Y2 ⇝ Z2"}),
      law("prop.composition.decorated.3.sym", "cartesian", "(w1×g2) ∘ (v1×f2) ≡ (w1 ∘ v1)×(g2 ∘ f2)",
          {"X1, X2, Y1, Y2, Z1, Z2: obj", "f2: X2 → Y2", "g2: Y2 → Z2", "v1: X1 ⇝ Y1", "w1: Y1 ⇝ Z1"}),
      law("prop.swap.decorated.1", "cartesian", "γ_Y ∘ ⟨v2,f1⟩ ≡ ⟨f1,v2⟩",
          {"X, Y1, Y2: obj", "f1: X → Y1", "v2: X ⇝ Y2"}),
      law("prop.swap.decorated.2", "cartesian", "γ_Y ∘ (v2×f1) ∘ γ_X⁻¹ ≡ f1×v2",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "v2: X2 ⇝ Y2"}),
      law("prop.swap.decorated.2.sym", "cartesian", "γ_Y ∘ (f2×v1) ∘ γ_X⁻¹ ≡ v1×f2",
          {"X1, X2, Y1, Y2: obj", "f2: X2 → Y2", "v1: X1 ⇝ Y1"}),
      law("prop.assoc.decorated.1", "cartesian", "α_Y ∘ ⟨f1,⟨v2,v3⟩⟩ ≡ ⟨⟨f1,v2⟩,v3⟩",
          {"X, Y1, Y2, Y3: obj", "f1: X → Y1", "v2: X ⇝ Y2", "v3: X ⇝ Y3"}),
      law("prop.assoc.decorated.2", "cartesian", "α_Y ∘ (f1×(v2×v3)) ≡ ((f1×v2)×v3) ∘ α_X",
          {"X1, X2, X3, Y1, Y2, Y3: obj", "f1: X1 → Y1", "v2: X2 ⇝ Y2", "v3: X3 ⇝ Y3"}),
      law("prop.parallelism.decorated", "cartesian", "f1×v2 ≡ (id×v2) ∘ (f1×id) ≡ (f1×id) ∘ (id×v2)",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "v2: X2 ⇝ Y2"}),

      // Sequential products.
      law("prop.seq_lproduct", "sequential", "f1 ⋉ v2 ≡ f1×v2", {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "v2: X2 ⇝ Y2"}),
      law("prop.seq_rproduct", "sequential", "v1 ⋊ f2 ≡ v1×f2", {"X1, X2, Y1, Y2: obj", "v1: X1 ⇝ Y1", "f2: X2 → Y2"}),
      law("prop.seq_pair.pure", "sequential", "⟨v1,v2⟩_l ≡ ⟨v1,v2⟩ ≡ ⟨v1,v2⟩_r",
          {"X, Y1, Y2: obj", "v1: X ⇝ Y1", "v2: X ⇝ Y2"}),
      law("prop.seq_congruence", "sequential", "f1 ≡ f1' ∧ f2 ≡ f2' ⇒ f1 ⋉ f2 ≡ f1' ⋉ f2'",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2", "f1': X1 → Y1", "f2': X2 → Y2"}),
      law("prop.seq_comp", "sequential", "(g1 ⋉ g2) ∘ (f1×v2) ≡ (g1 ∘ f1) ⋉ (g2 ∘ v2)",
          {"X1, X2, Y1, Y2, Z1, Z2: obj", "g1: Y1 → Z1", "f1: X1 → Y1", "g2: Y2 → Z2", "v2: X2 ⇝ Y2"}),
      law("prop.seq_swap", "sequential", "γ_Y ∘ (f2 ⋊ f1) ∘ γ_X⁻¹ ≡ f1 ⋉ f2",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2"}),
      law("prop.seq_assoc", "sequential", "α_Y ∘ (f1 ⋉ (f2 ⋉ f3)) ≡ ((f1 ⋉ f2) ⋉ f3) ∘ α_X",
          {"X1, X2, X3, Y1, Y2, Y3: obj", "f2: X2 → Y2", "f3: X3 → Y3", "f1: X1 → Y1"}),
      law("prop.seq_val", "sequential", "q1 ∘ (f1 ⋉ f2) ≲ f1 ∘ p1",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2"}),
      law("lemma.seq_terminal", "sequential", "⟨id_Y1, x2 ∘ ⟨⟩_Y1⟩ ∘ f1 ≡ ⟨f1, x2 ∘ ⟨⟩_X1⟩",
          {"X1, Y1, X2: obj", "f1: X1 → Y1", "x2: U ⇝ X2"}),
      law("prop.seq_com", "sequential", "q2 ∘ (f1 ⋉ f2) ∘ ⟨id_X1, x2 ∘ ⟨⟩_X1⟩ ≡ f2 ∘ x2 ∘ ⟨⟩_Y1 ∘ f1",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2", "x2: U ⇝ X2"}),
      law("thm.seq_prod.value", "sequential", "q1 ∘ (f1 ⋉ f2) ∘ ⟨x1,x2⟩ ≲ f1 ∘ x1",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2", "x1: U ⇝ X1", "x2: U ⇝ X2"}),
      law("thm.seq_prod.effect", "sequential", "q2 ∘ (f1 ⋉ f2) ∘ ⟨x1,x2⟩ ≡ f2 ∘ x2 ∘ ⟨⟩_Y1 ∘ f1 ∘ x1",
          {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2", "x1: U ⇝ X1", "x2: U ⇝ X2"}),
      law("cor.seq_pair.value", "sequential", "q1 ∘ ⟨f1,f2⟩_l ≲ f1", {"X, Y1, Y2: obj", "f1: X → Y1", "f2: X → Y2"}),
      law("cor.seq_pair.point", "sequential", "q1 ∘ ⟨f1,f2⟩_l ∘ x ≲ f1 ∘ x",
          {"X, Y1, Y2: obj", "f1: X → Y1", "f2: X → Y2", "x: U ⇝ X"}),
      law("cor.seq_pair.effect", "sequential", "q2 ∘ ⟨f1,f2⟩_l ∘ x ≡ f2 ∘ x ∘ ⟨⟩_Y1 ∘ f1 ∘ x",
          {"X, Y1, Y2: obj", "f1: X → Y1", "f2: X → Y2", "x: U ⇝ X"}),

      // Existential claims: the negation of a law that does not hold in general.
      search("witness.seq_not_parallel", {"witness"}, "∃ f1, f2: f1 ⋉ f2 ≢ f1 ⋊ f2",
             {"X1, X2, Y1, Y2: obj", "f1: X1 → Y1", "f2: X2 → Y2"}),
      search("witness.fanout_not_product", {"witness", "arrows"}, "∃ f, g: q1 ∘ ⟨f,g⟩_l ≢ f",
             {"X, Y1, Y2: obj", "f: X → Y1", "g: X → Y2"}),
      search("witness.replacement_fails", {"witness"}, "∃ g1 ≲ g2, h: h ∘ g1 ≴ h ∘ g2",
             {"X, Y, Z: obj", "g1: X → Y", "g2: X → Y", "h: Y → Z"}),
      search("witness.semi_not_symmetric", {"witness"}, "∃ f ≲ g: g ≴ f", {"X, Y: obj", "f: X → Y", "g: X → Y"}),

      // Arrow laws for arr = J, >>> = reverse composition, first f = f × id.
      law("arrow.law.1", "arrows", "f >>> arr id = f, i.e. f ∘ id ≡ f", {"X, Y: obj", "f: X → Y"}),
      law("arrow.law.2", "arrows", "arr id >>> f = f, i.e. id ∘ f ≡ f", {"X, Y: obj", "f: X → Y"}),
      law("arrow.law.3", "arrows", "(f >>> g) >>> h = f >>> (g >>> h)",
          {"X, Y, Z, W: obj", "f: X → Y", "g: Y → Z", "h: Z → W"}),
      law("arrow.law.4", "arrows", "arr (v >>> w) = arr v >>> arr w", {"X, Y, Z: set", "v: X → Y", "w: Y → Z"}),
      law("arrow.law.5", "arrows", "first (arr v) = arr (first v)", {"X, Y, Z: set", "v: X → Y"}),
      law("arrow.law.6", "arrows", "first (f >>> g) = first f >>> first g",
          {"X, Y, Z, W: obj", "f: X → Y", "g: Y → Z"}),
      law("arrow.law.7", "arrows", "first f >>> arr (id × v) = arr (id × v) >>> first f",
          {"X, Y, Z, W: obj", "f: X → Y", "v: Z → W (set)"}),
      law("arrow.law.8", "arrows", "first f >>> arr fst = arr fst >>> f (Z = U gives ρ)",
          {"X, Y, Z: obj", "f: X → Y"}),
      law("arrow.law.9", "arrows", "first (first f) >>> arr assoc = arr assoc >>> first f",
          {"X, Y, Z1, Z2: obj", "f: X → Y"}),
      law("arrow.second", "arrows", "second f = arr swap >>> first f >>> arr swap ≡ id × f",
          {"X, Y, Z: obj", "f: X → Y"}),
      law("arrow.seqpar", "arrows", "f *** g = first f >>> second g ≡ f ⋉ g",
          {"X1, X2, Y1, Y2: obj", "f: X1 → Y1", "g: X2 → Y2"}),
      law("arrow.fanout", "arrows", "f &&& g = arr diag >>> (f *** g) ≡ ⟨f,g⟩_l",
          {"X, Y1, Y2: obj", "f: X → Y1", "g: X → Y2"}),
      law("arrow.fanout.semi", "arrows", "(f &&& g) >>> arr fst ≲ f", {"X, Y1, Y2: obj", "f: X → Y1", "g: X → Y2"}),
  };
}

}  // namespace

const std::vector<CheckSpec>& law_inventory() {
  static const std::vector<CheckSpec> inventory = build();
  return inventory;
}

const CheckSpec& check_spec(std::string_view id) {
  for (const CheckSpec& s : law_inventory()) {
    if (s.id == id) return s;
  }
  throw UnknownCheckId(std::string(id));
}

std::vector<std::string> suite_names() {
  return {"effect", "purity", "basic", "cartesian", "sequential", "witness", "arrows", "all"};
}

std::vector<std::string> suite_ids(std::string_view suite) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UnknownCheckId("suite " + std::string(suite));
  }
  std::vector<std::string> ids;
  for (const CheckSpec& s : law_inventory()) {
    const bool member = suite == "all"
                            ? std::any_of(s.suites.begin(), s.suites.end(), [](const std::string& x) { return x != "arrows"; })
                            : std::find(s.suites.begin(), s.suites.end(), suite) != s.suites.end();
    if (member) ids.push_back(s.id);
  }
  return ids;
}

std::string manifest_text() {
  std::string out;
  for (const CheckSpec& s : law_inventory()) out += s.suites.front() + " " + s.id + "\n";
  return out;
}

}  // namespace cec
