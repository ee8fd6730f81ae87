#pragma once

// Definitions of the law engine templates. Included by src/law_engine.cpp for
// the shipped instances, and by tests that run the engine on other instances.

#include <chrono>
#include <functional>
#include <map>

#include "cec/engine/checks_arrows.hpp"
#include "cec/engine/checks_cartesian.hpp"
#include "cec/engine/checks_core.hpp"
#include "cec/engine/checks_sequential.hpp"
#include "cec/law_engine.hpp"

namespace cec {

template <class C>
using CheckFn = void (*)(Sweep<C>&);

template <class C>
const std::map<std::string, CheckFn<C>, std::less<>>& check_registry() {
  using namespace checks;
  static const std::map<std::string, CheckFn<C>, std::less<>> registry = {
      {"cat.unit_left", &cat_unit_left<C>},
      {"cat.unit_right", &cat_unit_right<C>},
      {"cat.assoc", &cat_assoc<C>},
      {"effect.pure_wide", &effect_pure_wide<C>},
      {"effect.pure_embedding", &effect_pure_embedding<C>},
      {"effect.weaker", &effect_weaker<C>},
      {"effect.transitive", &effect_transitive<C>},
      {"effect.coincide_on_pure", &effect_coincide_on_pure<C>},
      {"effect.substitution", &effect_substitution<C>},
      {"effect.replacement_pure", &effect_replacement_pure<C>},
      {"diag.semi_symmetric", &diag_semi_symmetric<C>},
      {"diag.replacement_all", &diag_replacement_all<C>},
      {"purity.identity", &purity_identity<C>},
      {"purity.closed", &purity_closed<C>},
      {"purity.reflects", &purity_reflects<C>},
      {"basic.terminal", &basic_terminal<C>},
      {"basic.pair", &basic_pair<C>},
      {"basic.pair.unique", &basic_pair_unique<C>},
      {"basic.product", &basic_product<C>},
      {"basic.composition.1", &basic_composition_1<C>},
      {"basic.composition.2", &basic_composition_2<C>},
      {"basic.composition.3", &basic_composition_3<C>},
      {"basic.swap.iso", &basic_swap_iso<C>},
      {"basic.swap.1", &basic_swap_1<C>},
      {"basic.swap.2", &basic_swap_2<C>},
      {"basic.assoc.iso", &basic_assoc_iso<C>},
      {"basic.assoc.1", &basic_assoc_1<C>},
      {"basic.assoc.2", &basic_assoc_2<C>},
      {"basic.unit_proj.iso", &basic_unit_proj_iso<C>},
      {"basic.parallelism", &basic_parallelism<C>},
      {"def.semi_terminal", &def_semi_terminal<C>},
      {"def.structure_pure", &def_structure_pure<C>},
      {"def.semi_pair.fv", &def_semi_pair_fv<C>},
      {"def.semi_pair.fv.unique", &def_semi_pair_fv_unique<C>},
      {"def.semi_pair.vf", &def_semi_pair_vf<C>},
      {"def.semi_pair.vf.unique", &def_semi_pair_vf_unique<C>},
      {"def.semi_pair.pure", &def_semi_pair_pure<C>},
      {"def.semi_product.fv", &def_semi_product_fv<C>},
      {"def.semi_product.fv.unique", &def_semi_product_fv_unique<C>},
      {"def.semi_product.vf", &def_semi_product_vf<C>},
      {"def.semi_product.vf.unique", &def_semi_product_vf_unique<C>},
      {"def.semi_product.pure", &def_semi_product_pure<C>},
      {"prop.congruence.decorated.1", &prop_congruence_decorated_1<C>},
      {"prop.congruence.decorated.2", &prop_congruence_decorated_2<C>},
      {"prop.composition.decorated.1", &prop_composition_decorated_1<C>},
      {"prop.composition.decorated.1.sym", &prop_composition_decorated_1_sym<C>},
      {"prop.composition.decorated.2", &prop_composition_decorated_2<C>},
      {"prop.composition.decorated.2.sym", &prop_composition_decorated_2_sym<C>},
      {"prop.composition.decorated.3", &prop_composition_decorated_3<C>},
      {"prop.composition.decorated.3.sym", &prop_composition_decorated_3_sym<C>},
      {"prop.swap.decorated.1", &prop_swap_decorated_1<C>},
      {"prop.swap.decorated.2", &prop_swap_decorated_2<C>},
      {"prop.swap.decorated.2.sym", &prop_swap_decorated_2_sym<C>},
      {"prop.assoc.decorated.1", &prop_assoc_decorated_1<C>},
      {"prop.assoc.decorated.2", &prop_assoc_decorated_2<C>},
      {"prop.parallelism.decorated", &prop_parallelism_decorated<C>},
      {"prop.seq_lproduct", &prop_seq_lproduct<C>},
      {"prop.seq_rproduct", &prop_seq_rproduct<C>},
      {"prop.seq_pair.pure", &prop_seq_pair_pure<C>},
      {"prop.seq_congruence", &prop_seq_congruence<C>},
      {"prop.seq_comp", &prop_seq_comp<C>},
      {"prop.seq_swap", &prop_seq_swap<C>},
      {"prop.seq_assoc", &prop_seq_assoc<C>},
      {"prop.seq_val", &prop_seq_val<C>},
      {"lemma.seq_terminal", &lemma_seq_terminal<C>},
      {"prop.seq_com", &prop_seq_com<C>},
      {"thm.seq_prod.value", &thm_seq_prod_value<C>},
      {"thm.seq_prod.effect", &thm_seq_prod_effect<C>},
      {"cor.seq_pair.value", &cor_seq_pair_value<C>},
      {"cor.seq_pair.point", &cor_seq_pair_point<C>},
      {"cor.seq_pair.effect", &cor_seq_pair_effect<C>},
      {"witness.seq_not_parallel", &witness_seq_not_parallel<C>},
      {"witness.fanout_not_product", &witness_fanout_not_product<C>},
      {"witness.replacement_fails", &witness_replacement_fails<C>},
      {"witness.semi_not_symmetric", &witness_semi_not_symmetric<C>},
      {"arrow.law.1", &arrow_law_1<C>},
      {"arrow.law.2", &arrow_law_2<C>},
      {"arrow.law.3", &arrow_law_3<C>},
      {"arrow.law.4", &arrow_law_4<C>},
      {"arrow.law.5", &arrow_law_5<C>},
      {"arrow.law.6", &arrow_law_6<C>},
      {"arrow.law.7", &arrow_law_7<C>},
      {"arrow.law.8", &arrow_law_8<C>},
      {"arrow.law.9", &arrow_law_9<C>},
      {"arrow.second", &arrow_second<C>},
      {"arrow.seqpar", &arrow_seqpar<C>},
      {"arrow.fanout", &arrow_fanout<C>},
      {"arrow.fanout.semi", &arrow_fanout_semi<C>},
  };
  return registry;
}

template <CartesianEffectCategory C>
LawCheck run_check(const C& c, const CheckSpec& spec, const SweepOptions& options) {
  const auto& registry = check_registry<C>();
  const auto it = registry.find(spec.id);
  if (it == registry.end()) throw UnknownCheckId(spec.id);
  Sweep<C> sweep(c, spec, options);
  it->second(sweep);
  return sweep.finish();
}

namespace detail {

template <CartesianEffectCategory C>
LawReport run_ids(const C& c, std::string suite, const std::vector<std::string>& ids, const SweepOptions& options,
                  bool timing) {
  std::vector<const CheckSpec*> specs;
  for (const auto& id : ids) specs.push_back(&check_spec(id));
  const auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.suite = std::move(suite);
  report.instance = describe(c);
  report.budget = options.budget;
  report.max_size = options.max_size;
  if (options.objects) {
    report.max_size = 0;
    for (FinSet x : *options.objects) report.max_size = std::max(report.max_size, x.size());
  }
  for (const CheckSpec* spec : specs) report.checks.push_back(run_check(c, *spec, options));
  if (timing) report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

template <CartesianEffectCategory C>
LawReport run_suite(const C& c, const SuiteRequest& request) {
  if (!request.ids.empty()) return detail::run_ids(c, "selection", request.ids, request.options, request.timing);
  return detail::run_ids(c, request.suite, suite_ids(request.suite), request.options, request.timing);
}

template <CartesianEffectCategory C>
LawReport check_effect_axioms(const C& c, const std::vector<FinSet>& objects, std::uint64_t budget) {
  SweepOptions options;
  options.budget = budget;
  options.objects = objects;
  return detail::run_ids(c, "effect", suite_ids("effect"), options, false);
}

template <CartesianEffectCategory C>
LawReport purity_closure_check(const C& c, const std::vector<FinSet>& objects, std::uint64_t budget) {
  SweepOptions options;
  options.budget = budget;
  options.objects = objects;
  return detail::run_ids(c, "purity", suite_ids("purity"), options, false);
}

template <CartesianEffectCategory C>
LawReport check_arrow_laws(const C& c, const SweepOptions& options) {
  static const std::vector<std::string> contract = {
      "cat.unit_left",   "cat.unit_right",     "effect.pure_wide",   "effect.coincide_on_pure",
      "def.semi_terminal", "def.structure_pure", "def.semi_pair.fv", "def.semi_pair.vf",
      "def.semi_product.fv", "def.semi_product.vf"};
  for (const auto& id : contract) {
    const LawCheck check = run_check(c, check_spec(id), options);
    if (check.verdict == Verdict::Fail) {
      throw ContractViolation("instance '" + c.name() + "' violates the cartesian effect contract: " + id);
    }
  }
  return detail::run_ids(c, "arrows", suite_ids("arrows"), options, false);
}

template <CartesianEffectCategory C>
std::optional<Witness> find_witness(const C& c, const std::string& id, const SweepOptions& options) {
  const CheckSpec& spec = check_spec(id);
  if (spec.kind != CheckKind::Search) throw UnknownCheckId(id);
  return run_check(c, spec, options).witness;
}

template <CartesianEffectCategory C>
FanoutResult<MorphismOf<C>> check_fanout_not_product(const C& c, const SweepOptions& options) {
  return {find_witness(c, "witness.fanout_not_product", options),
          run_check(c, check_spec("arrow.fanout.semi"), options)};
}

template <CartesianEffectCategory C>
bool verify_witness(const C& c, const std::string& id, const Witness& witness) {
  const CheckSpec& spec = check_spec(id);
  Sweep<C> names(c, spec, {});
  ReplayTarget<MorphismOf<C>> target;
  std::size_t max_size = 1;
  for (std::size_t i = 0; i < witness.bindings.size(); ++i) {
    const auto& [name, value] = witness.bindings[i];
    if (i < names.object_names().size()) {
      if (name != names.object_names()[i]) return false;
      target.objects.emplace_back(std::stoul(value));
      max_size = std::max(max_size, target.objects.back().size());
    } else {
      auto m = c.parse(value);
      if (c.render(m) != value) return false;
      target.morphisms.emplace_back(name, std::move(m));
    }
  }
  if (target.objects.size() != names.object_names().size()) return false;
  SweepOptions options;
  options.objects.emplace();
  for (std::size_t n = 0; n <= max_size; ++n) options.objects->emplace_back(n);
  options.budget = kSaturated;
  Sweep<C> sweep(c, spec, options);
  sweep.replay(&target);
  check_registry<C>().at(id)(sweep);
  return sweep.replay_outcome().value_or(false);
}

}  // namespace cec
