#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cec/engine/sweep.hpp"
#include "cec/law_report.hpp"
#include "cec/maybe_kleisli.hpp"
#include "cec/partial_map.hpp"
#include "cec/state_map.hpp"

namespace cec {

struct SuiteRequest {
  // Suite name; ignored when ids is non-empty.
  std::string suite = "all";
  std::vector<std::string> ids;
  SweepOptions options;
  bool timing = false;
};

template <CartesianEffectCategory C>
InstanceInfo describe(const C& c) {
  InstanceInfo info{c.name(), std::nullopt};
  if constexpr (requires { c.states(); }) info.state_size = c.states().size();
  return info;
}

// Throws UnknownCheckId.
template <CartesianEffectCategory C>
LawReport run_suite(const C& c, const SuiteRequest& request);

// The effect suite (axioms plus the two diagnostics) over tuples drawn from
// an explicit object list. An empty list passes vacuously.
template <CartesianEffectCategory C>
LawReport check_effect_axioms(const C& c, const std::vector<FinSet>& objects, std::uint64_t budget = 1'000'000);

template <CartesianEffectCategory C>
LawReport purity_closure_check(const C& c, const std::vector<FinSet>& objects, std::uint64_t budget = 1'000'000);

// Checks the cartesian contract first and throws ContractViolation if it fails.
template <CartesianEffectCategory C>
LawReport check_arrow_laws(const C& c, const SweepOptions& options);

// First witness in enumeration order for a search id, nullopt if none within
// bounds. Throws UnknownCheckId if id is not a search.
template <CartesianEffectCategory C>
std::optional<Witness> find_witness(const C& c, const std::string& id, const SweepOptions& options);

template <class M>
struct FanoutResult {
  std::optional<Witness> witness;
  LawCheck semi_clause;
};

template <CartesianEffectCategory C>
FanoutResult<MorphismOf<C>> check_fanout_not_product(const C& c, const SweepOptions& options);

// Parses the witness literals and re-evaluates the conclusion on that tuple
// alone. True when a law witness still fails, or a search witness still hits.
template <CartesianEffectCategory C>
bool verify_witness(const C& c, const std::string& id, const Witness& witness);

#define CEC_LAW_ENGINE_EXTERN(C)                                                                       \
  extern template LawReport run_suite<C>(const C&, const SuiteRequest&);                               \
  extern template LawReport check_effect_axioms<C>(const C&, const std::vector<FinSet>&, std::uint64_t); \
  extern template LawReport purity_closure_check<C>(const C&, const std::vector<FinSet>&, std::uint64_t); \
  extern template LawReport check_arrow_laws<C>(const C&, const SweepOptions&);                        \
  extern template std::optional<Witness> find_witness<C>(const C&, const std::string&, const SweepOptions&); \
  extern template FanoutResult<MorphismOf<C>> check_fanout_not_product<C>(const C&, const SweepOptions&); \
  extern template bool verify_witness<C>(const C&, const std::string&, const Witness&);

CEC_LAW_ENGINE_EXTERN(PartialCategory)
CEC_LAW_ENGINE_EXTERN(StateCategory)
CEC_LAW_ENGINE_EXTERN(MaybeKleisliCategory)

#undef CEC_LAW_ENGINE_EXTERN

}  // namespace cec
