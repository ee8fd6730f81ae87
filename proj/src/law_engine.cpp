#include "cec/engine/law_engine_impl.hpp"

namespace cec {

#define CEC_LAW_ENGINE_INSTANTIATE(C)                                                           \
  template LawReport run_suite<C>(const C&, const SuiteRequest&);                               \
  template LawReport check_effect_axioms<C>(const C&, const std::vector<FinSet>&, std::uint64_t); \
  template LawReport purity_closure_check<C>(const C&, const std::vector<FinSet>&, std::uint64_t); \
  template LawReport check_arrow_laws<C>(const C&, const SweepOptions&);                        \
  template std::optional<Witness> find_witness<C>(const C&, const std::string&, const SweepOptions&); \
  template FanoutResult<MorphismOf<C>> check_fanout_not_product<C>(const C&, const SweepOptions&); \
  template bool verify_witness<C>(const C&, const std::string&, const Witness&);

CEC_LAW_ENGINE_INSTANTIATE(PartialCategory)
CEC_LAW_ENGINE_INSTANTIATE(StateCategory)
CEC_LAW_ENGINE_INSTANTIATE(MaybeKleisliCategory)

}  // namespace cec
