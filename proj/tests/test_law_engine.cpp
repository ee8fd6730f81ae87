#include <fstream>
#include <set>
#include <sstream>

#include "cec/engine/law_engine_impl.hpp"
#include "cec/error.hpp"
#include "cec/law_inventory.hpp"
#include "doctest.h"

using namespace cec;

namespace {

// Partial maps with a semi-congruence that relates everything.
struct CorruptedPartial : PartialCategory {
  std::string name() const { return "corrupted"; }
  bool semi_eq(const PartialMap&, const PartialMap&) const { return true; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SweepOptions sizes(std::size_t n) {
  SweepOptions o;
  o.max_size = n;
  return o;
}

LawCheck single(const auto& c, const std::string& id, SweepOptions o = {}) {
  SuiteRequest r;
  r.ids = {id};
  r.options = std::move(o);
  return run_suite(c, r).checks.at(0);
}

}  // namespace

TEST_SUITE("law_engine") {

TEST_CASE("inventory matches the checked-in manifest") {
  CHECK(manifest_text() == slurp(std::string(CEC_SOURCE_DIR) + "/tests/data/law_manifest.txt"));
}

TEST_CASE("inventory ids are unique and every id has an implementation") {
  std::set<std::string> ids;
  const auto& registry = check_registry<PartialCategory>();
  for (const CheckSpec& spec : law_inventory()) {
    CHECK(ids.insert(spec.id).second);
    CHECK(registry.count(spec.id) == 1);
    CHECK_FALSE(spec.suites.empty());
    CHECK_FALSE(spec.quantifiers.empty());
  }
  CHECK(registry.size() == ids.size());
}

TEST_CASE("unknown ids and suites are rejected") {
  const PartialCategory c;
  SuiteRequest r;
  r.ids = {"no.such.check"};
  CHECK_THROWS_AS(run_suite(c, r), UnknownCheckId);
  SuiteRequest s;
  s.suite = "nope";
  CHECK_THROWS_AS(run_suite(c, s), UnknownCheckId);
  // laws are not searches
  CHECK_THROWS_AS(find_witness(c, "cat.assoc", {}), UnknownCheckId);
}

TEST_CASE("a report lists every requested id in order") {
  const PartialCategory c;
  SuiteRequest r;
  r.suite = "sequential";
  const LawReport report = run_suite(c, r);
  const auto ids = suite_ids("sequential");
  REQUIRE(report.checks.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(report.checks[i].id == ids[i]);
  CHECK(report.ok());
}

TEST_CASE("corrupted semi-congruence fails coincidence on pure maps with a distinct pair") {
  const CorruptedPartial c;
  const LawCheck check = single(c, "effect.coincide_on_pure");
  REQUIRE(check.verdict == Verdict::Fail);
  REQUIRE(check.witness);
  CHECK(check.witness->at("v1") != check.witness->at("v2"));
  CHECK(c.is_pure(c.parse(check.witness->at("v1"))));
  CHECK(c.is_pure(c.parse(check.witness->at("v2"))));
  CHECK(verify_witness(c, "effect.coincide_on_pure", *check.witness));
  // the same tuple is fine in the honest instance
  CHECK_FALSE(verify_witness(PartialCategory{}, "effect.coincide_on_pure", *check.witness));
  CHECK_THROWS_AS(check_arrow_laws(c, sizes(2)), ContractViolation);
}

TEST_CASE("witness re-verification rejects altered witnesses") {
  const PartialCategory c;
  const auto w = find_witness(c, "witness.semi_not_symmetric", sizes(2));
  REQUIRE(w);
  CHECK(verify_witness(c, "witness.semi_not_symmetric", *w));
  Witness swapped = *w;
  for (auto& [name, value] : swapped.bindings) {
    if (name == "f") value = w->at("g");
    if (name == "g") value = w->at("f");
  }
  CHECK_FALSE(verify_witness(c, "witness.semi_not_symmetric", swapped));
}

TEST_CASE("non-symmetry witness in the partial instance is the undefined map below a total one") {
  const PartialCategory c;
  const auto w = find_witness(c, "witness.semi_not_symmetric", sizes(2));
  REQUIRE(w);
  const PartialMap f = c.parse(w->at("f")), g = c.parse(w->at("g"));
  CHECK(c.semi_eq(f, g));
  CHECK_FALSE(c.semi_eq(g, f));
  CHECK(f.table() == Table{kBottom});
}

TEST_CASE("sequential products agree in the partial instance") {
  CHECK_FALSE(find_witness(PartialCategory{}, "witness.seq_not_parallel", sizes(2)));
}

TEST_CASE("state writers separate the two sequential products at size 1") {
  const StateCategory c(FinSet{2});
  const auto w = find_witness(c, "witness.seq_not_parallel", sizes(1));
  REQUIRE(w);
  const StateMap f1 = c.parse(w->at("f1")), f2 = c.parse(w->at("f2"));
  CHECK(seq_left(c, f1, f2) != seq_right(c, f1, f2));
  CHECK_FALSE(c.is_pure(f1));
  CHECK_FALSE(c.is_pure(f2));
}

TEST_CASE("diagnostics tell the instances apart") {
  const PartialCategory p;
  const StateCategory s(FinSet{2});
  CHECK(single(p, "diag.semi_symmetric").verdict == Verdict::Fail);
  CHECK(single(p, "diag.replacement_all").verdict == Verdict::Pass);
  CHECK(single(s, "diag.semi_symmetric").verdict == Verdict::Pass);
  CHECK(single(s, "diag.replacement_all").verdict == Verdict::Fail);
  // diagnostics never make a report fail
  SuiteRequest r;
  r.suite = "effect";
  CHECK(run_suite(p, r).ok());
  CHECK(run_suite(s, r).ok());
}

TEST_CASE("an empty explicit object list passes vacuously") {
  const LawReport report = check_effect_axioms(PartialCategory{}, {});
  CHECK(report.ok());
  for (const LawCheck& c : report.checks) {
    CHECK(c.cases == 0);
    CHECK(c.tuples == 0);
  }
}

TEST_CASE("explicit object lists restrict the sweep") {
  const LawReport report = check_effect_axioms(PartialCategory{}, {FinSet{0}, FinSet{3}});
  CHECK(report.ok());
  CHECK(report.max_size == 3);
  // cat.assoc has four objects
  CHECK(report.find("cat.assoc")->cases == 16);
}

TEST_CASE("over-budget cases are skipped, never failed") {
  const StateCategory c(FinSet{2});
  SweepOptions o;
  o.max_size = 2;
  o.budget = 10;
  const LawCheck check = single(c, "cat.assoc", o);
  CHECK(check.verdict != Verdict::Fail);
  CHECK_FALSE(check.skipped.empty());
  for (const auto& s : check.skipped) CHECK(s.find("over budget 10") != std::string::npos);
  o.budget = 1;
  CHECK(single(c, "cat.assoc", o).verdict == Verdict::Skipped);
}

TEST_CASE("reports are deterministic and omit wall time unless asked") {
  const StateCategory c(FinSet{2});
  SuiteRequest r;
  r.suite = "cartesian";
  r.options.max_size = 1;
  const std::string a = to_structured(run_suite(c, r));
  const std::string b = to_structured(run_suite(c, r));
  CHECK(a == b);
  CHECK(a.find("wall_seconds") == std::string::npos);
  r.timing = true;
  CHECK(run_suite(c, r).wall_seconds.has_value());
}

TEST_CASE("first witness is the minimum in enumeration order") {
  const StateCategory c(FinSet{2});
  const auto w = find_witness(c, "witness.replacement_fails", sizes(2));
  REQUIRE(w);
  // no witness exists with every object of size 1
  CHECK_FALSE(find_witness(c, "witness.replacement_fails", sizes(1)));
  CHECK(w->at("X") == "1");
  CHECK(verify_witness(c, "witness.replacement_fails", *w));
}

TEST_CASE("structured report keys") {
  const PartialCategory c;
  const std::string text = to_structured(run_suite(c, SuiteRequest{"witness", {}, sizes(1), false}));
  for (const char* key : {"\"suite\"", "\"instance\"", "\"kind\"", "\"max_size\"", "\"budget\"", "\"checks\"",
                          "\"id\"", "\"statement\"", "\"quantifiers\"", "\"verdict\"", "\"cases\"", "\"tuples\"",
                          "\"failed\""}) {
    CHECK(text.find(key) != std::string::npos);
  }
}

TEST_CASE("purity closure: identities and composites of pure maps are pure") {
  const LawReport report = purity_closure_check(StateCategory(FinSet{2}), {FinSet{1}, FinSet{2}});
  CHECK(report.find("purity.identity")->verdict == Verdict::Pass);
  CHECK(report.find("purity.closed")->verdict == Verdict::Pass);
}

}  // TEST_SUITE
