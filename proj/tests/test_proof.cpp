#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cec/partial_map.hpp"
#include "cec/proof/checker.hpp"
#include "cec/proof/evaluate.hpp"
#include "cec/state_map.hpp"
#include "doctest.h"

using namespace cec;
using namespace cec::proof;
namespace fs = std::filesystem;

namespace {

const std::string kProofs = std::string(CEC_SOURCE_DIR) + "/proofs";
const std::string kMutations = std::string(CEC_SOURCE_DIR) + "/tests/data/mutations";

Outcome check(const std::string& text) { return check_text(text); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kPairScope =
    "object X Y1 Y2\n"
    "symbol f, g : X -> Y1\n"
    "pure v, w : X ~> Y2\n";

}  // namespace

TEST_SUITE("proof") {

TEST_CASE("f == f by reflexivity") {
  const Outcome o = check("object X Y\nsymbol f : X -> Y\ngoal: f == f\na: f == f ; by refl\n");
  CHECK(o.valid());
  CHECK(o.summary() == "valid");
}

TEST_CASE("parser: comments, continuations and unicode spellings") {
  const std::string text =
      "# header\n"
      "object X Y1 Y2   # trailing\n"
      "symbol f : X → Y1\n"
      "pure v : X ⇝ Y2\n"
      "goal: p1[Y1,Y2] ∘ ⟨f, v⟩ ≡ f\n"
      "a: p1[Y1,Y2] . <f, v> \\\n"
      "   == f ; by pair_fst\n";
  const ProofScript s = parse_script(text, "t");
  CHECK(s.steps.size() == 1);
  CHECK(s.steps[0].label == "a");
  CHECK(render(*s.goal) == "p1[Y1,Y2] . <f, v> == f");
  CHECK(check_script(s).valid());
}

TEST_CASE("parser: composition is flattened and * is left-associative") {
  Scope scope;
  scope.objects = {"A", "B", "C"};
  scope.symbols = {{"f", Obj::base("A"), Obj::base("B"), false},
                   {"g", Obj::base("B"), Obj::base("C"), false},
                   {"h", Obj::base("C"), Obj::base("A"), true}};
  CHECK(parse_term("h . (g . f)", scope)->key == parse_term("(h . g) . f", scope)->key);
  CHECK(factors(parse_term("h . g . f", scope)).size() == 3);
  CHECK(parse_object("A*B*C", scope).text() == "(A*B)*C");
  CHECK(parse_term("f * h", scope)->dom.text() == "A*C");
  CHECK_FALSE(parse_term("f * h", scope)->pure);
  CHECK(parse_term("h * h", scope)->pure);
}

TEST_CASE("parser errors carry a position") {
  try {
    parse_script("object X\nsymbol f : X -> X\ngoal: f == f\na: f == f ; by refl $\n", "t");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 1);
  }
  CHECK(check("object X\nobject X\n").kind == Outcome::Kind::ParseError);
  CHECK(check("object id\n").kind == Outcome::Kind::ParseError);
  CHECK(check("object X\nsymbol f : X -> X\ngoal: f == f\na: f == f ; by refl\na: f == f ; by refl\n").kind ==
        Outcome::Kind::ParseError);
}

TEST_CASE("pairs need a pure component") {
  const Outcome o = check(kPairScope + "goal: <f, g> == <f, g>\na: <f, g> == <f, g> ; by refl\n");
  CHECK(o.kind == Outcome::Kind::TypeError);
}

TEST_CASE("ill-typed composition is a type error at its step") {
  const Outcome o = check("object X Y\nsymbol f : X -> Y\ngoal: f == f\na: f == f ; by refl\nb: f . f == f . f ; by refl\n");
  CHECK(o.kind == Outcome::Kind::TypeError);
  CHECK(o.label == "b");
}

TEST_CASE("pair axioms are graded by purity") {
  CHECK(check(kPairScope + "goal: p1[Y1,Y2] . <f, v> == f\na: p1[Y1,Y2] . <f, v> == f ; by pair_fst\n").valid());
  CHECK(check(kPairScope + "goal: p2[Y1,Y2] . <f, v> <= v\na: p2[Y1,Y2] . <f, v> <= v ; by pair_snd\n").valid());
  const Outcome strong = check(kPairScope + "goal: p2[Y1,Y2] . <f, v> == v\na: p2[Y1,Y2] . <f, v> == v ; by pair_snd\n");
  CHECK(strong.kind == Outcome::Kind::RuleViolation);
  CHECK(strong.label == "a");
  CHECK(check(kPairScope + "goal: p2[Y1,Y2] . <w, v> == v\na: p2[Y1,Y2] . <w, v> == v ; by pair_snd\n")
            .kind == Outcome::Kind::TypeError);  // <w,v> : X -> Y2*Y2
}

TEST_CASE("sym is only a rule for ==") {
  const std::string base = "object X Y\nsymbol f, g : X -> Y\n";
  CHECK(check(base + "assume a: f == g\ngoal: g == f\nb: g == f ; by sym_eq[a]\n").valid());
  const Outcome o = check(base + "assume a: f <= g\ngoal: g <= f\nb: g <= f ; by sym_le[a]\n");
  CHECK(o.kind == Outcome::Kind::RuleViolation);
  CHECK(o.reason == "sym_≲ is not a rule");
  const Outcome u = check(base + "assume a: f <= g\ngoal: g <= f\nb: g <= f ; by magic[a]\n");
  CHECK(u.reason == "unknown rule 'magic'");
}

TEST_CASE("transitivity, weakening and comp") {
  const std::string base = "object X Y\nsymbol f, g, h : X -> Y\n";
  CHECK(check(base + "assume a: f == g\nassume b: g == h\ngoal: f == h\nc: f == h ; by trans_eq[a, b]\n").valid());
  CHECK(check(base + "assume a: f <= g\nassume b: g == h\ngoal: f <= h\nc: f <= h ; by trans_le[a, b]\n").valid());
  CHECK_FALSE(check(base + "assume a: f <= g\nassume b: g == h\ngoal: f == h\nc: f == h ; by trans_eq[a, b]\n").valid());
  CHECK(check(base + "assume a: f == g\ngoal: f <= g\nc: f <= g ; by weaken[a]\n").valid());
  CHECK(check(base + "assume a: f <= g\nassume b: g == h\ngoal: f <= h\nc: f <= h ; by comp[a, b]\n").valid());
  // comp wants exactly one of each
  CHECK_FALSE(check(base + "assume a: f <= g\nassume b: g <= h\ngoal: f <= h\nc: f <= h ; by comp[a, b]\n").valid());
  CHECK_FALSE(check(base + "assume a: f == g\nassume b: g == h\ngoal: f <= h\nc: f <= h ; by comp[a, b]\n").valid());
}

TEST_CASE("replacement under <= needs a pure outer morphism, substitution does not") {
  const std::string base = "object X Y Z\nsymbol f, g : X -> Y\npure v : Y ~> Z\nsymbol h : Y -> Z\nsymbol k : Z -> X\n";
  CHECK(check(base + "assume a: f <= g\ngoal: v . f <= v . g\nb: v . f <= v . g ; by repl_le[a]\n").valid());
  const Outcome o = check(base + "assume a: f <= g\ngoal: h . f <= h . g\nb: h . f <= h . g ; by repl_le[a]\n");
  CHECK(o.reason == "repl_≲ outer morphism not pure");
  CHECK(check(base + "assume a: f == g\ngoal: h . f == h . g\nb: h . f == h . g ; by repl_eq[a]\n").valid());
  CHECK(check(base + "assume a: f <= g\ngoal: f . k <= g . k\nb: f . k <= g . k ; by subst_le[a]\n").valid());
}

TEST_CASE("premises must be earlier steps and the last step must be the goal") {
  const std::string base = "object X Y\nsymbol f, g : X -> Y\nassume a: f == g\n";
  const Outcome dangling = check(base + "goal: g == f\nb: g == f ; by sym_eq[c]\nc: f == g ; by refl\n");
  CHECK(dangling.label == "b");
  CHECK(dangling.reason == "premise 'c' is not an earlier step");
  const Outcome mismatch = check(base + "goal: g == f\nb: f == f ; by refl\n");
  CHECK(mismatch.kind == Outcome::Kind::GoalMismatch);
}

TEST_CASE("semi-terminal and pure maps into the unit") {
  const std::string base = "object X\nsymbol g : X -> U\npure v : X ~> U\n";
  CHECK(check(base + "goal: g <= bang[X]\na: g <= bang[X] ; by bang_semi\n").valid());
  CHECK(check(base + "goal: v == bang[X]\na: v == bang[X] ; by bang_pure\n").valid());
  CHECK_FALSE(check(base + "goal: g == bang[X]\na: g == bang[X] ; by bang_pure\n").valid());
}

TEST_CASE("lemmas are resolved, instantiated and checked") {
  LemmaLibrary lib({kProofs});
  const std::string base = "object A B C\nsymbol h : A -> B\npure u : A ~> C\n";
  CHECK(check_text(base + "assume x: h == h\nassume y: u == u\ngoal: <h, u> == <h, u>\n"
                          "z: <h, u> == <h, u> ; by lemma congruence_1[x, y] {f1 := h, f1' := h, v2 := u, v2' := u}\n",
                   &lib)
            .valid());
  const Outcome missing = check_text(base + "goal: h == h\nz: h == h ; by lemma nope\n", &lib);
  CHECK(missing.reason.find("not found") != std::string::npos);
}

TEST_CASE("every shipped script checks valid") {
  const auto results = check_corpus(kProofs);
  CHECK(results.size() >= 8);
  for (const auto& r : results) {
    INFO(r.path << ": " << r.summary());
    CHECK(r.valid());
  }
}

TEST_CASE("an empty directory gives an empty summary") {
  const fs::path dir = fs::temp_directory_path() / "cec_empty_corpus";
  fs::create_directories(dir);
  CHECK(check_corpus(dir.string()).empty());
  fs::remove_all(dir);
}

TEST_CASE("every mutation is rejected at the expected step") {
  std::size_t count = 0;
  std::set<std::string> names;
  for (const auto& entry : fs::directory_iterator(kMutations)) {
    if (entry.path().extension() != ".eqp") continue;
    ++count;
    const std::string text = slurp(entry.path().string());
    const std::string tag = "# expect: ";
    REQUIRE(text.rfind(tag, 0) == 0);
    const std::string line = text.substr(tag.size(), text.find('\n') - tag.size());
    const auto colon = line.find(": ");
    REQUIRE(colon != std::string::npos);
    const std::string label = line.substr(0, colon), reason = line.substr(colon + 2);
    // lemmas come from the shipped corpus
    const auto results = check_paths({kProofs, entry.path().string()});
    const ScriptResult& r = results.back();
    INFO(r.path << ": " << r.summary());
    CHECK(r.path == entry.path().string());
    CHECK_FALSE(r.valid());
    CHECK(r.outcome.label == label);
    CHECK(r.summary().find(reason) != std::string::npos);
    for (std::size_t i = 0; i + 1 < results.size(); ++i) CHECK(results[i].valid());
    names.insert(r.outcome.reason);
  }
  CHECK(count >= 5);
  CHECK(names.size() == count);
}

TEST_CASE("proofs report has one law check per script") {
  const auto report = proofs_report(check_paths({kProofs, kMutations + "/impure_replacement.eqp"}));
  CHECK(report.suite == "proofs");
  CHECK_FALSE(report.ok());
  const LawCheck* bad = report.find("impure_replacement");
  REQUIRE(bad);
  CHECK(bad->verdict == Verdict::Fail);
  REQUIRE(bad->witness);
  CHECK(bad->witness->at("step") == "d");
  CHECK(report.find("congruence_1")->verdict == Verdict::Pass);
}

TEST_CASE("evaluate_term: first projection of a pair gives back the effectful component") {
  const PartialCategory c;
  const ProofScript s = parse_script(kPairScope + "goal: p1[Y1,Y2] . <f, v> == f\n", "t");
  const FinSet x{2}, y1{2}, y2{1};
  const ObjectMap objects{{"X", x}, {"Y1", y1}, {"Y2", y2}};
  for (std::uint64_t i = 0; i < c.hom_size(x, y1); ++i) {
    for (std::uint64_t j = 0; j < pure_size(c, x, y2); ++j) {
      Assignment<PartialCategory> a{{"f", c.hom_at(x, y1, i)}, {"v", pure_at(c, x, y2, j)}};
      CHECK(evaluate_term(c, s.goal->lhs, a, objects) == a.at("f"));
    }
  }
}

TEST_CASE("evaluate_term: identity and structural constants") {
  const StateCategory c(FinSet{2});
  Scope scope;
  scope.objects = {"A", "B"};
  const ObjectMap objects{{"A", FinSet{2}}, {"B", FinSet{3}}};
  const Assignment<StateCategory> none;
  CHECK(evaluate_term(c, parse_term("id[A]", scope), none, objects) == c.identity(FinSet{2}));
  CHECK(evaluate_term(c, parse_term("p1[A,B]", scope), none, objects) == c.proj1(FinSet{2}, FinSet{3}));
  CHECK(evaluate_term(c, parse_term("swap[A,B] . swap[B,A]", scope), none, objects) ==
        c.identity(product(FinSet{2}, FinSet{3}).carrier()));
  CHECK(evaluate_term(c, parse_term("diag[A]", scope), none, objects) == diagonal(c, FinSet{2}));
}

TEST_CASE("assignments must respect types and purity") {
  const PartialCategory c;
  const ProofScript s = parse_script(kPairScope + "goal: p1[Y1,Y2] . <f, v> == f\n", "t");
  const FinSet x{1}, y1{1}, y2{1};
  const ObjectMap objects{{"X", x}, {"Y1", y1}, {"Y2", y2}};
  const PartialMap undefined = c.hom_at(x, y2, 0);
  REQUIRE_FALSE(c.is_pure(undefined));
  Assignment<PartialCategory> impure{{"f", c.hom_at(x, y1, 1)}, {"v", undefined}};
  CHECK_THROWS_AS(evaluate_term(c, s.goal->lhs, impure, objects), AssignmentMismatch);
  Assignment<PartialCategory> wrong_type{{"f", c.hom_at(FinSet{2}, y1, 1)}, {"v", c.hom_at(x, y2, 1)}};
  CHECK_THROWS_AS(evaluate_term(c, s.goal->lhs, wrong_type, objects), AssignmentMismatch);
  Assignment<PartialCategory> ok{{"f", c.hom_at(x, y1, 1)}, {"v", c.hom_at(x, y2, 1)}};
  CHECK_THROWS_AS(evaluate_term(c, s.goal->lhs, ok, ObjectMap{{"X", x}}), AssignmentMismatch);
  CHECK_THROWS_AS(evaluate_term(c, s.goal->lhs, Assignment<PartialCategory>{}, objects), AssignmentMismatch);
}

TEST_CASE_TEMPLATE("synthesized purity agrees with the instance", C, PartialCategory, StateCategory) {
  const C c = [] {
    if constexpr (std::is_same_v<C, StateCategory>) return StateCategory(FinSet{2});
    else return PartialCategory{};
  }();
  Scope scope;
  scope.objects = {"A"};
  scope.symbols = {{"v", Obj::base("A"), Obj::base("A"), true}, {"w", Obj::base("A"), Obj::base("A"), true}};
  const std::vector<std::string> terms = {"v . w", "<v, w>", "v * w", "v ltimes w", "v rtimes w", "<v, w>_l",
                                          "<v, w>_r", "swap[A,A] . (v * w)", "assoc[A,A,A] . (v * (w * v))",
                                          "rho[A] . <v, bang[A]>", "diag[A] . v"};
  for (std::size_t n = 1; n <= 2; ++n) {
    const FinSet a{n};
    const ObjectMap objects{{"A", a}};
    for (const auto& text : terms) {
      const TermPtr t = parse_term(text, scope);
      REQUIRE(t->pure);
      for (std::uint64_t i = 0; i < pure_size(c, a, a); ++i) {
        for (std::uint64_t j = 0; j < pure_size(c, a, a); ++j) {
          Assignment<C> asg{{"v", pure_at(c, a, a, i)}, {"w", pure_at(c, a, a, j)}};
          INFO(text);
          CHECK(c.is_pure(evaluate_term(c, t, asg, objects)));
        }
      }
    }
  }
}

TEST_CASE("seq_terminal sides agree in the state instance for every assignment") {
  const StateCategory c(FinSet{2});
  const ProofScript s = parse_script_file(kProofs + "/seq_terminal.eqp");
  const SoundnessResult r = check_goal_soundness(c, s, SoundnessOptions{2, 1'000'000});
  CHECK(r.ok());
  CHECK(r.object_maps == 8);
  CHECK(r.assignments > 0);
}

TEST_CASE("soundness sweep finds a counterexample to a false goal") {
  const StateCategory c(FinSet{2});
  const ProofScript s =
      parse_script("object X Y1 Y2\nsymbol f : X -> Y1\nsymbol g : X -> Y2\n"
                   "goal: p1[Y1,Y2] . <f, g>_l == f\n",
                   "t");
  const SoundnessResult r = check_goal_soundness(c, s, SoundnessOptions{1, 1'000'000});
  REQUIRE_FALSE(r.ok());
  CHECK(r.counterexample->find("f") != std::string::npos);
  // the semi form is a theorem
  const ProofScript semi =
      parse_script("object X Y1 Y2\nsymbol f : X -> Y1\nsymbol g : X -> Y2\n"
                   "goal: p1[Y1,Y2] . <f, g>_l <= f\n",
                   "t");
  CHECK(check_goal_soundness(c, semi, SoundnessOptions{2, 1'000'000}).ok());
}

TEST_CASE("assumptions restrict the assignments") {
  const PartialCategory c;
  const ProofScript s = parse_script_file(kProofs + "/congruence_1.eqp");
  const SoundnessResult r = check_goal_soundness(c, s, SoundnessOptions{1, 1'000'000});
  CHECK(r.ok());
  // X=Y1=Y2=1: f = f' (2 choices), v = v' (1 choice)
  CHECK(r.assignments == 2);
}

TEST_CASE("every step of every shipped script holds at size 1") {
  const PartialCategory partial;
  const StateCategory state(FinSet{2});
  for (const auto& r : check_corpus(kProofs)) {
    const ProofScript s = parse_script_file(r.path);
    INFO(r.path);
    CHECK(check_step_soundness(partial, s).ok());
    CHECK(check_step_soundness(state, s).ok());
  }
}

}  // TEST_SUITE
