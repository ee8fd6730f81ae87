// One line per acceptance criterion. Exit status is the number of failures.
//   acceptance <path to cec binary> <source dir>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include <unistd.h>

#include "cec/law_engine.hpp"
#include "cec/law_inventory.hpp"
#include "cec/maybe_kleisli.hpp"
#include "cec/proof/checker.hpp"
#include "cec/proof/evaluate.hpp"

using namespace cec;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_src;

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s;
  return os.str();
}

const PartialCategory kPartial;
const StateCategory kState(FinSet{2});

LawReport run(const auto& c, const std::string& suite, std::size_t max_size) {
  SuiteRequest request;
  request.suite = suite;
  request.options.max_size = max_size;
  return run_suite(c, request);
}

void require_all_pass(Result& r, const LawReport& report, const std::string& where) {
  for (const LawCheck& c : report.checks) {
    if (c.kind == CheckKind::Law && c.verdict != Verdict::Pass) r.fail(where + ": " + c.id + " " + to_string(c.verdict));
  }
}

// Number of object quantifiers of a check, from its first quantifier group.
std::size_t object_arity(const std::string& id) {
  const CheckSpec& spec = check_spec(id);
  if (spec.quantifiers.empty()) return 0;
  const std::string& q = spec.quantifiers.front();
  if (q.find(": obj") == std::string::npos) return 0;
  return static_cast<std::size_t>(std::count(q.begin(), q.begin() + q.find(':'), ',')) + 1;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Result ac1() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  const LawReport partial = run(kPartial, "effect", 3);
  const LawReport state = run(kState, "effect", 2);
  const double secs = seconds_since(t0);
  require_all_pass(r, partial, "partial");
  require_all_pass(r, state, "state");
  for (const auto* rep : {&partial, &state}) {
    for (const LawCheck& c : rep->checks) {
      if (c.kind == CheckKind::Law && !c.skipped.empty()) r.fail(c.id + " skipped cases");
    }
  }
  if (secs >= 120) r.fail("took " + fmt(secs) + " s");
  if (r.ok) r.detail = fmt(secs) + " s";
  return r;
}

Result ac2() {
  Result r;
  std::size_t skipped = 0, checks = 0;
  for (const auto& [name, report, size] :
       {std::tuple{"partial", run(kPartial, "cartesian", 3), std::size_t{3}},
        std::tuple{"state", run(kState, "cartesian", 2), std::size_t{2}}}) {
    for (const LawCheck& c : report.checks) {
      if (c.id.rfind("def.", 0) != 0) continue;
      ++checks;
      if (c.verdict != Verdict::Pass) r.fail(std::string(name) + ": " + c.id + " " + to_string(c.verdict));
      const bool unique = c.id.find(".unique") != std::string::npos;
      if (!unique && !c.skipped.empty()) r.fail(std::string(name) + ": " + c.id + " skipped a defining clause");
      // every object assignment is either evaluated or listed as skipped
      const std::uint64_t expected = power(size, object_arity(c.id));
      if (c.cases + c.skipped.size() != expected)
        r.fail(std::string(name) + ": " + c.id + " accounts for " + std::to_string(c.cases + c.skipped.size()) +
               " of " + std::to_string(expected) + " cases");
      for (const auto& s : c.skipped) {
        if (s.find("over budget") == std::string::npos) r.fail(c.id + ": skip without reason");
      }
      skipped += c.skipped.size();
    }
  }
  if (r.ok) r.detail = std::to_string(checks) + " checks, " + std::to_string(skipped) + " cases skipped and reported";
  return r;
}

Result ac3() {
  Result r;
  const std::vector<std::string> required = {
      "prop.congruence.decorated.1", "prop.congruence.decorated.2", "prop.composition.decorated.1",
      "prop.composition.decorated.2", "prop.composition.decorated.3", "prop.swap.decorated.1",
      "prop.swap.decorated.2", "prop.assoc.decorated.1", "prop.assoc.decorated.2", "prop.parallelism.decorated",
      "prop.seq_lproduct", "prop.seq_comp", "prop.seq_swap", "prop.seq_assoc", "prop.seq_val",
      "lemma.seq_terminal", "prop.seq_com", "thm.seq_prod.value", "thm.seq_prod.effect", "cor.seq_pair.value",
      "cor.seq_pair.point", "cor.seq_pair.effect"};
  std::set<std::string> distinct(required.begin(), required.end());
  if (distinct.size() != required.size()) r.fail("duplicate ids");
  for (const auto& [name, reports] :
       {std::pair{"partial", std::vector{run(kPartial, "cartesian", 2), run(kPartial, "sequential", 2)}},
        std::pair{"state", std::vector{run(kState, "cartesian", 2), run(kState, "sequential", 2)}}}) {
    for (const auto& id : required) {
      const LawCheck* c = reports[0].find(id);
      if (!c) c = reports[1].find(id);
      if (!c) r.fail(std::string(name) + ": no check " + id);
      else if (c->verdict != Verdict::Pass) r.fail(std::string(name) + ": " + id + " " + to_string(c->verdict));
      else if (c->cases == 0) r.fail(std::string(name) + ": " + id + " evaluated nothing");
    }
  }
  if (r.ok) r.detail = std::to_string(required.size()) + " ids on both instances";
  return r;
}

Result ac4() {
  Result r;
  const SweepOptions dflt;
  auto expect_found = [&](const auto& c, const std::string& id, const SweepOptions& o) {
    const auto w = find_witness(c, id, o);
    if (!w) return r.fail(id + " not found");
    if (!verify_witness(c, id, *w)) r.fail(id + " does not re-verify");
  };
  expect_found(kState, "witness.seq_not_parallel", dflt);
  expect_found(kState, "witness.fanout_not_product", dflt);
  expect_found(kState, "witness.replacement_fails", dflt);
  expect_found(kPartial, "witness.semi_not_symmetric", dflt);
  const auto fs_state = check_fanout_not_product(kState, dflt);
  const auto fs_partial = check_fanout_not_product(kPartial, dflt);
  if (fs_state.semi_clause.verdict != Verdict::Pass) r.fail("state: q1 . <f,g>_l <= f fails");
  if (fs_partial.semi_clause.verdict != Verdict::Pass) r.fail("partial: q1 . <f,g>_l <= f fails");
  if (r.ok) r.detail = "4 witnesses found and re-verified";
  return r;
}

Result ac5() {
  Result r;
  SweepOptions o;
  const LawReport partial = check_arrow_laws(kPartial, o);
  const LawReport state = check_arrow_laws(kState, o);
  for (const auto* rep : {&partial, &state}) {
    for (int law = 1; law <= 9; ++law) {
      const LawCheck* c = rep->find("arrow.law." + std::to_string(law));
      if (!c || c->verdict != Verdict::Pass || c->cases == 0)
        r.fail(rep->instance.kind + ": law " + std::to_string(law));
    }
  }
  // general form: the second component ranges over every object Z
  if (check_spec("arrow.law.8").quantifiers.front().find('Z') == std::string::npos) r.fail("law 8 is not the general form");
  if (r.ok) r.detail = "laws 1-9 on partial and state";
  return r;
}

Result ac6() {
  Result r;
  const MaybeKleisliCategory k;
  std::uint64_t maps = 0;
  for (std::size_t nx = 0; nx <= 3; ++nx) {
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      const FinSet x{nx}, y{ny};
      std::vector<PartialMap> all;
      for (std::uint64_t i = 0; i < kPartial.hom_size(x, y); ++i) all.push_back(kPartial.hom_at(x, y, i));
      if (all.size() != power(ny + 1, nx)) r.fail("hom size");
      for (const auto& f : all) {
        ++maps;
        const KleisliMap kf = to_kleisli(f);
        if (from_kleisli(kf) != f) r.fail("round trip of " + kPartial.render(f));
        if (k.is_pure(kf) != kPartial.is_pure(f)) r.fail("purity of " + kPartial.render(f));
      }
      for (const auto& f : all) {
        for (const auto& g : all) {
          if (k.semi_eq(to_kleisli(f), to_kleisli(g)) != kPartial.semi_eq(f, g)) r.fail("semi_eq");
        }
      }
      if (x == y) {
        if (to_kleisli(kPartial.identity(x)) != k.identity(x)) r.fail("identity");
      }
      for (std::size_t nz = 0; nz <= 3; ++nz) {
        const FinSet z{nz};
        for (std::uint64_t j = 0; j < kPartial.hom_size(y, z); ++j) {
          const PartialMap g = kPartial.hom_at(y, z, j);
          for (const auto& f : all) {
            if (to_kleisli(kPartial.compose(g, f)) != k.compose(to_kleisli(g), to_kleisli(f))) r.fail("composition");
          }
        }
        // semi-pairs: the strength route against the direct partial pairing
        for (std::uint64_t j = 0; j < pure_size(kPartial, x, z); ++j) {
          const PartialMap v = pure_at(kPartial, x, z, j);
          for (const auto& f : all) {
            if (to_kleisli(kPartial.pair_fv(f, v)) != k.pair_fv(to_kleisli(f), to_kleisli(v))) r.fail("pair_fv");
            if (to_kleisli(kPartial.pair_vf(v, f)) != k.pair_vf(to_kleisli(v), to_kleisli(f))) r.fail("pair_vf");
          }
        }
      }
    }
  }
  if (r.ok) r.detail = std::to_string(maps) + " maps";
  return r;
}

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

Result ac7() {
  Result r;
  const std::string proofs = g_src + "/proofs";
  const auto corpus = proof::check_corpus(proofs);
  if (corpus.size() < 8) r.fail("only " + std::to_string(corpus.size()) + " scripts");
  for (const auto& s : corpus) {
    if (!s.valid()) r.fail(s.name + ": " + s.summary());
  }
  std::size_t mutations = 0;
  bool saw_sym = false, saw_repl = false;
  for (const auto& entry : fs::directory_iterator(g_src + "/tests/data/mutations")) {
    if (entry.path().extension() != ".eqp") continue;
    ++mutations;
    const std::string header = first_line(entry.path().string());
    const std::string tag = "# expect: ";
    const std::string expect = header.substr(tag.size());
    const std::string label = expect.substr(0, expect.find(": "));
    const std::string reason = expect.substr(expect.find(": ") + 2);
    const auto results = proof::check_paths({proofs, entry.path().string()});
    const auto& m = results.back();
    if (m.valid() || m.outcome.label != label || m.summary().find(reason) == std::string::npos)
      r.fail(entry.path().filename().string() + ": " + m.summary());
    saw_sym = saw_sym || m.outcome.reason == "sym_≲ is not a rule";
    saw_repl = saw_repl || m.outcome.reason == "repl_≲ outer morphism not pure";
  }
  if (mutations < 5) r.fail("only " + std::to_string(mutations) + " mutations");
  if (!saw_sym) r.fail("no sym_≲ mutation");
  if (!saw_repl) r.fail("no repl_≲ mutation");
  if (r.ok)
    r.detail = std::to_string(corpus.size()) + " scripts valid, " + std::to_string(mutations) + " mutations rejected";
  return r;
}

Result ac8() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t assignments = 0;
  std::size_t scripts = 0;
  for (const auto& s : proof::check_corpus(g_src + "/proofs")) {
    const proof::ProofScript script = proof::parse_script_file(s.path);
    ++scripts;
    auto sweep = [&](const auto& c) {
      const auto res = proof::check_goal_soundness(c, script, proof::SoundnessOptions{2, 1'000'000});
      if (!res.ok()) r.fail(s.name + " on " + c.name() + ": " + *res.counterexample);
      if (!res.skipped.empty()) r.fail(s.name + " on " + c.name() + ": skipped " + res.skipped.front());
      assignments += res.assignments;
    };
    sweep(kPartial);
    sweep(kState);
  }
  if (r.ok)
    r.detail = std::to_string(scripts) + " scripts, " + std::to_string(assignments) + " assignments, " +
               fmt(seconds_since(t0)) + " s";
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result ac9() {
  Result r;
  const fs::path dir = fs::temp_directory_path() / ("cec_ac9_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands = {
      "laws --instance state --state-size 2 --format structured",
      "laws --instance partial --max-size 3 --suite effect --format structured",
      "arrows --instance state --state-size 2 --format structured",
      "prove " + g_src + "/proofs --format structured"};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string out = (dir / ("run" + std::to_string(i) + "_" + std::to_string(run) + ".json")).string();
      const std::string cmd = "\"" + g_cli + "\" " + commands[i] + " --out \"" + out + "\"";
      if (std::system(cmd.c_str()) != 0) r.fail("exit status of: " + commands[i]);
      outs[run] = slurp(out);
    }
    if (outs[0].empty()) r.fail("empty report: " + commands[i]);
    if (outs[0] != outs[1]) r.fail("reports differ: " + commands[i]);
  }
  fs::remove_all(dir);
  if (r.ok) r.detail = std::to_string(commands.size()) + " commands byte-identical";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cec binary> <source dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_src = argv[2];
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"effect axioms, partial <= 3 and state |S|=2 <= 2, under 2 minutes", ac1},
      {"semi-pair and semi-product clauses, uniqueness skips reported", ac2},
      {"decorated and sequential propositions on both instances", ac3},
      {"negative witnesses found and re-verified", ac4},
      {"arrow laws 1-9 on both instances", ac5},
      {"maybe-kleisli translation for |X|,|Y| <= 3", ac6},
      {"proof corpus valid, mutations rejected", ac7},
      {"corpus goals hold in both instances at sizes <= 2", ac8},
      {"structured reports are byte-identical across runs", ac9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << "AC" << i + 1 << " " << criteria[i].first;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << std::endl;
    if (!r.ok) ++failures;
  }
  return failures;
}
