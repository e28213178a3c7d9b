#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frobforge/cli.hpp"
#include "frobforge/errors.hpp"
#include "frobforge/verifier.hpp"

using namespace frobforge;
using nlohmann::json;

namespace {

const char* kFermat = R"(# Fermat cubic
ring R { char: 2 vars: [x,y,z] order: grevlex quotient: [x^3+y^3+z^3] }
ideal I in R { gens: [y, z] }
task closure { ideal: I }
)";

const char* kControl = R"(ring R {
  char: 2
  vars: [x, y]
  quotient: [x^2]
}
ideal I in R { gens: [x] }
)";

ParseError parse_error(const std::string& text) {
  try {
    parse_taskfile(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError("", 0, 0);
}

cli::Options opts(const std::string& verb) {
  cli::Options o;
  o.verb = verb;
  return o;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/frobforge_test_" + name;
  std::ofstream(path) << text;
  return path;
}

int run_main(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "frobforge");
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("taskfile: the ring block example parses") {
  const auto f = parse_taskfile(kFermat);
  REQUIRE(f.rings.size() == 1);
  CHECK(f.rings[0].characteristic == 2);
  CHECK(f.rings[0].vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(f.rings[0].quotient == std::vector<std::string>{"x^3 + y^3 + z^3"});
  CHECK(f.rings[0].ring->to_string() == "F_2[x,y,z]/(x^3 + y^3 + z^3)");
  REQUIRE(f.ideals.size() == 1);
  CHECK(f.ideals[0].ideal.to_string() == "(y, z)");
  REQUIRE(f.tasks.size() == 1);
  CHECK(f.tasks[0].verb == "closure");
  CHECK(*f.tasks[0].atom("ideal") == "I");
}

TEST_CASE("taskfile: diagnostics carry line and column") {
  auto e = parse_error("ring R {\n  char: 4\n  vars: [x]\n}\n");
  CHECK(std::string(e.what()).find("characteristic must be prime") != std::string::npos);
  CHECK(e.line() == 2);
  CHECK(e.column() == 9);

  e = parse_error("ring R { char: 3 vars: [x] }\nideal I in S { gens: [x] }\n");
  CHECK(std::string(e.what()).find("undeclared ring 'S'") != std::string::npos);
  CHECK(e.line() == 2);
  CHECK(e.column() == 12);

  e = parse_error("ring R { char: 3 vars: [x, y] }\nideal I in R { gens: [x, y^2 + x] }\n");
  CHECK(std::string(e.what()).find("inhomogeneous") != std::string::npos);
  CHECK(e.line() == 2);
  CHECK(e.column() == 26);

  e = parse_error("ring R { char: 3 vars: [x, y] quotient: [x^2 + q] }");
  CHECK(e.line() == 1);
  CHECK(e.column() > 40);

  e = parse_error("ring R { char: 3 vars: [x] }\ntask closure { ideal: J }");
  CHECK(std::string(e.what()).find("undeclared ideal 'J'") != std::string::npos);

  CHECK(std::string(parse_error("ring R { char: 2 vars: [x] colour: red }").what()).find("unknown key") !=
        std::string::npos);
  CHECK(std::string(parse_error("ring R { char: 2 vars: [x] ").what()).find("expected '}'") != std::string::npos);
  CHECK(std::string(parse_error("task frob { }").what()).find("unknown verb") != std::string::npos);
  CHECK(std::string(parse_error("ring R { char: 2 vars: [x, x] }").what()).find("duplicate variable") !=
        std::string::npos);
  CHECK(std::string(parse_error("suite { theorem: T9.9 kind: MonomialCM }").what()).find("unknown theorem") !=
        std::string::npos);
  CHECK(std::string(parse_error("suite { preset: default count: 3 }").what()).find("does not apply") !=
        std::string::npos);
  CHECK(std::string(parse_error("ring R { char: 2 vars: [x, y] weights: [1] }").what()).find("weights") !=
        std::string::npos);
}

TEST_CASE("taskfile: weights, orders and comments") {
  const auto f = parse_taskfile(
      "ring W { # weighted\n char: 3 vars: [x, y] weights: [1, 2] order: lex quotient: [x^2 + y] }\n"
      "ring E { char: 5 vars: [a, b, c] order: elim(1) }\n");
  REQUIRE(f.rings.size() == 2);
  CHECK(f.rings[0].weights == std::vector<std::int64_t>{1, 2});
  CHECK(f.rings[0].order == "lex");
  CHECK(f.rings[1].order == "elim(1)");
  CHECK(f.rings[1].ring->poly()->order() == MonomialOrder::elimination(1));
}

TEST_CASE("property: parse(print(t)) == t") {
  SeededRng rng(2024);
  const std::vector<std::string> verbs{"gb", "dim", "pd", "closure", "bracket", "serre", "verify"};
  const std::vector<std::string> vars{"x", "y", "z", "w"};
  for (int round = 0; round < 40; ++round) {
    std::ostringstream text;
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[rng.below(4)];
    const std::size_t n = 2 + rng.below(3);
    std::vector<std::string> vs(vars.begin(), vars.begin() + static_cast<long>(n));
    auto P = RingDescriptor::make(p, vs);
    text << "ring R" << round << " { char: " << p << " vars: [";
    for (std::size_t i = 0; i < n; ++i) text << (i ? ", " : "") << vs[i];
    text << "] order: " << (rng.below(2) ? "lex" : "grevlex");
    if (rng.below(2)) text << " quotient: [" << random_form(P, 2, rng).to_string() << "]";
    text << " }\nideal I in R" << round << " { gens: [";
    const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned i = 0; i < k; ++i) text << (i ? ", " : "") << random_form(P, 1 + static_cast<std::int64_t>(rng.below(3)), rng).to_string();
    text << "] }\n";
    const auto& verb = verbs[rng.below(verbs.size())];
    text << "task " << verb << " { ideal: I name: t" << round;
    if (verb == "closure") text << " max_e: " << 1 + rng.below(5);
    if (verb == "verify") text << " theorem: " << theorem_registry()[rng.below(theorem_registry().size())].id;
    text << " }\n";
    if (rng.below(2)) text << "suite { preset: default per_theorem: 2 primes: [2, 3] }\n";
    const auto t = parse_taskfile(text.str());
    const auto printed = print_taskfile(t);
    CAPTURE(printed);
    const auto again = parse_taskfile(printed);
    CHECK(again == t);
    CHECK(print_taskfile(again) == printed);
    CHECK(again.ideals[0].ideal.equals(t.ideals[0].ideal));
  }
}

TEST_CASE("report: canonical JSON ignores insertion order") {
  json a = json::object(), b = json::object();
  a["tasks"] = json::array();
  a["schema"] = cli::kSchema;
  a["zeta"] = {{"b", 1}, {"a", 2}};
  b["zeta"] = {{"a", 2}, {"b", 1}};
  b["schema"] = cli::kSchema;
  b["tasks"] = json::array();
  CHECK(cli::emit_report(a) == cli::emit_report(b));
  CHECK(cli::emit_report(a).find("\"schema\": \"frobforge/1\"") != std::string::npos);
}

TEST_CASE("report: empty results") {
  const auto f = parse_taskfile("ring R { char: 2 vars: [x] }");
  const auto out = cli::run_command(opts("gb"), f);
  CHECK(out.exit_code == cli::kExitOk);
  CHECK(out.report["schema"] == "frobforge/1");
  CHECK(out.report["tasks"] == json::array());
  for (const char* key : {"tool", "version", "input_digest", "seed", "budgets"}) CHECK(out.report.contains(key));
}

TEST_CASE("report: one closure task") {
  const auto f = parse_taskfile(kFermat);
  auto o = opts("closure");
  o.max_e = 6;
  const auto out = cli::run_command(o, f);
  CHECK(out.exit_code == cli::kExitOk);
  REQUIRE(out.report["tasks"].size() == 1);
  const auto& t = out.report["tasks"][0];
  for (const char* key : {"task", "input_digest", "result", "timing_ms"}) CHECK(t.contains(key));
  CHECK(t["task"] == "closure");
  CHECK(t["result"]["generators"] == json({"y", "z", "x^2"}));
  CHECK(t["result"]["certification"] == "StabilizedHeuristic(1, 2)");
  CHECK(t["result"]["e_stabilized"] == 1);
  CHECK(out.summary.find("(y, z, x^2) [StabilizedHeuristic(1, 2)]") != std::string::npos);
  // The same input reproduces every non-timing field.
  CHECK(cli::emit_report(cli::strip_timings(cli::run_command(o, f).report)) ==
        cli::emit_report(cli::strip_timings(out.report)));
}

TEST_CASE("report: verify on the control records HypothesisFailed") {
  const auto f = parse_taskfile(kControl);
  auto o = opts("verify");
  o.theorem = "T5.9";
  const auto out = cli::run_command(o, f);
  CHECK(out.exit_code == cli::kExitOk);
  const auto& verdicts = out.report["tasks"][0]["result"]["verdicts"];
  REQUIRE(verdicts.size() == 1);
  CHECK(verdicts[0]["status"] == "HypothesisFailed");
  CHECK(verdicts[0]["theorem_id"] == "T5.9");
}

TEST_CASE("report: verdict lists are ordered by theorem and digest") {
  const auto f = parse_taskfile("suite { preset: default per_theorem: 2 primes: [2] }");
  auto o = opts("suite");
  o.seed = 11;
  const auto out = cli::run_command(o, f);
  CHECK(out.exit_code == cli::kExitOk);
  const auto& vs = out.report["tasks"][0]["result"]["verdicts"];
  REQUIRE(vs.size() > 10);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const auto a = std::make_pair(vs[i - 1]["theorem_id"].get<std::string>(), vs[i - 1]["instance_digest"].get<std::string>());
    const auto b = std::make_pair(vs[i]["theorem_id"].get<std::string>(), vs[i]["instance_digest"].get<std::string>());
    CHECK(a <= b);
  }
  CHECK(out.report["tasks"][0]["result"]["counts"]["CounterexampleCandidate"] == 0);
}

TEST_CASE("report: every verb runs on the Fermat cubic") {
  const auto f = parse_taskfile(std::string(kFermat) + "task nf { ideal: I polys: [x^2, x^3] }\n");
  for (const auto& verb : command_verbs()) {
    if (verb == "suite" || verb == "verify") continue;
    CAPTURE(verb);
    const auto out = cli::run_command(opts(verb), f);
    CHECK(out.exit_code == cli::kExitOk);
    REQUIRE(out.report["tasks"].size() == 1);
    CHECK(out.report["tasks"][0]["status"] == "ok");
  }
  const auto nf = cli::run_command(opts("nf"), f).report["tasks"][0]["result"]["normal_forms"];
  CHECK(nf[0]["normal_form"] == "x^2");
  CHECK(nf[1]["normal_form"] == "0");
}

TEST_CASE("exit codes: worst task status wins") {
  auto report = [](std::vector<std::string> statuses) {
    json r{{"tasks", json::array()}};
    for (const auto& s : statuses) r["tasks"].push_back({{"status", s}});
    return r;
  };
  CHECK(cli::exit_code_for(report({})) == 0);
  CHECK(cli::exit_code_for(report({"ok", "ok"})) == 0);
  CHECK(cli::exit_code_for(report({"ok", "undecided"})) == 2);
  CHECK(cli::exit_code_for(report({"undecided", "counterexample"})) == 3);
  CHECK(cli::exit_code_for(report({"counterexample", "input-error"})) == 1);
  CHECK(cli::exit_code_for(report({"input-error", "internal-error", "ok"})) == 4);
}

TEST_CASE("exit codes: command line") {
  const auto fermat = temp_file("fermat.task", kFermat);
  const auto control = temp_file("control.task", kControl);
  std::string text;
  CHECK(run_main({"closure", "--input", fermat, "--max-e", "6"}, &text) == 0);
  CHECK(text.find("StabilizedHeuristic(1, 2)") != std::string::npos);
  CHECK(run_main({"verify", "--theorem", "T5.9", "--input", control}) == 0);
  // Budget exhausted before the chain settles.
  CHECK(run_main({"closure", "--input", fermat, "--max-e", "1"}) == 2);
  CHECK(run_main({"closure", "--input", temp_file("bad.task", "ring R {\n char: 4\n vars: [x]\n}\n")}, &text) == 1);
  CHECK(text.find("bad.task:2:8: characteristic must be prime") != std::string::npos);
  CHECK(run_main({"frob", "--input", fermat}) == 1);
  CHECK(run_main({"gb"}) == 1);
  CHECK(run_main({"gb", "--input", "/nonexistent/file.task"}) == 1);
  CHECK(run_main({"verify", "--theorem", "T0.0", "--input", fermat}) == 1);
  CHECK(run_main({"closure", "--input", fermat, "--max-e", "x"}) == 1);
  CHECK(run_main({"closure", "--input", fermat, "--json", "/nonexistent/dir/out.json"}) == 4);
  const std::string json_path = "/tmp/frobforge_test_out.json";
  std::remove(json_path.c_str());
  CHECK(run_main({"closure", "--input", fermat, "--json", json_path}) == 0);
  std::ifstream in(json_path);
  REQUIRE(in);
  const auto written = json::parse(in);
  CHECK(written["schema"] == "frobforge/1");
}
