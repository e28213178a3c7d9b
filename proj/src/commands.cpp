#include <algorithm>
#include <chrono>
#include <sstream>

#include "frobforge/budget.hpp"
#include "frobforge/cli.hpp"
#include "frobforge/errors.hpp"
#include "frobforge/frobenius.hpp"
#include "frobforge/homalg.hpp"
#include "frobforge/serrecheck.hpp"
#include "frobforge/verifier.hpp"

namespace frobforge::cli {

using nlohmann::json;

namespace {

enum class TaskStatus { Ok, Undecided, Counterexample, InputError, InternalError };

const char* status_name(TaskStatus s) {
  switch (s) {
    case TaskStatus::Ok:
      return "ok";
    case TaskStatus::Undecided:
      return "undecided";
    case TaskStatus::Counterexample:
      return "counterexample";
    case TaskStatus::InputError:
      return "input-error";
    case TaskStatus::InternalError:
      return "internal-error";
  }
  return "?";
}

struct Target {
  std::string label;
  Ring ring;
  std::optional<Ideal> ideal;
};

struct Job {
  std::string verb;
  const Block* block = nullptr;
  Target target;
};

json strings(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json check_json(const CheckResult& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"tier", to_string(c.tier)},
          {"detail", c.detail}};
}

json verdict_json(const TheoremVerdict& v) {
  json hyps = json::array(), concls = json::array();
  for (const auto& c : v.hypotheses) hyps.push_back(check_json(c));
  for (const auto& c : v.conclusions) concls.push_back(check_json(c));
  return {{"theorem_id", v.theorem_id}, {"instance_digest", v.instance_digest},
          {"instance_name", v.instance_name}, {"status", to_string(v.status)},
          {"hypotheses", hyps}, {"conclusions", concls}, {"note", v.note},
          {"elapsed_ms", v.elapsed_ms}};
}

TaskStatus verdict_status(VerdictStatus s) {
  if (s == VerdictStatus::CounterexampleCandidate) return TaskStatus::Counterexample;
  if (s == VerdictStatus::Undecided) return TaskStatus::Undecided;
  return TaskStatus::Ok;
}

TaskStatus worse(TaskStatus a, TaskStatus b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

unsigned field_or(const Block* b, const char* key, unsigned fallback) {
  if (!b) return fallback;
  auto v = b->integer(key);
  return v ? static_cast<unsigned>(*v) : fallback;
}

VerifyBudgets verify_budgets(const Options& o, const Block* b) {
  VerifyBudgets vb;
  vb.max_e = field_or(b, "max_e", o.max_e);
  vb.window = field_or(b, "window", o.window);
  vb.max_t = field_or(b, "max_t", o.max_t);
  vb.degree_cap = o.degree_cap;
  vb.time_ms = o.budget_ms;
  return vb;
}

const Ideal& need_ideal(const Target& t) {
  if (!t.ideal) throw InvalidArgument("this verb needs an ideal");
  return *t.ideal;
}

/// Quotient ring for ring verbs pointed at an ideal.
Ring ring_of(const Target& t) {
  if (!t.ideal) return t.ring;
  return t.ring->quotient_by(t.ideal->gens());
}

std::size_t steps_for(const Block* b, const Ring& R) {
  return field_or(b, "steps", static_cast<unsigned>(R->nvars() + 1));
}

json complex_ranks(const FreeComplex& C) {
  json out = json::array();
  for (auto r : C.betti()) out.push_back(r);
  return out;
}

const char* failure_name(AcyclicityVerdict::Failure f) {
  switch (f) {
    case AcyclicityVerdict::Failure::None:
      return "none";
    case AcyclicityVerdict::Failure::Rank:
      return "rank";
    case AcyclicityVerdict::Failure::Grade:
      return "grade";
  }
  return "?";
}

const char* domain_name(DomainVerdict::Status s) {
  switch (s) {
    case DomainVerdict::Status::Yes:
      return "Yes";
    case DomainVerdict::Status::No:
      return "No";
    case DomainVerdict::Status::Undecided:
      return "Undecided";
  }
  return "?";
}

json verify_target(const Job& job, const Options& o, TaskStatus& status) {
  Instance inst;
  inst.kind = InstanceKind::UserSupplied;
  inst.name = job.target.label;
  inst.ring = job.target.ring;
  inst.ideal = need_ideal(job.target);
  inst.seed = o.seed;
  std::vector<std::string> ids;
  if (o.theorem) {
    ids.push_back(*o.theorem);
  } else if (const auto* t = job.block ? job.block->atom("theorem") : nullptr) {
    ids.push_back(*t);
  } else {
    for (const auto& info : theorem_registry()) ids.push_back(info.id);
  }
  std::vector<TheoremVerdict> verdicts;
  for (const auto& id : ids) verdicts.push_back(verify_theorem(id, inst, verify_budgets(o, job.block)));
  std::stable_sort(verdicts.begin(), verdicts.end(), [](const auto& a, const auto& b) {
    return std::tie(a.theorem_id, a.instance_digest) < std::tie(b.theorem_id, b.instance_digest);
  });
  json out = json::array();
  for (const auto& v : verdicts) {
    status = worse(status, verdict_status(v.status));
    out.push_back(verdict_json(v));
  }
  return {{"verdicts", out}};
}

json run_verb(const Job& job, const Options& o, TaskStatus& status) {
  const auto& verb = job.verb;
  const Block* b = job.block;
  if (verb == "verify") return verify_target(job, o, status);
  if (is_ideal_verb(verb)) {
    const Ideal& I = need_ideal(job.target);
    const Ring& R = I.ring();
    if (verb == "gb") return {{"basis", strings(I.gb_polys())}};
    if (verb == "nf") {
      json forms = json::array();
      for (const auto& text : *b->list("polys")) {
        auto f = R->parse(text);
        forms.push_back({{"input", f.to_string()}, {"normal_form", I.normal_form(f).to_string()}});
      }
      return {{"normal_forms", forms}};
    }
    if (verb == "dim") return {{"dim", krull_dimension(I)}, {"ring_dim", krull_dimension(R)}};
    if (verb == "resolve") {
      auto res = minimal_free_resolution(I, steps_for(b, R));
      json degrees = json::array();
      for (std::size_t i = 0; i <= res.complex.length(); ++i) degrees.push_back(res.complex.degrees(i));
      return {{"betti", res.betti}, {"terminated", res.terminated}, {"minimal", res.minimal},
              {"degrees", degrees}};
    }
    if (verb == "pd") {
      const auto pd = projective_dimension(I);
      return {{"pd", pd ? json(*pd) : json("infinite")}, {"label", pd_to_string(pd)}};
    }
    if (verb == "grade") return {{"grade", grade(I)}};
    if (verb == "koszul") {
      const auto seq = minimal_generators(I);
      const auto C = koszul_complex(R, seq);
      json homology = json::array();
      int top = 0;
      for (std::size_t i = 1; i <= C.length(); ++i) {
        const bool v = homology_vanishes(C, i);
        if (!v) top = static_cast<int>(i);
        homology.push_back({{"index", i}, {"vanishes", v}});
      }
      return {{"sequence", strings(seq)}, {"ranks", complex_ranks(C)}, {"homology", homology},
              {"grade", static_cast<int>(seq.size()) - top}};
    }
    if (verb == "be-check") {
      const std::string kind = b && b->atom("complex") ? *b->atom("complex") : "koszul";
      FreeComplex C = kind == "koszul" ? koszul_complex(R, minimal_generators(I))
                                       : minimal_free_resolution(I, steps_for(b, R)).complex;
      const auto v = buchsbaum_eisenbud_acyclic(C);
      return {{"complex", kind}, {"ranks", complex_ranks(C)}, {"acyclic", v.acyclic},
              {"failure", failure_name(v.failure)}, {"index", v.index}, {"expected_ranks", v.ranks}};
    }
    if (verb == "bracket") {
      const FrobeniusLevel level(R->characteristic(), field_or(b, "e", 1));
      return {{"e", level.e()}, {"q", level.q()}, {"generators", strings(bracket_power(I, level).gens())}};
    }
    if (verb == "closure") {
      const auto res = frobenius_closure(I, field_or(b, "max_e", o.max_e), field_or(b, "window", o.window));
      json witnesses = json::array();
      for (const auto& w : res.witnesses) witnesses.push_back({{"element", w.element.to_string()}, {"e", w.e}});
      if (res.certification.kind == Certification::Kind::BudgetExhausted) status = TaskStatus::Undecided;
      return {{"generators", strings(res.closure.gens())},
              {"certification", res.certification.label()},
              {"e_stabilized", res.certification.e},
              {"witnesses", witnesses}};
    }
    if (verb == "radical") return {{"generators", strings(minimal_generators(char_p_radical(I)))}};
  } else {
    const Ring R = ring_of(job.target);
    if (verb == "serre") {
      const int d = krull_dimension(R);
      if (auto k = b ? b->integer("k") : std::nullopt) {
        const int kk = static_cast<int>(*k);
        const auto s = serre_S(R, kk);
        const auto r = serre_R(R, kk);
        return {{"k", kk}, {"S", s.holds}, {"R", r.holds}, {"labels", {s.label(), r.label()}}};
      }
      int s_max = -1, r_max = -1;
      json labels = json::array();
      for (int k = 0; k <= d; ++k) {
        const auto s = serre_S(R, k);
        labels.push_back(s.label());
        if (!s.holds) break;
        s_max = k;
      }
      for (int k = 0; k <= d; ++k) {
        const auto r = serre_R(R, k);
        labels.push_back(r.label());
        if (!r.holds) break;
        r_max = k;
      }
      return {{"dim", d}, {"S_max", s_max}, {"R_max", r_max}, {"labels", labels}};
    }
    if (verb == "profile") {
      const auto pr = ring_profile(R);
      return {{"dim", pr.dim}, {"depth", pr.depth}, {"codim", pr.codim}, {"cohen_macaulay", pr.cm},
              {"equidimensional", to_string(pr.equidimensional)}};
    }
    if (verb == "reduced") return {{"reduced", is_reduced(R)}};
    if (verb == "normal") {
      const auto v = is_normal(R);
      return {{"normal", v.holds}, {"labels", {v.r1.label(), v.s2.label()}}};
    }
    if (verb == "domain") {
      const auto v = is_domain(R);
      if (v.status == DomainVerdict::Status::Undecided) status = TaskStatus::Undecided;
      return {{"domain", domain_name(v.status)}, {"certificate", v.certificate}};
    }
  }
  throw InvalidArgument("unsupported verb " + verb);
}

std::vector<Target> targets_for(const std::string& verb, const Block* b, const TaskFile& file) {
  std::vector<Target> out;
  auto ideal_target = [](const IdealDecl& d) {
    return Target{d.name + " in " + d.ring, d.ideal.ring(), d.ideal};
  };
  if (b && b->atom("ideal")) {
    out.push_back(ideal_target(*file.find_ideal(*b->atom("ideal"))));
  } else if (b && b->atom("ring")) {
    const auto* r = file.find_ring(*b->atom("ring"));
    out.push_back(Target{r->name, r->ring, std::nullopt});
  } else if (is_ideal_verb(verb)) {
    for (const auto& d : file.ideals) out.push_back(ideal_target(d));
  } else {
    for (const auto& r : file.rings) out.push_back(Target{r.name, r.ring, std::nullopt});
  }
  return out;
}

std::string block_text(const Block* b) {
  if (!b) return {};
  TaskFile one;
  one.tasks.push_back(*b);
  return print_taskfile(one);
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

json suite_result(const Block* b, const Options& o, TaskStatus& status) {
  SuiteConfig config;
  const std::uint64_t seed = b && b->integer("seed") ? static_cast<std::uint64_t>(*b->integer("seed")) : o.seed;
  if (!b || b->atom("preset")) {
    std::vector<std::uint32_t> primes{2, 3, 5};
    if (b && b->list("primes")) {
      primes.clear();
      for (const auto& p : *b->list("primes")) primes.push_back(static_cast<std::uint32_t>(std::stoul(p)));
    }
    config = default_suite(seed, field_or(b, "per_theorem", 10), primes);
  } else {
    SuiteEntry e;
    e.theorem_id = *b->atom("theorem");
    e.kind = *parse_instance_kind(*b->atom("kind"));
    e.count = field_or(b, "count", 1);
    e.seed = seed;
    e.params.p = field_or(b, "p", 2);
    e.params.n = field_or(b, "n", static_cast<unsigned>(e.params.n));
    e.params.max_degree = field_or(b, "max_degree", static_cast<unsigned>(e.params.max_degree));
    e.params.length = field_or(b, "length", e.params.length);
    e.with_control = b->atom("control") && *b->atom("control") == "true";
    config.entries.push_back(e);
  }
  config.budgets = verify_budgets(o, b);
  const Report report = run_suite(config);
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    status = worse(status, verdict_status(v.status));
    verdicts.push_back(verdict_json(v));
  }
  return {{"seed", seed},
          {"verdicts", verdicts},
          {"counts",
           {{"Confirmed", report.confirmed},
            {"HypothesisFailed", report.hypothesis_failed},
            {"CounterexampleCandidate", report.counterexamples},
            {"Undecided", report.undecided}}},
          {"generation_failures", report.generation_failures}};
}

std::string summarize(const std::string& verb, const std::string& label, const json& result,
                      TaskStatus status) {
  std::ostringstream s;
  s << verb;
  if (!label.empty()) s << ' ' << label;
  s << ": ";
  if (result.contains("error")) {
    s << status_name(status) << ": " << result["error"].get<std::string>();
  } else if (verb == "verify" || verb == "suite") {
    std::map<std::string, int> counts;
    for (const auto& v : result["verdicts"]) ++counts[v["status"].get<std::string>()];
    bool first = true;
    for (const auto& [k, n] : counts) {
      s << (first ? "" : ", ") << k << ' ' << n;
      first = false;
    }
    if (counts.empty()) s << "no verdicts";
  } else if (result.contains("generators")) {
    s << '(';
    bool first = true;
    for (const auto& g : result["generators"]) {
      s << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    s << ')';
    if (result.contains("certification")) s << " [" << result["certification"].get<std::string>() << ']';
  } else {
    s << result.dump();
  }
  if (status == TaskStatus::Undecided && !result.contains("error")) s << " (undecided)";
  return s.str();
}

}  // namespace

Outcome run_command(const Options& o, const TaskFile& file) {
  const auto& verbs = command_verbs();
  if (std::find(verbs.begin(), verbs.end(), o.verb) == verbs.end()) {
    throw InvalidArgument("unknown verb '" + o.verb + "'");
  }
  if (o.theorem && !find_theorem(*o.theorem)) throw InvalidArgument("unknown theorem '" + *o.theorem + "'");

  std::vector<Job> jobs;
  if (o.verb == "suite") {
    if (file.suites.empty()) {
      jobs.push_back(Job{"suite", nullptr, {}});
    } else {
      for (const auto& s : file.suites) jobs.push_back(Job{"suite", &s, {}});
    }
  } else {
    std::vector<const Block*> blocks;
    for (const auto& t : file.tasks) {
      if (t.verb == o.verb) blocks.push_back(&t);
    }
    if (blocks.empty()) blocks.push_back(nullptr);
    for (const auto* b : blocks) {
      for (auto& t : targets_for(o.verb, b, file)) jobs.push_back(Job{o.verb, b, std::move(t)});
    }
  }

  Outcome out;
  json tasks = json::array();
  for (const auto& job : jobs) {
    TaskStatus status = TaskStatus::Ok;
    json result;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      BudgetScope scope(Budget{o.degree_cap, Budget{}.pair_cap, o.budget_ms});
      result = job.verb == "suite" ? suite_result(job.block, o, status) : run_verb(job, o, status);
    } catch (const BudgetExceeded& e) {
      status = TaskStatus::Undecided;
      result = {{"error", e.what()}, {"budget", budget_kind_name(e.kind())}};
    } catch (const DataIntegrityError& e) {
      status = TaskStatus::InternalError;
      result = {{"error", e.what()}};
    } catch (const Error& e) {
      status = TaskStatus::InputError;
      result = {{"error", e.what()}};
    } catch (const std::exception& e) {
      status = TaskStatus::InternalError;
      result = {{"error", e.what()}};
    }
    json task{{"task", job.verb},
              {"status", status_name(status)},
              {"input_digest",
               stable_digest(job.verb + "|" + (job.target.ring ? job.target.ring->to_string() : "") + "|" +
                             (job.target.ideal ? job.target.ideal->to_string() : "") + "|" +
                             block_text(job.block))},
              {"result", result},
              {"timing_ms", ms_since(t0)}};
    if (!job.target.label.empty()) task["target"] = job.target.label;
    if (job.block) {
      if (const auto* name = job.block->atom("name")) task["name"] = *name;
    }
    out.summary += summarize(job.verb, job.target.label, result, status) + "\n";
    tasks.push_back(std::move(task));
  }

  out.report = {{"schema", kSchema},
                {"tool", kTool},
                {"version", kVersion},
                {"verb", o.verb},
                {"input_digest", stable_digest(print_taskfile(file))},
                {"seed", o.seed},
                {"budgets",
                 {{"max_e", o.max_e},
                  {"window", o.window},
                  {"max_t", o.max_t},
                  {"degree_cap", o.degree_cap},
                  {"budget_ms", o.budget_ms ? json(*o.budget_ms) : json(nullptr)}}},
                {"tasks", tasks}};
  out.exit_code = exit_code_for(out.report);
  return out;
}

int exit_code_for(const json& report) {
  int code = kExitOk;
  auto rank = [](int c) {
    switch (c) {
      case kExitUndecided:
        return 1;
      case kExitCounterexample:
        return 2;
      case kExitUsage:
        return 3;
      case kExitInternal:
        return 4;
      default:
        return 0;
    }
  };
  for (const auto& t : report.value("tasks", json::array())) {
    const auto s = t.value("status", std::string("ok"));
    int c = kExitOk;
    if (s == status_name(TaskStatus::Undecided)) c = kExitUndecided;
    if (s == status_name(TaskStatus::Counterexample)) c = kExitCounterexample;
    if (s == status_name(TaskStatus::InputError)) c = kExitUsage;
    if (s == status_name(TaskStatus::InternalError)) c = kExitInternal;
    if (rank(c) > rank(code)) code = c;
  }
  return code;
}

std::string emit_report(const json& report) { return report.dump(2) + "\n"; }

json strip_timings(json report) {
  if (report.is_object()) {
    for (const char* key : {"timing_ms", "elapsed_ms"}) report.erase(key);
    for (auto& [k, v] : report.items()) v = strip_timings(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_timings(v);
  }
  return report;
}

}  // namespace frobforge::cli
