#include <algorithm>

#include "frobforge/errors.hpp"
#include "frobforge/verifier.hpp"

namespace frobforge {

namespace {

void tally(Report& r, const TheoremVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Confirmed:
      ++r.confirmed;
      break;
    case VerdictStatus::HypothesisFailed:
      ++r.hypothesis_failed;
      break;
    case VerdictStatus::CounterexampleCandidate:
      ++r.counterexamples;
      break;
    case VerdictStatus::Undecided:
      ++r.undecided;
      break;
  }
}

/// Errors other than data integrity become Undecided verdicts.
TheoremVerdict verify_or_record(const std::string& id, const Instance& inst,
                                const VerifyBudgets& budgets) {
  try {
    return verify_theorem(id, inst, budgets);
  } catch (const DataIntegrityError&) {
    throw;
  } catch (const Error& e) {
    TheoremVerdict v;
    v.theorem_id = id;
    v.instance_digest = inst.digest();
    v.instance_name = inst.name;
    v.status = VerdictStatus::Undecided;
    v.note = std::string("error: ") + e.what();
    return v;
  }
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
  Report report;
  for (const auto& entry : config.entries) {
    const auto* info = find_theorem(entry.theorem_id);
    if (!info) throw SchemaMismatch("unknown theorem " + entry.theorem_id);
    for (unsigned i = 0; i < entry.count; ++i) {
      Instance inst;
      try {
        inst = generate_instance(entry.kind, entry.params, entry.seed + i);
      } catch (const InvalidArgument&) {
        ++report.generation_failures;
        continue;
      } catch (const BudgetExceeded&) {
        ++report.generation_failures;
        continue;
      }
      report.verdicts.push_back(verify_or_record(info->id, inst, config.budgets));
    }
    if (entry.with_control) {
      report.verdicts.push_back(
          verify_or_record(info->id, info->control(entry.params.p), config.budgets));
    }
  }
  std::stable_sort(report.verdicts.begin(), report.verdicts.end(),
                   [](const TheoremVerdict& a, const TheoremVerdict& b) {
                     if (a.theorem_id != b.theorem_id) return a.theorem_id < b.theorem_id;
                     return a.instance_digest < b.instance_digest;
                   });
  for (const auto& v : report.verdicts) tally(report, v);
  return report;
}

SuiteConfig default_suite(std::uint64_t seed, unsigned per_theorem,
                          std::vector<std::uint32_t> primes) {
  using K = InstanceKind;
  const std::vector<K> general{K::RegularSequenceOnQuotient, K::HypersurfaceQuotient,
                               K::DeterminantalPerfect, K::MonomialCM, K::ToricDomain};
  SuiteConfig config;
  SeededRng root(seed);
  for (const auto& info : theorem_registry()) {
    std::vector<K> kinds = general;
    if (info.id == "L3.4") kinds = {K::RegularSequenceOnQuotient, K::HypersurfaceQuotient, K::ToricDomain};
    for (auto p : primes) {
      bool first = true;
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        // Spread per_theorem instances over the kinds, front-loading the remainder.
        const unsigned count = per_theorem / kinds.size() + (k < per_theorem % kinds.size() ? 1 : 0);
        if (count == 0 && !first) continue;
        SuiteEntry e;
        e.theorem_id = info.id;
        e.kind = kinds[k];
        e.count = count;
        e.seed = root.split(info.id + "/" + std::to_string(p) + "/" + to_string(kinds[k])).next();
        e.params.p = p;
        e.with_control = first;
        first = false;
        config.entries.push_back(e);
      }
    }
  }
  return config;
}

}  // namespace frobforge
