#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobforge/frobenius.hpp"
#include "frobforge/serrecheck.hpp"

namespace frobforge {

/// Seeded generator with named substreams. Draws depend only on the seed
/// and the stream names, never on library implementation details.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  SeededRng split(std::string_view name) const;
  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next();
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

/// FNV-1a, rendered as 16 hex digits.
std::string stable_digest(std::string_view text);

/// Random homogeneous form of the given degree with up to `terms` terms,
/// reduced modulo I0 (possibly zero).
Polynomial random_form(const Ring& R, std::int64_t degree, SeededRng& rng, unsigned terms = 3);

enum class InstanceKind {
  RegularSequenceOnQuotient,
  HypersurfaceQuotient,
  DeterminantalPerfect,
  MonomialCM,
  ToricDomain,
  ControlInfinitePd,
  /// Declared in a task file; never generated, carries no certificates.
  UserSupplied,
};
std::string to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);
const std::vector<InstanceKind>& all_instance_kinds();

enum class Tier { Exact, Certified, Probable };
std::string to_string(Tier tier);

struct Certificate {
  enum class Tag {
    FinitePd,
    RegularSequenceGens,
    PerfectIdeal,
    QuotientDomain,
    QuotientNormal,
    ControlNegative,
  };
  Tag tag;
  Tier tier = Tier::Exact;
  std::optional<int> value;

  std::string label() const;
};

struct Instance {
  InstanceKind kind = InstanceKind::HypersurfaceQuotient;
  std::string name;
  Ring ring;
  Ideal ideal;
  std::vector<Certificate> certificates;
  std::uint64_t seed = 0;

  const Certificate* find(Certificate::Tag tag) const;
  /// Digest of the ring, the ideal and the kind.
  std::string digest() const;
};

struct GenerationParams {
  std::uint32_t p = 2;
  /// Number of variables where the kind leaves it free.
  std::size_t n = 3;
  std::int64_t max_degree = 2;
  /// Regular sequence length.
  unsigned length = 1;
  /// Base ring for RegularSequenceOnQuotient (default: a cubic hypersurface).
  std::optional<Ring> base;
  unsigned retries = 40;
};

/// Throws InvalidArgument when no instance is found within the retry budget.
Instance generate_instance(InstanceKind kind, const GenerationParams& params, std::uint64_t seed);

/// Re-checks every Exact or Certified certificate; throws DataIntegrityError.
void recheck_certificates(const Instance& inst);

struct RegularSequence {
  std::vector<Polynomial> elements;
  /// length = depth R.
  bool maximal = false;
};

/// Homogeneous sequences checked element by element with colon tests.
/// Throws InvalidArgument if length exceeds depth R.
std::vector<RegularSequence> sample_regular_sequences(const Ring& R, unsigned length,
                                                      unsigned count, std::uint64_t seed);

enum class CheckStatus { Pass, Fail, Undecided };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Undecided;
  /// Exact/Certified results can support a counterexample; Probable ones,
  /// sampled quantifiers and evidence-only checks cannot.
  Tier tier = Tier::Exact;
  std::string detail;
};

enum class VerdictStatus { Confirmed, HypothesisFailed, CounterexampleCandidate, Undecided };
std::string to_string(VerdictStatus status);

/// Folds check results into a status: a failed hypothesis wins, then a
/// failed conclusion (a counterexample only if every hypothesis passed at
/// Exact or Certified tier and the failing conclusion is itself definite).
VerdictStatus aggregate(const std::vector<CheckResult>& hypotheses,
                        const std::vector<CheckResult>& conclusions);

struct VerifyBudgets {
  unsigned max_e = 6;
  unsigned window = 2;
  /// Thickenings (x_1^t, ..., x_d^t) for t = 1..max_t.
  unsigned max_t = 3;
  /// Frobenius levels are also capped so that q stays at most this.
  std::uint64_t max_q = 32;
  std::int64_t degree_cap = 40;
  std::optional<std::int64_t> time_ms;
  /// Sampled sequences / primes / elements per universally quantified check.
  unsigned samples = 2;
  PrimeBudget primes;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::string instance_digest;
  std::string instance_name;
  std::vector<CheckResult> hypotheses;
  std::vector<CheckResult> conclusions;
  VerdictStatus status = VerdictStatus::Undecided;
  std::string note;
  std::int64_t elapsed_ms = 0;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  /// Builds the designated control, whose hypothesis must fail.
  Instance (*control)(std::uint32_t p);
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo* find_theorem(std::string_view id);

/// Throws SchemaMismatch for an unknown theorem or an unusable instance,
/// DataIntegrityError when a certificate fails its re-check.
TheoremVerdict verify_theorem(std::string_view theorem_id, const Instance& inst,
                              const VerifyBudgets& budgets = {});

struct SuiteEntry {
  std::string theorem_id;
  InstanceKind kind = InstanceKind::HypersurfaceQuotient;
  unsigned count = 1;
  std::uint64_t seed = 0;
  GenerationParams params;
  /// Also run the theorem's control instance.
  bool with_control = false;
};

struct SuiteConfig {
  std::vector<SuiteEntry> entries;
  VerifyBudgets budgets;
};

struct Report {
  /// Ordered by (theorem id, instance digest).
  std::vector<TheoremVerdict> verdicts;
  std::size_t confirmed = 0, hypothesis_failed = 0, counterexamples = 0, undecided = 0;
  std::size_t generation_failures = 0;

  bool alarm() const noexcept { return counterexamples > 0; }
};

Report run_suite(const SuiteConfig& config);

/// Every theorem on `per_theorem` instances for each p, plus controls.
SuiteConfig default_suite(std::uint64_t seed, unsigned per_theorem = 10,
                          std::vector<std::uint32_t> primes = {2, 3, 5});

}  // namespace frobforge
