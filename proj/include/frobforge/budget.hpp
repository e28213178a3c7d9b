#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace frobforge {

/// Resource limits for Groebner computations.
///
/// The degree cap bounds the weighted degree of monomials an engine run may
/// touch. Frobenius operations raise the effective cap by a factor of q while
/// they run (see DegreeScale), so the cap keeps describing the size of the
/// original problem rather than of its q-th power.
struct Budget {
  std::int64_t degree_cap = 40;
  std::int64_t pair_cap = 200000;
  std::optional<std::int64_t> time_ms;
};

/// The budget in force on the calling thread.
const Budget& current_budget();

/// Effective degree cap, including any active DegreeScale.
std::int64_t effective_degree_cap();

/// Throws BudgetExceeded(Time) once the wall-clock allowance is spent.
void check_deadline();

/// Installs a budget for the lifetime of the scope.
class BudgetScope {
 public:
  explicit BudgetScope(const Budget& budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  Budget saved_;
  std::int64_t saved_scale_;
  std::optional<std::chrono::steady_clock::time_point> saved_deadline_;
};

/// Multiplies the degree cap while in scope.
class DegreeScale {
 public:
  explicit DegreeScale(std::int64_t factor);
  ~DegreeScale();
  DegreeScale(const DegreeScale&) = delete;
  DegreeScale& operator=(const DegreeScale&) = delete;

 private:
  std::int64_t saved_;
};

}  // namespace frobforge
