#include "frobforge/budget.hpp"

#include "frobforge/errors.hpp"

namespace frobforge {

namespace {

struct BudgetState {
  Budget budget;
  std::int64_t scale = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

BudgetState& state() {
  thread_local BudgetState s;
  return s;
}

}  // namespace

const char* budget_kind_name(BudgetExceeded::Kind kind) noexcept {
  switch (kind) {
    case BudgetExceeded::Kind::DegreeCap:
      return "degree-cap";
    case BudgetExceeded::Kind::PairCap:
      return "pair-cap";
    case BudgetExceeded::Kind::Iterations:
      return "iterations";
    case BudgetExceeded::Kind::Time:
      return "time";
  }
  return "unknown";
}

const Budget& current_budget() { return state().budget; }

std::int64_t effective_degree_cap() {
  const auto& s = state();
  return s.budget.degree_cap * s.scale;
}

void check_deadline() {
  const auto& s = state();
  if (s.deadline && std::chrono::steady_clock::now() > *s.deadline) {
    throw BudgetExceeded(BudgetExceeded::Kind::Time,
                         s.budget.time_ms.value_or(0),
                         "time budget exhausted");
  }
}

BudgetScope::BudgetScope(const Budget& budget)
    : saved_(state().budget),
      saved_scale_(state().scale),
      saved_deadline_(state().deadline) {
  auto& s = state();
  s.budget = budget;
  s.scale = 1;
  if (budget.time_ms) {
    s.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(*budget.time_ms);
  } else {
    s.deadline.reset();
  }
}

BudgetScope::~BudgetScope() {
  auto& s = state();
  s.budget = saved_;
  s.scale = saved_scale_;
  s.deadline = saved_deadline_;
}

DegreeScale::DegreeScale(std::int64_t factor) : saved_(state().scale) {
  state().scale = saved_ * (factor < 1 ? 1 : factor);
}

DegreeScale::~DegreeScale() { state().scale = saved_; }

}  // namespace frobforge
