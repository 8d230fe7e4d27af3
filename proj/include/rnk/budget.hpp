#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rnk {

// Thrown when an enumeration exceeds the configured cell budget
// (RNK_MAX_CELLS, default 10^7).
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long long limit)
      : std::runtime_error("enumeration exceeded the cell budget of " +
                           std::to_string(limit) +
                           " (set RNK_MAX_CELLS to raise it)") {}
};

namespace detail {
inline long long& budget_used() {
  thread_local long long used = 0;
  return used;
}
inline int& budget_depth() {
  thread_local int depth = 0;
  return depth;
}
}  // namespace detail

inline long long budget_limit() {
  static const long long limit = [] {
    if (const char* env = std::getenv("RNK_MAX_CELLS")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 10'000'000LL;
  }();
  return limit;
}

// Resets the cell counter on entry to an outermost operation; nested scopes
// share the outer counter, so one CLI invocation gets one budget.
class BudgetScope {
 public:
  BudgetScope() {
    if (detail::budget_depth()++ == 0) detail::budget_used() = 0;
  }
  ~BudgetScope() { --detail::budget_depth(); }
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;
};

inline void charge_cells(long long n = 1) {
  if ((detail::budget_used() += n) > budget_limit())
    throw BudgetExceeded(budget_limit());
}

}  // namespace rnk
