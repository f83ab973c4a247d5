#pragma once

#include "wwtpp/model.hpp"

namespace wwtpp {

inline constexpr int kDefaultOracleBudget = 24;

// Number of binary decisions full enumeration would branch on:
// one reroute per discharge plus one empty/hold per tank per period 2..m.
int oracle_decision_count(const Instance& instance);

// Ground truth by exhaustive enumeration of all reroute vectors and all
// empty/hold matrices. Each completed assignment is checked with verify();
// the only shortcut is abandoning a prefix once the buffer simulation itself
// has failed (tank capacity breach or nonzero final buffer). Returns the
// first accepted witness or Unsat. Throws BudgetError when
// oracle_decision_count exceeds the budget.
Verdict oracle_solve(const Instance& instance, int budget = kDefaultOracleBudget);

}  // namespace wwtpp
