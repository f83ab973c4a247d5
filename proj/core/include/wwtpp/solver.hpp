#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "wwtpp/model.hpp"

namespace wwtpp {

enum class BranchOrder {
  RiverFirst,             // instance order, scheduled route tried first
  BufferFirst,            // instance order, tank tried first
  BiggestDischargeFirst,  // largest volume decided first, scheduled route first
};

enum class EmptyOrder { EmptyFirst, HoldFirst };

struct SolverConfig {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::int64_t> node_limit;
  BranchOrder branch_order = BranchOrder::BiggestDischargeFirst;
  EmptyOrder empty_order = EmptyOrder::EmptyFirst;
};

struct SolveStats {
  std::int64_t nodes_explored = 0;  // decision values entered
  std::int64_t backtracks = 0;      // decision values abandoned
  std::chrono::microseconds elapsed{0};
  VerdictKind verdict = VerdictKind::Unknown;
};

struct SolveResult {
  Verdict verdict;
  SolveStats stats;
};

// Chronological depth-first search over reroute and emptying decisions.
// Periods are processed in order; at each period the reroute of every
// discharge starting there is fixed first, then an empty/hold choice is made
// for every tank holding water. A branch is pruned when a period's committed
// plant load exceeds capacity, when a tank breaches its capacity window, or
// when a tank can no longer drain to zero by the deadline at its fixed rate.
// Sat witnesses always pass verify() with default options.
SolveResult solve(const Instance& instance, const SolverConfig& config = {});

}  // namespace wwtpp
