#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wwtpp/model.hpp"

namespace wwtpp {

// Constraint families, numbered after the time-indexed model:
//   C1    per-period plant capacity
//   C2/C3 tank balance (first period / recurrence)
//   C4    tank capacity window (periods 2..m-1)
//   C5    tanks empty at the deadline
//   C6    no emptying in period 1
//   C7-C9 emptying rate disjunction (zero, full rate, or full drain)
//   C10   all-or-nothing rerouting (structural here: reroute is per discharge)
//   C11/C12 redundant bounds on the emptying flow
enum class ConstraintFamily { C1, C2, C3, C4, C5, C6, C7_9, C10, C11, C12 };

std::string_view to_string(ConstraintFamily family);

struct Violation {
  ConstraintFamily family;
  int industry = 0;  // 1-based; 0 when not tied to an industry
  int period = 0;    // 1-based; 0 when not tied to a period
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  bool check_redundant = false;                  // also check C11/C12
  bool check_first_period_tank_capacity = false;  // stricter than the model: Buf_i1 <= TankCapacity_i
};

// Checks a solution against the full constraint system. Reports every
// violation, not just the first. Throws std::invalid_argument when the
// solution dimensions do not match the instance.
VerificationReport verify(const Instance& instance, const Solution& solution,
                          const VerifyOptions& options = {});

// The per-period flow that actually reaches the plant on the scheduled route:
// c(i,j) = d(i,j) when the covering discharge keeps its slot, 0 when rerouted.
IntGrid actual_flow_grid(const Instance& instance, const std::vector<bool>& reroute);

struct BufferTrajectories {
  IntGrid bout;
  IntGrid buf;
};

struct InfeasibleAt {
  int industry;  // 1-based
  int period;    // 1-based
  std::string reason;
};

using SimulationResult = std::variant<BufferTrajectories, InfeasibleAt>;

// Deterministic forward simulation of the tanks. empty_decision(i,j) asks to
// drain tank i during period j+1; the drained amount is then
// min(TankFlow_i, Buf_{i,j}), which is exactly the union of the full-rate and
// full-drain branches of C7-C9. Plant capacity is not checked here.
// Fails fast on the first tank-capacity breach (C4 window) or on a nonzero
// final buffer.
SimulationResult simulate_buffers(const Instance& instance,
                                  const std::vector<bool>& reroute,
                                  const BoolGrid& empty_decision);

}  // namespace wwtpp
