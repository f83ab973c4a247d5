#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wwtpp {

// One scheduled discharge: a constant flow over an inclusive span of periods.
// Periods are 1-based; period `periods` of the owning instance is the deadline.
struct Discharge {
  int start = 1;
  int end = 1;
  std::int64_t flow = 0;  // per-period flow, constant over [start, end]

  std::int64_t volume() const { return flow * (end - start + 1); }
  bool covers(int period) const { return start <= period && period <= end; }
  bool operator==(const Discharge&) const = default;
};

// An industry owns a retention tank (capacity + fixed emptying rate) and a
// list of scheduled discharges, sorted by start and pairwise disjoint.
struct Industry {
  std::string id;
  std::int64_t tank_capacity = 0;
  std::int64_t tank_flow = 0;
  std::vector<Discharge> discharges;

  bool operator==(const Industry&) const = default;
};

struct Instance {
  std::int64_t plant_capacity = 0;
  int periods = 1;
  std::vector<Industry> industries;

  int industry_count() const { return static_cast<int>(industries.size()); }
  int discharge_count() const;
  bool operator==(const Instance&) const = default;
};

// Dense row-major matrix, 0-based on both axes. Row = industry index,
// column = period - 1.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  T& operator()(int i, int j) { return cells_[index(i, j)]; }
  const T& operator()(int i, int j) const { return cells_[index(i, j)]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t index(int i, int j) const {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> cells_;
};

using IntGrid = Grid<std::int64_t>;
using BoolGrid = Grid<unsigned char>;

// d(i,j): the scheduled flow of industry i at period j+1, 0 where nothing is
// scheduled.
using DischargeGrid = IntGrid;

DischargeGrid build_grid(const Instance& instance);

// A candidate schedule. `reroute` has one entry per discharge in instance
// order flattened industry-major; true sends the whole discharge to the
// industry's tank, false keeps it on the scheduled (river) route.
struct Solution {
  std::vector<bool> reroute;
  IntGrid bout;  // k x m, flow emptied from tank i during period j+1
  IntGrid buf;   // k x m, volume held in tank i at the end of period j+1

  bool operator==(const Solution&) const = default;
};

struct ValidationIssue {
  int industry = 0;   // 1-based; 0 when the issue is instance-level
  int discharge = 0;  // 1-based within the industry; 0 when industry-level
  std::string reason;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_text() const;
};

ValidationResult validate_instance(const Instance& instance);

enum class VerdictKind { Sat, Unsat, Unknown, Timeout };

std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  // Present for Sat verdicts that carry a decoded schedule (native search,
  // SMT model round-trip). Verdict-only back-ends leave it empty.
  std::optional<Solution> witness;
  std::string reason;  // diagnostic for Unknown

  static Verdict sat(Solution s) { return {VerdictKind::Sat, std::move(s), {}}; }
  static Verdict sat_verdict_only() { return {VerdictKind::Sat, std::nullopt, {}}; }
  static Verdict unsat() { return {VerdictKind::Unsat, std::nullopt, {}}; }
  static Verdict unknown(std::string why) { return {VerdictKind::Unknown, std::nullopt, std::move(why)}; }
  static Verdict timeout() { return {VerdictKind::Timeout, std::nullopt, {}}; }
};

// Flattened view of all discharges in reroute-vector order.
struct DischargeRef {
  int industry;  // 0-based
  int index;     // 0-based position within the industry
  Discharge d;
};

std::vector<DischargeRef> flatten_discharges(const Instance& instance);

}  // namespace wwtpp
