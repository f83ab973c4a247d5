#include "wwtpp/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wwtpp {

int Instance::discharge_count() const {
  int n = 0;
  for (const Industry& ind : industries) n += static_cast<int>(ind.discharges.size());
  return n;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Sat: return "sat";
    case VerdictKind::Unsat: return "unsat";
    case VerdictKind::Unknown: return "unknown";
    case VerdictKind::Timeout: return "timeout";
  }
  return "unknown";
}

std::vector<DischargeRef> flatten_discharges(const Instance& instance) {
  std::vector<DischargeRef> out;
  out.reserve(static_cast<std::size_t>(instance.discharge_count()));
  for (int i = 0; i < instance.industry_count(); ++i) {
    const Industry& ind = instance.industries[static_cast<std::size_t>(i)];
    for (int t = 0; t < static_cast<int>(ind.discharges.size()); ++t) {
      out.push_back({i, t, ind.discharges[static_cast<std::size_t>(t)]});
    }
  }
  return out;
}

DischargeGrid build_grid(const Instance& instance) {
  DischargeGrid grid(instance.industry_count(), instance.periods, 0);
  for (int i = 0; i < instance.industry_count(); ++i) {
    for (const Discharge& d : instance.industries[static_cast<std::size_t>(i)].discharges) {
      for (int p = d.start; p <= d.end; ++p) grid(i, p - 1) = d.flow;
    }
  }
  return grid;
}

std::string ValidationResult::to_text() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const ValidationIssue& issue : issues) {
    os << "invalid:";
    if (issue.industry > 0) os << " industry " << issue.industry;
    if (issue.discharge > 0) os << " discharge " << issue.discharge;
    os << ": " << issue.reason << '\n';
  }
  return os.str();
}

ValidationResult validate_instance(const Instance& instance) {
  ValidationResult result;
  auto add = [&result](int industry, int discharge, std::string reason) {
    result.issues.push_back({industry, discharge, std::move(reason)});
  };

  if (instance.periods < 1) add(0, 0, "periods must be at least 1");
  if (instance.plant_capacity < 0) add(0, 0, "plant_capacity: non-negative required");

  std::set<std::string> seen_ids;
  for (int i = 0; i < instance.industry_count(); ++i) {
    const Industry& ind = instance.industries[static_cast<std::size_t>(i)];
    const int i1 = i + 1;
    if (!seen_ids.insert(ind.id).second)
      add(i1, 0, "duplicate industry id \"" + ind.id + "\"");
    if (ind.tank_capacity < 0) add(i1, 0, "tank_capacity: non-negative required");
    if (ind.tank_flow < 0) add(i1, 0, "tank_flow: non-negative required");

    for (int t = 0; t < static_cast<int>(ind.discharges.size()); ++t) {
      const Discharge& d = ind.discharges[static_cast<std::size_t>(t)];
      const int t1 = t + 1;
      if (d.flow <= 0) add(i1, t1, "flow must be positive");
      if (d.start < 1) add(i1, t1, "start precedes period 1");
      if (d.start > d.end) add(i1, t1, "start exceeds end");
      if (d.end > instance.periods) add(i1, t1, "end exceeds horizon");
      if (t > 0) {
        const Discharge& prev = ind.discharges[static_cast<std::size_t>(t - 1)];
        if (prev.start > d.start) add(i1, t1, "discharges not sorted by start");
      }
    }

    // Pairwise disjointness, reported at the first shared period.
    for (int a = 0; a < static_cast<int>(ind.discharges.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(ind.discharges.size()); ++b) {
        const Discharge& da = ind.discharges[static_cast<std::size_t>(a)];
        const Discharge& db = ind.discharges[static_cast<std::size_t>(b)];
        const int lo = std::max(da.start, db.start);
        const int hi = std::min(da.end, db.end);
        if (lo <= hi) {
          add(i1, b + 1, "overlap at period " + std::to_string(lo) +
                             " with discharge " + std::to_string(a + 1));
        }
      }
    }
  }
  return result;
}

}  // namespace wwtpp
