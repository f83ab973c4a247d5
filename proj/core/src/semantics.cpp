#include "wwtpp/semantics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wwtpp {

std::string_view to_string(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::C1: return "C1";
    case ConstraintFamily::C2: return "C2";
    case ConstraintFamily::C3: return "C3";
    case ConstraintFamily::C4: return "C4";
    case ConstraintFamily::C5: return "C5";
    case ConstraintFamily::C6: return "C6";
    case ConstraintFamily::C7_9: return "C7-C9";
    case ConstraintFamily::C10: return "C10";
    case ConstraintFamily::C11: return "C11";
    case ConstraintFamily::C12: return "C12";
  }
  return "?";
}

std::string VerificationReport::to_text() const {
  if (ok()) return "valid\n";
  std::ostringstream os;
  os << "invalid: " << violations.size() << " violation(s)\n";
  for (const Violation& v : violations) {
    os << "  [" << to_string(v.family) << "]";
    if (v.industry > 0) os << " industry " << v.industry;
    if (v.period > 0) os << " period " << v.period;
    os << ": " << v.detail << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["ok"] = ok();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Violation& v : violations) {
    nlohmann::ordered_json entry;
    entry["family"] = std::string(to_string(v.family));
    if (v.industry > 0) entry["industry"] = v.industry; else entry["industry"] = nullptr;
    if (v.period > 0) entry["period"] = v.period; else entry["period"] = nullptr;
    entry["detail"] = v.detail;
    list.push_back(std::move(entry));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

IntGrid actual_flow_grid(const Instance& instance, const std::vector<bool>& reroute) {
  const auto discharges = flatten_discharges(instance);
  if (reroute.size() != discharges.size())
    throw std::invalid_argument("reroute length does not match discharge count");
  IntGrid c(instance.industry_count(), instance.periods, 0);
  for (std::size_t t = 0; t < discharges.size(); ++t) {
    if (reroute[t]) continue;
    const DischargeRef& ref = discharges[t];
    for (int p = ref.d.start; p <= ref.d.end; ++p) c(ref.industry, p - 1) = ref.d.flow;
  }
  return c;
}

namespace {

void check_dimensions(const Instance& instance, const Solution& solution) {
  const int k = instance.industry_count();
  const int m = instance.periods;
  if (solution.bout.rows() != k || solution.bout.cols() != m)
    throw std::invalid_argument("bout dimensions do not match instance");
  if (solution.buf.rows() != k || solution.buf.cols() != m)
    throw std::invalid_argument("buf dimensions do not match instance");
  if (static_cast<int>(solution.reroute.size()) != instance.discharge_count())
    throw std::invalid_argument("reroute length does not match discharge count");
}

std::string num(std::int64_t v) { return std::to_string(v); }

}  // namespace

VerificationReport verify(const Instance& instance, const Solution& solution,
                          const VerifyOptions& options) {
  check_dimensions(instance, solution);
  const int k = instance.industry_count();
  const int m = instance.periods;
  const DischargeGrid d = build_grid(instance);
  const IntGrid c = actual_flow_grid(instance, solution.reroute);
  const IntGrid& bout = solution.bout;
  const IntGrid& buf = solution.buf;

  VerificationReport report;
  auto add = [&report](ConstraintFamily family, int industry, int period,
                       std::string detail) {
    report.violations.push_back({family, industry, period, std::move(detail)});
  };

  // C1: plant capacity per period.
  for (int j = 0; j < m; ++j) {
    std::int64_t load = 0;
    for (int i = 0; i < k; ++i) load += c(i, j) + bout(i, j);
    if (load > instance.plant_capacity)
      add(ConstraintFamily::C1, 0, j + 1,
          "plant load " + num(load) + " exceeds capacity " + num(instance.plant_capacity));
  }

  for (int i = 0; i < k; ++i) {
    const Industry& ind = instance.industries[static_cast<std::size_t>(i)];

    // C2: first-period balance.
    if (buf(i, 0) != d(i, 0) - c(i, 0))
      add(ConstraintFamily::C2, i + 1, 1,
          "Buf = " + num(buf(i, 0)) + ", balance gives " + num(d(i, 0) - c(i, 0)));

    // C3: balance recurrence.
    for (int j = 1; j < m; ++j) {
      const std::int64_t expected = buf(i, j - 1) - bout(i, j) + d(i, j) - c(i, j);
      if (buf(i, j) != expected)
        add(ConstraintFamily::C3, i + 1, j + 1,
            "Buf = " + num(buf(i, j)) + ", balance gives " + num(expected));
    }

    // C4: tank capacity over periods 2..m-1 (period 1 only in strict mode).
    if (options.check_first_period_tank_capacity && buf(i, 0) > ind.tank_capacity)
      add(ConstraintFamily::C4, i + 1, 1,
          "Buf = " + num(buf(i, 0)) + " exceeds tank capacity " + num(ind.tank_capacity) +
              " (first-period check enabled)");
    for (int j = 1; j < m - 1; ++j) {
      if (buf(i, j) > ind.tank_capacity)
        add(ConstraintFamily::C4, i + 1, j + 1,
            "Buf = " + num(buf(i, j)) + " exceeds tank capacity " + num(ind.tank_capacity));
    }

    // C5: empty at the deadline.
    if (buf(i, m - 1) != 0)
      add(ConstraintFamily::C5, i + 1, m,
          "Buf = " + num(buf(i, m - 1)) + " at the deadline");

    // C6: no emptying in period 1.
    if (bout(i, 0) != 0)
      add(ConstraintFamily::C6, i + 1, 1, "Bout = " + num(bout(i, 0)) + " in period 1");

    // C7-C9: emptying is zero, the full rate (with enough stored), or a full
    // drain (at most the rate).
    for (int j = 1; j < m; ++j) {
      const std::int64_t out = bout(i, j);
      const std::int64_t prev = buf(i, j - 1);
      const bool zero = out == 0;
      const bool full_rate = out == ind.tank_flow && prev >= ind.tank_flow;
      const bool full_drain = out == prev && prev <= ind.tank_flow;
      if (!zero && !full_rate && !full_drain)
        add(ConstraintFamily::C7_9, i + 1, j + 1,
            "Bout = " + num(out) + " with Buf = " + num(prev) + " and TankFlow = " +
                num(ind.tank_flow) + ": neither zero, full rate, nor full drain");
    }

    if (options.check_redundant) {
      for (int j = 1; j < m; ++j) {
        if (bout(i, j) < 0 || bout(i, j) > ind.tank_flow)
          add(ConstraintFamily::C11, i + 1, j + 1,
              "Bout = " + num(bout(i, j)) + " outside [0, " + num(ind.tank_flow) + "]");
        if (bout(i, j) > buf(i, j - 1))
          add(ConstraintFamily::C12, i + 1, j + 1,
              "Bout = " + num(bout(i, j)) + " exceeds stored " + num(buf(i, j - 1)));
      }
    }
  }

  // C10 holds structurally: reroute decisions are per discharge, so the
  // implied c values are all-or-nothing by construction.
  return report;
}

SimulationResult simulate_buffers(const Instance& instance,
                                  const std::vector<bool>& reroute,
                                  const BoolGrid& empty_decision) {
  const int k = instance.industry_count();
  const int m = instance.periods;
  if (empty_decision.rows() != k || empty_decision.cols() != m)
    throw std::invalid_argument("empty_decision dimensions do not match instance");

  const DischargeGrid d = build_grid(instance);
  const IntGrid c = actual_flow_grid(instance, reroute);

  BufferTrajectories out{IntGrid(k, m, 0), IntGrid(k, m, 0)};
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < k; ++i) {
      const Industry& ind = instance.industries[static_cast<std::size_t>(i)];
      const std::int64_t prev = j == 0 ? 0 : out.buf(i, j - 1);
      const std::int64_t drained =
          (j > 0 && empty_decision(i, j)) ? std::min(ind.tank_flow, prev) : 0;
      const std::int64_t stored = prev - drained + d(i, j) - c(i, j);
      assert(drained >= 0 && stored >= 0);
      out.bout(i, j) = drained;
      out.buf(i, j) = stored;
      if (j + 1 >= 2 && j + 1 <= m - 1 && stored > ind.tank_capacity)
        return InfeasibleAt{i + 1, j + 1,
                            "tank capacity: " + std::to_string(stored) + " > " +
                                std::to_string(ind.tank_capacity)};
      if (j + 1 == m && stored != 0)
        return InfeasibleAt{i + 1, j + 1,
                            "buffer not empty at the deadline: " + std::to_string(stored)};
    }
  }
  return out;
}

}  // namespace wwtpp
