#include "wwtpp/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "wwtpp/errors.hpp"
#include "wwtpp/semantics.hpp"

namespace wwtpp {

int oracle_decision_count(const Instance& instance) {
  return instance.discharge_count() +
         instance.industry_count() * (instance.periods - 1);
}

namespace {

// Plain chronological enumeration of every reroute vector and every
// empty/hold matrix. A prefix is abandoned only when the buffer simulation
// itself has failed (tank over capacity inside the checked window, or a
// nonzero buffer at the deadline); in particular the plant capacity is never
// consulted during enumeration. Empty/hold cells whose two values coincide
// (nothing stored, or a zero emptying rate) are enumerated once, since both
// choices yield the same trajectories. Every completed assignment is checked
// with verify().
class Enumeration {
 public:
  explicit Enumeration(const Instance& inst)
      : inst_(inst),
        k_(inst.industry_count()),
        m_(inst.periods),
        grid_(build_grid(inst)),
        tank_inflow_(k_, m_, 0),
        empty_decision_(k_, m_, 0) {
    const auto refs = flatten_discharges(inst);
    for (std::size_t t = 0; t < refs.size(); ++t)
      discharges_.push_back(refs[t]);
    reroute_.assign(discharges_.size(), 0);
    starts_at_.assign(static_cast<std::size_t>(m_) + 1, {});
    for (std::size_t t = 0; t < discharges_.size(); ++t)
      starts_at_[static_cast<std::size_t>(discharges_[t].d.start)].push_back(
          static_cast<int>(t));
  }

  Verdict run() {
    std::vector<std::int64_t> tanks(static_cast<std::size_t>(k_), 0);
    if (period(1, tanks)) return Verdict::sat(std::move(witness_));
    return Verdict::unsat();
  }

 private:
  bool period(int p, std::vector<std::int64_t>& tanks) {
    if (p > m_) return leaf();
    return reroute_stage(p, 0, tanks);
  }

  bool reroute_stage(int p, std::size_t idx, std::vector<std::int64_t>& tanks) {
    const auto& bucket = starts_at_[static_cast<std::size_t>(p)];
    if (idx == bucket.size()) {
      std::vector<std::int64_t> bout(static_cast<std::size_t>(k_), 0);
      return empty_stage(p, 0, tanks, bout);
    }
    const int t = bucket[idx];
    const DischargeRef& ref = discharges_[static_cast<std::size_t>(t)];
    for (int value = 0; value < 2; ++value) {
      reroute_[static_cast<std::size_t>(t)] = static_cast<char>(value);
      if (value == 1)
        for (int q = ref.d.start; q <= ref.d.end; ++q)
          tank_inflow_(ref.industry, q - 1) += ref.d.flow;
      const bool found = reroute_stage(p, idx + 1, tanks);
      if (value == 1)
        for (int q = ref.d.start; q <= ref.d.end; ++q)
          tank_inflow_(ref.industry, q - 1) -= ref.d.flow;
      if (found) return true;
    }
    return false;
  }

  bool empty_stage(int p, int i, std::vector<std::int64_t>& tanks,
                   std::vector<std::int64_t>& bout) {
    while (i < k_ && (p == 1 || tanks[static_cast<std::size_t>(i)] == 0 ||
                      inst_.industries[static_cast<std::size_t>(i)].tank_flow == 0)) {
      ++i;
    }
    if (i == k_) return finish_period(p, tanks, bout);
    const Industry& ind = inst_.industries[static_cast<std::size_t>(i)];
    const std::int64_t drained = std::min(ind.tank_flow, tanks[static_cast<std::size_t>(i)]);
    for (int value = 0; value < 2; ++value) {
      bout[static_cast<std::size_t>(i)] = value == 1 ? drained : 0;
      empty_decision_(i, p - 1) = static_cast<unsigned char>(value);
      if (empty_stage(p, i + 1, tanks, bout)) return true;
    }
    bout[static_cast<std::size_t>(i)] = 0;
    empty_decision_(i, p - 1) = 0;
    return false;
  }

  bool finish_period(int p, std::vector<std::int64_t>& tanks,
                     std::vector<std::int64_t>& bout) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      const Industry& ind = inst_.industries[static_cast<std::size_t>(i)];
      const std::int64_t stored = tanks[static_cast<std::size_t>(i)] -
                                  bout[static_cast<std::size_t>(i)] +
                                  tank_inflow_(i, p - 1);
      if (p >= 2 && p <= m_ - 1 && stored > ind.tank_capacity) return false;
      if (p == m_ && stored != 0) return false;
      next[static_cast<std::size_t>(i)] = stored;
    }
    return period(p + 1, next);
  }

  bool leaf() {
    std::vector<bool> reroute(reroute_.begin(), reroute_.end());
    SimulationResult sim = simulate_buffers(inst_, reroute, empty_decision_);
    auto* traj = std::get_if<BufferTrajectories>(&sim);
    if (traj == nullptr) return false;
    Solution candidate{std::move(reroute), std::move(traj->bout), std::move(traj->buf)};
    if (!verify(inst_, candidate).ok()) return false;
    witness_ = std::move(candidate);
    return true;
  }

  const Instance& inst_;
  int k_;
  int m_;
  DischargeGrid grid_;
  std::vector<DischargeRef> discharges_;
  std::vector<std::vector<int>> starts_at_;
  IntGrid tank_inflow_;
  BoolGrid empty_decision_;
  std::vector<char> reroute_;
  Solution witness_;
};

}  // namespace

Verdict oracle_solve(const Instance& instance, int budget) {
  const ValidationResult validation = validate_instance(instance);
  if (!validation.ok())
    throw std::invalid_argument("invalid instance: " + validation.to_text());
  const int decisions = oracle_decision_count(instance);
  if (decisions > budget)
    throw BudgetError("exhaustive enumeration needs " + std::to_string(decisions) +
                      " decisions, budget is " + std::to_string(budget));
  Enumeration enumeration(instance);
  return enumeration.run();
}

}  // namespace wwtpp
