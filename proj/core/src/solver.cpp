#include "wwtpp/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wwtpp/semantics.hpp"

namespace wwtpp {

namespace {

struct FlatDischarge {
  int flat_index;
  int industry;
  int start;
  int end;
  std::int64_t flow;
  std::int64_t volume;
};

class Search {
 public:
  Search(const Instance& inst, const SolverConfig& config)
      : inst_(inst),
        config_(config),
        k_(inst.industry_count()),
        m_(inst.periods),
        river_load_(static_cast<std::size_t>(m_), 0),
        tank_inflow_(k_, m_, 0),
        empty_decision_(k_, m_, 0) {
    const auto refs = flatten_discharges(inst);
    discharges_.reserve(refs.size());
    for (std::size_t t = 0; t < refs.size(); ++t) {
      const DischargeRef& ref = refs[t];
      discharges_.push_back({static_cast<int>(t), ref.industry, ref.d.start, ref.d.end,
                             ref.d.flow, ref.d.volume()});
    }
    reroute_.assign(discharges_.size(), false);

    starts_at_.assign(static_cast<std::size_t>(m_) + 1, {});
    for (const FlatDischarge& fd : discharges_)
      starts_at_[static_cast<std::size_t>(fd.start)].push_back(fd.flat_index);
    if (config_.branch_order == BranchOrder::BiggestDischargeFirst) {
      for (auto& bucket : starts_at_) {
        std::stable_sort(bucket.begin(), bucket.end(), [this](int a, int b) {
          return discharges_[static_cast<std::size_t>(a)].volume >
                 discharges_[static_cast<std::size_t>(b)].volume;
        });
      }
    }
  }

  SolveResult run() {
    start_time_ = std::chrono::steady_clock::now();
    std::vector<std::int64_t> empty_tanks(static_cast<std::size_t>(k_), 0);
    const bool found = period(1, empty_tanks);

    SolveResult result;
    result.stats.nodes_explored = nodes_;
    result.stats.backtracks = backtracks_;
    result.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_time_);
    if (found) {
      result.verdict = Verdict::sat(std::move(witness_));
    } else if (aborted_ == Abort::Time) {
      result.verdict = Verdict::timeout();
    } else if (aborted_ == Abort::Nodes) {
      result.verdict = Verdict::unknown("node limit reached");
    } else {
      result.verdict = Verdict::unsat();
    }
    result.stats.verdict = result.verdict.kind;
    return result;
  }

 private:
  enum class Abort { None, Time, Nodes };

  bool enter_node() {
    ++nodes_;
    if (config_.node_limit && nodes_ > *config_.node_limit) {
      aborted_ = Abort::Nodes;
      return false;
    }
    if (config_.time_limit && (nodes_ & 0xFF) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_time_;
      if (elapsed >= *config_.time_limit) {
        aborted_ = Abort::Time;
        return false;
      }
    }
    return true;
  }

  // Commits a discharge to its scheduled slots; undone and rejected if any
  // touched period overloads the plant on committed river flow alone.
  bool add_river(const FlatDischarge& fd) {
    for (int p = fd.start; p <= fd.end; ++p) {
      river_load_[static_cast<std::size_t>(p - 1)] += fd.flow;
      if (river_load_[static_cast<std::size_t>(p - 1)] > inst_.plant_capacity) {
        for (int q = fd.start; q <= p; ++q)
          river_load_[static_cast<std::size_t>(q - 1)] -= fd.flow;
        return false;
      }
    }
    return true;
  }

  void remove_river(const FlatDischarge& fd) {
    for (int p = fd.start; p <= fd.end; ++p)
      river_load_[static_cast<std::size_t>(p - 1)] -= fd.flow;
  }

  void add_buffered(const FlatDischarge& fd) {
    for (int p = fd.start; p <= fd.end; ++p) tank_inflow_(fd.industry, p - 1) += fd.flow;
  }

  void remove_buffered(const FlatDischarge& fd) {
    for (int p = fd.start; p <= fd.end; ++p) tank_inflow_(fd.industry, p - 1) -= fd.flow;
  }

  bool period(int p, std::vector<std::int64_t>& tanks) {
    if (p > m_) {
      finish(tanks);
      return true;
    }
    return reroute_stage(p, 0, tanks);
  }

  bool reroute_stage(int p, std::size_t idx, std::vector<std::int64_t>& tanks) {
    if (aborted_ != Abort::None) return false;
    const auto& bucket = starts_at_[static_cast<std::size_t>(p)];
    if (idx == bucket.size()) {
      std::vector<std::int64_t> bout(static_cast<std::size_t>(k_), 0);
      return empty_stage(p, 0, tanks, bout,
                         river_load_[static_cast<std::size_t>(p - 1)]);
    }
    const FlatDischarge& fd = discharges_[static_cast<std::size_t>(bucket[idx])];
    const bool buffer_first = config_.branch_order == BranchOrder::BufferFirst;
    for (int which = 0; which < 2; ++which) {
      const bool to_buffer = (which == 0) == buffer_first;
      if (!enter_node()) return false;
      bool committed;
      if (to_buffer) {
        add_buffered(fd);
        committed = true;
      } else {
        committed = add_river(fd);
      }
      if (committed) {
        reroute_[static_cast<std::size_t>(fd.flat_index)] = to_buffer;
        if (reroute_stage(p, idx + 1, tanks)) return true;
        if (to_buffer) remove_buffered(fd); else remove_river(fd);
      }
      ++backtracks_;
      if (aborted_ != Abort::None) return false;
    }
    return false;
  }

  bool empty_stage(int p, int i, std::vector<std::int64_t>& tanks,
                   std::vector<std::int64_t>& bout, std::int64_t load) {
    if (aborted_ != Abort::None) return false;
    // Tanks with nothing stored, or with a zero emptying rate, have a forced
    // zero outflow; both branches would coincide.
    while (i < k_ && (tanks[static_cast<std::size_t>(i)] == 0 ||
                      inst_.industries[static_cast<std::size_t>(i)].tank_flow == 0)) {
      ++i;
    }
    if (i == k_) return finish_period(p, tanks, bout);

    const std::int64_t rate = inst_.industries[static_cast<std::size_t>(i)].tank_flow;
    const std::int64_t drained = std::min(rate, tanks[static_cast<std::size_t>(i)]);
    const bool empty_first = config_.empty_order == EmptyOrder::EmptyFirst;
    for (int which = 0; which < 2; ++which) {
      const bool do_empty = (which == 0) == empty_first;
      if (!enter_node()) return false;
      if (do_empty) {
        const std::int64_t new_load = load + drained;
        if (new_load <= inst_.plant_capacity) {
          bout[static_cast<std::size_t>(i)] = drained;
          empty_decision_(i, p - 1) = 1;
          if (empty_stage(p, i + 1, tanks, bout, new_load)) return true;
          bout[static_cast<std::size_t>(i)] = 0;
          empty_decision_(i, p - 1) = 0;
        }
      } else {
        if (empty_stage(p, i + 1, tanks, bout, load)) return true;
      }
      ++backtracks_;
      if (aborted_ != Abort::None) return false;
    }
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
      // Drain-time bound: the stored volume plus every committed future
      // inflow must fit into full-rate emptying of all remaining periods.
      std::int64_t future = 0;
      for (int q = p + 1; q <= m_; ++q) future += tank_inflow_(i, q - 1);
      if (stored + future > ind.tank_flow * static_cast<std::int64_t>(m_ - p))
        return false;
      next[static_cast<std::size_t>(i)] = stored;
    }
    return period(p + 1, next);
  }

  void finish(const std::vector<std::int64_t>&) {
    std::vector<bool> reroute(reroute_.begin(), reroute_.end());
    SimulationResult sim = simulate_buffers(inst_, reroute, empty_decision_);
    auto* traj = std::get_if<BufferTrajectories>(&sim);
    if (traj == nullptr)
      throw std::logic_error("search accepted a schedule the simulator rejects");
    witness_ = Solution{std::move(reroute), std::move(traj->bout), std::move(traj->buf)};
  }

  const Instance& inst_;
  const SolverConfig& config_;
  int k_;
  int m_;

  std::vector<FlatDischarge> discharges_;
  std::vector<std::vector<int>> starts_at_;

  std::vector<std::int64_t> river_load_;
  IntGrid tank_inflow_;
  BoolGrid empty_decision_;
  std::vector<char> reroute_;

  std::int64_t nodes_ = 0;
  std::int64_t backtracks_ = 0;
  Abort aborted_ = Abort::None;
  std::chrono::steady_clock::time_point start_time_;
  Solution witness_;
};

}  // namespace

SolveResult solve(const Instance& instance, const SolverConfig& config) {
  const ValidationResult validation = validate_instance(instance);
  if (!validation.ok())
    throw std::invalid_argument("invalid instance: " + validation.to_text());
  if (config.time_limit && config.time_limit->count() <= 0)
    throw std::invalid_argument("time_limit must be positive");
  if (config.node_limit && *config.node_limit <= 0)
    throw std::invalid_argument("node_limit must be positive");

  Search search(instance, config);
  return search.run();
}

}  // namespace wwtpp
