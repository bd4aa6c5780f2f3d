#include "seatcfn/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "seatcfn/rng.hpp"

namespace seatcfn {

namespace {

constexpr double kTieEps = 1e-9;

struct BruteState {
  const CfnProblem& p;
  bool injective = false;
  long long visited = 0;
  double best = 0.0;
  bool any = false;
  std::vector<SolutionRecord> optima;
  Assignment current;
  std::vector<int> seat_use;  // occupancy count per global seat id
};

void brute_dfs(BruteState& st, int node, double partial) {
  const int n = st.p.node_count();
  if (node == n) {
    ++st.visited;
    const double score = partial + st.p.constant_offset;
    if (!st.any || score < st.best - kTieEps) {
      st.best = score;
      st.any = true;
      st.optima.clear();
      st.optima.push_back({st.current, score, count_overlaps(st.p, st.current), "brute", 0, st.visited});
    } else if (score <= st.best + kTieEps) {
      if (score < st.best) st.best = score;
      st.optima.push_back({st.current, score, count_overlaps(st.p, st.current), "brute", 0, st.visited});
    }
    return;
  }
  for (int c = 0; c < st.p.choice_count(node); ++c) {
    const int seat = st.p.choices[node][c];
    if (st.injective && st.seat_use[seat] > 0) continue;
    double contribution = st.p.one_node[node][c];
    for (const auto& [other, blk_idx] : st.p.incident(node)) {
      if (other >= node) continue;
      const PairBlock& blk = st.p.blocks[blk_idx];
      const int cols = st.p.choice_count(blk.node_b);
      contribution += blk.node_a == node ? blk.values[c * cols + st.current[other]]
                                         : blk.values[st.current[other] * cols + c];
    }
    if (st.p.overlap_penalty != 0.0) contribution += st.p.overlap_penalty * st.seat_use[seat];
    st.current[node] = c;
    ++st.seat_use[seat];
    brute_dfs(st, node + 1, partial + contribution);
    --st.seat_use[seat];
  }
}

}  // namespace

BruteForceResult brute_force_solve(const CfnProblem& p, BruteForceMode mode,
                                   long long state_guard) {
  double space = 1.0;
  for (int i = 0; i < p.node_count(); ++i) space *= p.choice_count(i);
  if (space > static_cast<double>(state_guard))
    throw SolveError("brute force search space exceeds guard (" +
                     std::to_string(static_cast<double>(space)) + " states)");

  int max_seat = 0;
  for (const auto& ch : p.choices)
    for (int s : ch) max_seat = std::max(max_seat, s);

  BruteState st{p};
  st.injective = mode == BruteForceMode::kPermutationsOnly;
  st.current.assign(p.node_count(), 0);
  st.seat_use.assign(max_seat + 1, 0);
  brute_dfs(st, 0, 0.0);

  BruteForceResult result;
  result.states_visited = st.visited;
  if (!st.any) {
    result.optimum = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  result.optimum = st.best;
  result.optima = std::move(st.optima);
  // Scores inside the tie band may straddle the final best; refresh fields
  // so every record satisfies score == evaluate exactly.
  for (SolutionRecord& rec : result.optima) {
    rec.score = evaluate(p, rec.assignment);
    rec.steps_or_shots = result.states_visited;
  }
  std::erase_if(result.optima, [&](const SolutionRecord& r) {
    return r.score > result.optimum + kTieEps;
  });
  return result;
}

double AnnealSchedule::temperature(long long step) const {
  if (steps <= 1) return t_high;
  const double frac = static_cast<double>(step) / static_cast<double>(steps - 1);
  return t_high * std::pow(t_low / t_high, frac);
}

AnnealSchedule default_schedule(const CfnProblem& p, long long steps) {
  double scale = p.overlap_penalty;
  for (const PairBlock& blk : p.blocks)
    for (double v : blk.values) scale = std::max(scale, std::abs(v));
  if (scale == 0.0)
    for (const auto& table : p.one_node)
      for (double v : table) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  return {scale, 0.01, std::max<long long>(steps, 1), ScheduleShape::kGeometric};
}

double hf_transform(double raw_score, double best_so_far, const HfConfig& config) {
  if (config.slope_kappa == 1.0) return raw_score;
  const double ceiling = best_so_far + config.ceiling_h;
  if (raw_score <= ceiling) return raw_score;
  return ceiling + config.slope_kappa * (raw_score - ceiling);
}

HfConfig default_hf(const AnnealSchedule& schedule) {
  return {10.0 * schedule.t_high, 0.1};
}

namespace {

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Shared Metropolis engine; `hf` switches on the hill-flattening transform.
TrajectoryResult run_trajectory(const CfnProblem& p, const McConfig& cfg,
                                const HfConfig* hf, const char* tag) {
  const int n = p.node_count();
  auto rng = make_engine(cfg.seed);

  Assignment a(n);
  for (int i = 0; i < n; ++i) a[i] = uniform_below(rng, p.choice_count(i));

  // seat id -> choice index per node, for swap moves
  int max_seat = 0;
  for (const auto& ch : p.choices)
    for (int s : ch) max_seat = std::max(max_seat, s);
  std::vector<std::vector<int>> choice_of_seat(n, std::vector<int>(max_seat + 1, -1));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < p.choice_count(i); ++c) choice_of_seat[i][p.choices[i][c]] = c;

  double current = evaluate(p, a);
  double best = current;
  Assignment best_a = a;
  std::vector<Assignment> ties;
  if (cfg.tie_limit > 0) ties.push_back(a);
  double hf_floor = current;  // lowest raw score seen, drives the ceiling

  std::uint64_t hash = 1469598103934665603ULL;
  std::vector<std::pair<long long, double>> improvements;

  const auto note_state = [&](long long step) {
    if (current < best - kTieEps) {
      best = current;
      best_a = a;
      improvements.emplace_back(step, current);
      if (cfg.tie_limit > 0) {
        ties.clear();
        ties.push_back(a);
      }
    } else if (current <= best + kTieEps) {
      best = std::min(best, current);
      if (cfg.tie_limit > 0 && static_cast<int>(ties.size()) < cfg.tie_limit) {
        const auto it = std::lower_bound(ties.begin(), ties.end(), a);
        if (it == ties.end() || *it != a) ties.insert(it, a);
      }
    }
  };

  const long long steps = cfg.schedule.steps;
  for (long long step = 0; step < steps; ++step) {
    const double t = cfg.schedule.temperature(step);

    double delta = 0.0;
    bool feasible = false;
    int node_i = -1, node_j = -1, new_ci = -1, new_cj = -1;

    if (uniform_unit(rng) < cfg.swap_move_fraction) {
      if (n >= 2) {
        node_i = uniform_below(rng, n);
        int j = uniform_below(rng, n - 1);
        node_j = j + (j >= node_i ? 1 : 0);
        const int si = p.choices[node_i][a[node_i]];
        const int sj = p.choices[node_j][a[node_j]];
        if (si != sj) {
          new_ci = choice_of_seat[node_i][sj];
          new_cj = choice_of_seat[node_j][si];
          if (new_ci >= 0 && new_cj >= 0) {
            feasible = true;
            delta = delta_evaluate(p, a, node_i, new_ci);
            const int keep = a[node_i];
            a[node_i] = new_ci;
            delta += delta_evaluate(p, a, node_j, new_cj);
            a[node_i] = keep;
          }
        }
      }
    } else {
      node_i = uniform_below(rng, n);
      if (p.choice_count(node_i) > 1) {
        int c = uniform_below(rng, p.choice_count(node_i) - 1);
        new_ci = c + (c >= a[node_i] ? 1 : 0);
        feasible = true;
        delta = delta_evaluate(p, a, node_i, new_ci);
      }
    }

    bool accepted = false;
    if (feasible) {
      double effective_delta = delta;
      if (hf != nullptr && hf->slope_kappa != 1.0) {
        effective_delta = hf_transform(current + delta, hf_floor, *hf) -
                          hf_transform(current, hf_floor, *hf);
      }
      accepted = effective_delta <= 0.0 ||
                 uniform_unit(rng) < std::exp(-effective_delta / t);
      if (accepted) {
        a[node_i] = new_ci;
        if (node_j >= 0) a[node_j] = new_cj;
        current += delta;
        if (current < hf_floor) hf_floor = current;
        note_state(step);
      }
    }
    hash = mix_hash(hash, static_cast<std::uint64_t>(step));
    hash = mix_hash(hash, static_cast<std::uint64_t>(node_i + 1));
    hash = mix_hash(hash, static_cast<std::uint64_t>((node_j + 1) << 1) |
                              static_cast<std::uint64_t>(accepted));

    // Re-anchor the running score so float drift cannot accumulate over
    // long trajectories.
    if ((step & 0x1fff) == 0x1fff) current = evaluate(p, a);
  }

  TrajectoryResult out;
  out.best = {best_a, evaluate(p, best_a), count_overlaps(p, best_a),
              tag, cfg.seed, steps};
  out.tied_best = std::move(ties);
  out.final_state = std::move(a);
  out.trace_hash = hash;
  out.improvements = std::move(improvements);
  return out;
}

}  // namespace

TrajectoryResult mc_solve_traced(const CfnProblem& p, const McConfig& config) {
  return run_trajectory(p, config, nullptr, "mc");
}

SolutionRecord mc_solve(const CfnProblem& p, const McConfig& config) {
  return mc_solve_traced(p, config).best;
}

TrajectoryResult hf_solve_traced(const CfnProblem& p, const McConfig& config,
                                 const HfConfig& hf) {
  return run_trajectory(p, config, &hf, "hf");
}

SolutionRecord hf_solve(const CfnProblem& p, const McConfig& config, const HfConfig& hf) {
  return hf_solve_traced(p, config, hf).best;
}

ReplicateReport run_replicates(const CfnProblem& p, const SolverSpec& spec,
                               int replicate_count, std::uint64_t base_seed,
                               bool parallel) {
  if (replicate_count < 1) throw SolveError("replicate_count must be >= 1");

  std::vector<TrajectoryResult> results(replicate_count);
  const auto run_one = [&](int r) {
    McConfig cfg = spec.mc;
    cfg.seed = base_seed + static_cast<std::uint64_t>(r);
    results[r] = spec.hf ? hf_solve_traced(p, cfg, *spec.hf) : mc_solve_traced(p, cfg);
  };

  const unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                              static_cast<unsigned>(replicate_count));
  if (parallel && workers > 1) {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&]() {
        for (int r = next.fetch_add(1); r < replicate_count; r = next.fetch_add(1)) run_one(r);
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (int r = 0; r < replicate_count; ++r) run_one(r);
  }

  ReplicateReport report;
  int best_idx = 0;
  for (int r = 1; r < replicate_count; ++r)
    if (results[r].best.score < results[best_idx].best.score) best_idx = r;
  report.best = results[best_idx].best;

  for (int r = 0; r < replicate_count; ++r) report.replicates.push_back(results[r].best);

  for (const TrajectoryResult& tr : results) {
    for (const Assignment& cand : tr.tied_best) {
      if (evaluate(p, cand) > report.best.score + kTieEps) continue;
      const auto it = std::lower_bound(report.best_tie_pool.begin(),
                                       report.best_tie_pool.end(), cand);
      if (it == report.best_tie_pool.end() || *it != cand)
        report.best_tie_pool.insert(it, cand);
    }
  }
  return report;
}

}  // namespace seatcfn
