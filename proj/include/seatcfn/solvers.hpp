#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seatcfn/cfn.hpp"

namespace seatcfn {

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BruteForceMode { kAllCombos, kPermutationsOnly };

struct BruteForceResult {
  double optimum = 0.0;
  std::vector<SolutionRecord> optima;  // every argmin, lexicographic
  long long states_visited = 0;
};

// Exhaustive enumeration of D^N choice combinations, or of the injective
// (no two nodes on one seat) subset. Throws SolveError when the search
// space exceeds `state_guard`.
BruteForceResult brute_force_solve(const CfnProblem& p, BruteForceMode mode,
                                   long long state_guard = 100000000);

enum class ScheduleShape { kGeometric };

struct AnnealSchedule {
  double t_high = 1.0;
  double t_low = 0.01;
  long long steps = 1000;
  ScheduleShape shape = ScheduleShape::kGeometric;

  double temperature(long long step) const;
};

// t_high scales with the largest pair term so early moves are near-random;
// t_low freezes the walk at the end.
AnnealSchedule default_schedule(const CfnProblem& p, long long steps);

struct McConfig {
  AnnealSchedule schedule;
  double swap_move_fraction = 0.5;
  std::uint64_t seed = 0;
  // Distinct assignments tied at the running best kept per trajectory
  // (0 disables). Lets a single trajectory report every optimum it visits.
  int tie_limit = 16;
};

struct HfConfig {
  double ceiling_h = 1.0;       // > 0
  double slope_kappa = 0.1;     // in (0, 1]; 1 restores plain Metropolis
};

// Soft clamp: raw below best_so_far + h passes through; the excess above
// the ceiling is scaled by kappa. Monotone and continuous in raw.
double hf_transform(double raw_score, double best_so_far, const HfConfig& config);

HfConfig default_hf(const AnnealSchedule& schedule);

struct TrajectoryResult {
  SolutionRecord best;
  std::vector<Assignment> tied_best;  // sorted; contains best.assignment
  Assignment final_state;
  std::uint64_t trace_hash = 0;  // fingerprint of the proposal/acceptance sequence
  // (step, running best score) at each strict improvement, in step order.
  std::vector<std::pair<long long, double>> improvements;
};

TrajectoryResult mc_solve_traced(const CfnProblem& p, const McConfig& config);
SolutionRecord mc_solve(const CfnProblem& p, const McConfig& config);

TrajectoryResult hf_solve_traced(const CfnProblem& p, const McConfig& config,
                                 const HfConfig& hf);
SolutionRecord hf_solve(const CfnProblem& p, const McConfig& config, const HfConfig& hf);

struct SolverSpec {
  McConfig mc;
  std::optional<HfConfig> hf;  // engaged for hill flattening
};

struct ReplicateReport {
  SolutionRecord best;                     // ties broken by lowest replicate index
  std::vector<SolutionRecord> replicates;  // by replicate index
  // Distinct assignments scoring within 1e-9 of the best, pooled over all
  // replicates' tie sets; sorted.
  std::vector<Assignment> best_tie_pool;
};

// Independent trajectories with seeds base_seed + r. The report does not
// depend on execution order or the degree of parallelism.
ReplicateReport run_replicates(const CfnProblem& p, const SolverSpec& spec,
                               int replicate_count, std::uint64_t base_seed,
                               bool parallel = true);

}  // namespace seatcfn
