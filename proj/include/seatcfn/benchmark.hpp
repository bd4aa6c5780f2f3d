#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seatcfn/cfn.hpp"
#include "seatcfn/compiler.hpp"
#include "seatcfn/qubo.hpp"
#include "seatcfn/seating_problem.hpp"
#include "seatcfn/solvers.hpp"

namespace seatcfn {

struct BenchSolverSpec {
  enum class Kind { kBrute, kMc, kHf, kQuboOneHot, kQuboDomainWall, kQuboApproxBinary };

  Kind kind = Kind::kMc;
  long long steps = 1000;
  int shots = 1000;
  int replicates = 1;
  int sweeps = 64;
  double swap_move_fraction = 0.5;
  double hf_ceiling = -1.0;   // <= 0 selects the default (10 * t_high)
  double hf_kappa = 0.1;
  double lambda_enc = -1.0;   // <= 0 selects default_lambda_enc
  const QuboSampler* sampler = nullptr;

  std::string tag() const;
  bool is_qubo() const;
};

struct BenchmarkRow {
  std::string solver_tag;
  std::string problem_name;
  std::string status;  // "ok", "no_valid_solution", "skipped"
  double best_score = 0.0;
  int overlap_count = 0;
  double wall_time_s = 0.0;
  double valid_fraction = -1.0;  // < 0 when not a sampler row
  Assignment assignment;         // compiled-space choices; empty unless "ok"

  bool operator==(const BenchmarkRow&) const = default;
};

struct BenchmarkReport {
  int format_version = 1;
  std::vector<BenchmarkRow> rows;

  bool operator==(const BenchmarkReport&) const = default;
};

// Cartesian product of problems x solvers. Per-cell failures (for example a
// brute-force space overflow) become "skipped" rows, not run aborts.
BenchmarkReport run_benchmark(const std::vector<std::pair<std::string, SeatingProblem>>& problems,
                              const std::vector<BenchSolverSpec>& solvers,
                              std::uint64_t seed);

std::string emit_report_tsv(const BenchmarkReport& report);
BenchmarkReport parse_report_tsv(const std::string& text);

}  // namespace seatcfn
