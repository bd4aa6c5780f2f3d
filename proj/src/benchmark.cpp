#include "seatcfn/benchmark.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "seatcfn/format.hpp"

namespace seatcfn {

bool BenchSolverSpec::is_qubo() const {
  return kind == Kind::kQuboOneHot || kind == Kind::kQuboDomainWall ||
         kind == Kind::kQuboApproxBinary;
}

std::string BenchSolverSpec::tag() const {
  switch (kind) {
    case Kind::kBrute: return "brute";
    case Kind::kMc: return "mc_" + std::to_string(steps) + "x" + std::to_string(replicates);
    case Kind::kHf: return "hf_" + std::to_string(steps) + "x" + std::to_string(replicates);
    case Kind::kQuboOneHot: return "qubo-oh_" + std::to_string(shots);
    case Kind::kQuboDomainWall: return "qubo-dw_" + std::to_string(shots);
    case Kind::kQuboApproxBinary: return "qubo-ab_" + std::to_string(shots);
  }
  return "unknown";
}

namespace {

BenchmarkRow run_cell(const std::string& problem_name, const CfnProblem& cfn,
                      const BenchSolverSpec& spec, std::uint64_t seed) {
  BenchmarkRow row;
  row.solver_tag = spec.tag();
  row.problem_name = problem_name;

  const auto start = std::chrono::steady_clock::now();
  try {
    switch (spec.kind) {
      case BenchSolverSpec::Kind::kBrute: {
        const auto result = brute_force_solve(cfn, BruteForceMode::kPermutationsOnly);
        if (result.optima.empty()) {
          row.status = "skipped";
          break;
        }
        row.status = "ok";
        row.best_score = result.optima.front().score;
        row.overlap_count = result.optima.front().overlap_count;
        row.assignment = result.optima.front().assignment;
        break;
      }
      case BenchSolverSpec::Kind::kMc:
      case BenchSolverSpec::Kind::kHf: {
        SolverSpec solver;
        solver.mc.schedule = default_schedule(cfn, spec.steps);
        solver.mc.swap_move_fraction = spec.swap_move_fraction;
        if (spec.kind == BenchSolverSpec::Kind::kHf) {
          HfConfig hf = default_hf(solver.mc.schedule);
          if (spec.hf_ceiling > 0.0) hf.ceiling_h = spec.hf_ceiling;
          hf.slope_kappa = spec.hf_kappa;
          solver.hf = hf;
        }
        const auto report = run_replicates(cfn, solver, spec.replicates, seed);
        row.status = "ok";
        row.best_score = report.best.score;
        row.overlap_count = report.best.overlap_count;
        row.assignment = report.best.assignment;
        break;
      }
      case BenchSolverSpec::Kind::kQuboOneHot:
      case BenchSolverSpec::Kind::kQuboDomainWall:
      case BenchSolverSpec::Kind::kQuboApproxBinary: {
        QuboSolveOptions options;
        options.shots = spec.shots;
        options.sweeps = spec.sweeps;
        options.seed = seed;
        options.lambda_enc = spec.lambda_enc;
        options.sampler = spec.sampler;
        const QuboEncoding encoding =
            spec.kind == BenchSolverSpec::Kind::kQuboOneHot ? QuboEncoding::kOneHot
            : spec.kind == BenchSolverSpec::Kind::kQuboDomainWall
                ? QuboEncoding::kDomainWall
                : QuboEncoding::kApproxBinary;
        const auto result = solve_via_qubo(cfn, encoding, options);
        row.valid_fraction = result.valid_fraction();
        if (!result.best) {
          row.status = "no_valid_solution";
          break;
        }
        row.status = "ok";
        row.best_score = result.best->score;
        row.overlap_count = result.best->overlap_count;
        row.assignment = result.best->assignment;
        break;
      }
    }
  } catch (const SolveError&) {
    row.status = "skipped";
  }
  row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string::npos ? line.size() - pos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return out;
}

}  // namespace

BenchmarkReport run_benchmark(const std::vector<std::pair<std::string, SeatingProblem>>& problems,
                              const std::vector<BenchSolverSpec>& solvers,
                              std::uint64_t seed) {
  BenchmarkReport report;
  for (const auto& [name, problem] : problems) {
    const CompiledProblem compiled = compile_cfn(problem);
    for (const BenchSolverSpec& spec : solvers)
      report.rows.push_back(run_cell(name, compiled.cfn, spec, seed));
  }
  return report;
}

std::string emit_report_tsv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "format_version\t" << report.format_version << "\n";
  out << "solver\tproblem\tstatus\tbest_score\toverlap_count\twall_time_s\tvalid_fraction\tassignment\n";
  for (const BenchmarkRow& row : report.rows) {
    out << row.solver_tag << "\t" << row.problem_name << "\t" << row.status << "\t";
    if (row.status == "ok")
      out << format_double(row.best_score) << "\t" << row.overlap_count << "\t";
    else
      out << "-\t-\t";
    out << format_double(row.wall_time_s) << "\t";
    if (row.valid_fraction >= 0.0)
      out << format_double(row.valid_fraction);
    else
      out << "-";
    out << "\t";
    if (row.assignment.empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < row.assignment.size(); ++i) {
        if (i) out << ",";
        out << row.assignment[i];
      }
    }
    out << "\n";
  }
  return out.str();
}

BenchmarkReport parse_report_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty report");
  auto header = split_tabs(line);
  if (header.size() != 2 || header[0] != "format_version")
    throw std::runtime_error("missing format_version header");
  BenchmarkReport report;
  const auto version = parse_int(header[1]);
  if (!version) throw std::runtime_error("bad format_version");
  report.format_version = *version;
  if (!std::getline(in, line)) throw std::runtime_error("missing column header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 8) throw std::runtime_error("bad report row: " + line);
    BenchmarkRow row;
    row.solver_tag = fields[0];
    row.problem_name = fields[1];
    row.status = fields[2];
    if (fields[3] != "-") {
      const auto score = parse_double(fields[3]);
      const auto overlaps = parse_int(fields[4]);
      if (!score || !overlaps) throw std::runtime_error("bad score fields: " + line);
      row.best_score = *score;
      row.overlap_count = *overlaps;
    }
    const auto wall = parse_double(fields[5]);
    if (!wall) throw std::runtime_error("bad wall_time_s: " + line);
    row.wall_time_s = *wall;
    if (fields[6] != "-") {
      const auto fraction = parse_double(fields[6]);
      if (!fraction) throw std::runtime_error("bad valid_fraction: " + line);
      row.valid_fraction = *fraction;
    }
    if (fields[7] != "-") {
      std::size_t pos = 0;
      const std::string& blob = fields[7];
      while (pos <= blob.size()) {
        const std::size_t comma = blob.find(',', pos);
        const std::string token =
            blob.substr(pos, comma == std::string::npos ? blob.size() - pos : comma - pos);
        const auto value = parse_int(token);
        if (!value) throw std::runtime_error("bad assignment entry: " + line);
        row.assignment.push_back(*value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace seatcfn
