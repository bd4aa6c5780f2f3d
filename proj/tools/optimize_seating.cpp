#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seatcfn/benchmark.hpp"
#include "seatcfn/format.hpp"
#include "seatcfn/problem_io.hpp"
#include "seatcfn/svg_chart.hpp"

namespace {

using namespace seatcfn;

std::pair<std::string, SeatingProblem> load_problem_arg(const std::string& arg) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    const std::string name = arg.substr(prefix.size());
    const auto which = builtin_by_name(name);
    if (!which) throw std::runtime_error("unknown builtin problem '" + name + "'");
    return {name, builtin_problem(*which)};
  }
  std::string name = arg;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (name.size() > 4 && name.substr(name.size() - 4) == ".txt")
    name = name.substr(0, name.size() - 4);
  return {name, load_problem_file(arg)};
}

BenchSolverSpec::Kind solver_kind(const std::string& name) {
  if (name == "brute") return BenchSolverSpec::Kind::kBrute;
  if (name == "mc") return BenchSolverSpec::Kind::kMc;
  if (name == "hf") return BenchSolverSpec::Kind::kHf;
  if (name == "qubo-oh") return BenchSolverSpec::Kind::kQuboOneHot;
  if (name == "qubo-dw") return BenchSolverSpec::Kind::kQuboDomainWall;
  if (name == "qubo-ab") return BenchSolverSpec::Kind::kQuboApproxBinary;
  throw std::runtime_error("unknown solver '" + name + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seating optimization via pairwise cost function networks"};

  std::vector<std::string> problem_args;
  std::vector<std::string> solver_args;
  long long steps = 1000;
  int shots = 1000;
  int replicates = 1;
  std::uint64_t seed = 0;
  double swap_frac = 0.5;
  double hf_ceiling = -1.0;
  double hf_kappa = 0.1;
  double lambda_enc = -1.0;
  int sweeps = 64;
  std::string sampler_name = "anneal";
  std::string report_path;
  std::string chart_path;

  app.add_option("--problem", problem_args,
                 "Problem file path or builtin:NAME (prob1..prob5, prob5s); repeatable")
      ->required();
  app.add_option("--solver", solver_args,
                 "brute | mc | hf | qubo-oh | qubo-dw | qubo-ab; repeatable")
      ->required();
  app.add_option("--steps", steps, "Monte Carlo steps per trajectory");
  app.add_option("--shots", shots, "QUBO sampler shots");
  app.add_option("--replicates", replicates, "independent trajectories per cell");
  app.add_option("--seed", seed, "base random seed");
  app.add_option("--swap-frac", swap_frac, "fraction of proposals that swap two guests");
  app.add_option("--hf-ceiling", hf_ceiling, "hill-flattening ceiling height (default 10*t_high)");
  app.add_option("--hf-kappa", hf_kappa, "hill-flattening slope above the ceiling");
  app.add_option("--lambda-enc", lambda_enc, "one-hot/domain-wall constraint strength");
  app.add_option("--sweeps", sweeps, "sampler sweeps per shot");
  app.add_option("--sampler", sampler_name, "QUBO sampler backend: anneal | random");
  app.add_option("--report", report_path, "write the TSV benchmark report here");
  app.add_option("--chart", chart_path, "write an SVG seating chart here (single problem only)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<std::pair<std::string, SeatingProblem>> problems;
    for (const std::string& arg : problem_args) problems.push_back(load_problem_arg(arg));

    AnnealingSampler anneal_sampler(sweeps);
    RandomSampler random_sampler;
    const QuboSampler* sampler = nullptr;
    if (sampler_name == "anneal") sampler = &anneal_sampler;
    else if (sampler_name == "random") sampler = &random_sampler;
    else throw std::runtime_error("unknown sampler '" + sampler_name + "'");

    std::vector<BenchSolverSpec> specs;
    for (const std::string& arg : solver_args) {
      BenchSolverSpec spec;
      spec.kind = solver_kind(arg);
      spec.steps = steps;
      spec.shots = shots;
      spec.replicates = replicates;
      spec.sweeps = sweeps;
      spec.swap_move_fraction = swap_frac;
      spec.hf_ceiling = hf_ceiling;
      spec.hf_kappa = hf_kappa;
      spec.lambda_enc = lambda_enc;
      spec.sampler = sampler;
      specs.push_back(spec);
    }

    const BenchmarkReport report = run_benchmark(problems, specs, seed);

    std::printf("%-18s %-10s %-18s %-10s %-9s %s\n", "solver", "problem", "best_score",
                "overlaps", "valid", "time_s");
    for (const BenchmarkRow& row : report.rows) {
      const std::string score = row.status == "ok" ? format_double(row.best_score) : row.status;
      const std::string overlaps = row.status == "ok" ? std::to_string(row.overlap_count) : "-";
      const std::string valid =
          row.valid_fraction >= 0.0 ? format_double(row.valid_fraction) : "-";
      std::printf("%-18s %-10s %-18s %-10s %-9s %.3f\n", row.solver_tag.c_str(),
                  row.problem_name.c_str(), score.c_str(), overlaps.c_str(), valid.c_str(),
                  row.wall_time_s);
    }

    if (!report_path.empty()) write_file(report_path, emit_report_tsv(report));

    if (!chart_path.empty()) {
      if (problems.size() != 1)
        throw std::runtime_error("--chart needs exactly one --problem");
      const SeatingProblem& problem = problems.front().second;
      const CompiledProblem compiled = compile_cfn(problem);
      const BenchmarkRow* best = nullptr;
      for (const BenchmarkRow& row : report.rows)
        if (row.status == "ok" && (best == nullptr || row.best_score < best->best_score))
          best = &row;
      if (best != nullptr) {
        const auto seating = resolve_seating(problem, compiled.map, best->assignment);
        write_file(chart_path, render_chart(problem, &seating));
      } else {
        write_file(chart_path, render_chart(problem, nullptr));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
