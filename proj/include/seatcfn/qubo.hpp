#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "seatcfn/cfn.hpp"

namespace seatcfn {

// Quadratic pseudo-Boolean objective: constant + sum(linear_i b_i) +
// sum(quadratic_ij b_i b_j).
struct QuboProblem {
  int bit_count = 0;
  std::vector<double> linear;
  std::vector<std::tuple<int, int, double>> quadratic;  // i < j, unique, sorted
  double constant_offset = 0.0;
};

enum class QuboEncoding { kOneHot, kDomainWall, kApproxBinary };

const char* encoding_name(QuboEncoding encoding);

struct EncodingMap {
  QuboEncoding encoding = QuboEncoding::kOneHot;
  std::vector<int> bit_offset;     // per node
  std::vector<int> bit_length;     // per node; one-hot D, domain-wall D-1,
                                   // approximate binary ceil(log2 D)
  std::vector<int> choice_counts;  // D_i per node
  double lambda_enc = 0.0;         // one-hot / domain-wall constraint strength

  int node_count() const { return static_cast<int>(bit_offset.size()); }
  int bit_count() const;
};

struct BitSample {
  std::vector<std::uint8_t> bits;
  double energy = 0.0;
  int multiplicity = 0;
};

struct EncodedQubo {
  QuboProblem qubo;
  EncodingMap map;
  double fit_residual = 0.0;  // approximate binary only: sum of block RMSEs
};

int qubit_count(const CfnProblem& p, QuboEncoding encoding);

// Constraint strength large enough that no invalid bitstring can undercut a
// valid optimum: twice the largest per-node sum of |pair entries|, plus one.
double default_lambda_enc(const CfnProblem& p);

EncodedQubo encode_one_hot(const CfnProblem& p, double lambda_enc);
EncodedQubo encode_domain_wall(const CfnProblem& p, double lambda_enc);

// Every bit pattern decodes to a choice (value mod D), so samples always
// yield seat assignments; cost tables are least-squares fit by quadratic
// forms in the code bits, which is exact only for representable blocks.
EncodedQubo encode_approx_binary(const CfnProblem& p);

// nullopt when the bits violate the encoding's validity structure
// (one-hot: exactly one hot bit per node; domain-wall: monotone
// non-increasing). Approximate binary decodes are always valid.
std::optional<Assignment> decode_bits(const EncodingMap& map,
                                      const std::vector<std::uint8_t>& bits);

// Deterministic inverse writer for a valid assignment.
std::vector<std::uint8_t> encode_assignment(const EncodingMap& map, const Assignment& a);

double qubo_energy(const QuboProblem& q, const std::vector<std::uint8_t>& bits);

// Sampler backend seam; the CLI can swap implementations.
class QuboSampler {
 public:
  virtual ~QuboSampler() = default;
  virtual std::string name() const = 0;
  // Aggregated by distinct bitstring; multiplicities sum to shots.
  virtual std::vector<BitSample> sample(const QuboProblem& q, int shots,
                                        std::uint64_t seed) const = 0;
};

// Per-shot single-bit-flip Metropolis anneal with geometric cooling.
class AnnealingSampler final : public QuboSampler {
 public:
  explicit AnnealingSampler(int sweeps = 64) : sweeps_(sweeps) {}
  std::string name() const override { return "anneal"; }
  std::vector<BitSample> sample(const QuboProblem& q, int shots,
                                std::uint64_t seed) const override;

 private:
  int sweeps_;
};

// Uniform random bitstrings; a trivial reference backend.
class RandomSampler final : public QuboSampler {
 public:
  std::string name() const override { return "random"; }
  std::vector<BitSample> sample(const QuboProblem& q, int shots,
                                std::uint64_t seed) const override;
};

std::vector<BitSample> sample_qubo(const QuboProblem& q, int shots, int sweeps,
                                   std::uint64_t seed);

struct QuboSolveOptions {
  int shots = 1000;
  int sweeps = 64;
  std::uint64_t seed = 0;
  double lambda_enc = -1.0;  // <= 0 selects default_lambda_enc
  int keep_top = 64;         // distinct valid decodes retained
  const QuboSampler* sampler = nullptr;  // null: AnnealingSampler(sweeps)
};

struct QuboSolveResult {
  std::optional<SolutionRecord> best;     // empty: no valid solution
  std::vector<SolutionRecord> top_valid;  // distinct valid decodes, best first
  long long valid_shots = 0;
  long long invalid_shots = 0;
  long long distinct_bitstrings = 0;
  double lambda_enc = 0.0;
  double fit_residual = 0.0;

  double valid_fraction() const {
    const long long total = valid_shots + invalid_shots;
    return total == 0 ? 0.0 : static_cast<double>(valid_shots) / static_cast<double>(total);
  }
};

// Encode, sample, decode every sample, and re-score valid assignments with
// the CFN evaluator (QUBO energies are never trusted for reporting).
QuboSolveResult solve_via_qubo(const CfnProblem& p, QuboEncoding encoding,
                               const QuboSolveOptions& options = {});

}  // namespace seatcfn
