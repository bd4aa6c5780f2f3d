#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace seatcfn {

// Per-node choice indices; entry i selects choices[i][assignment[i]].
using Assignment = std::vector<int>;

// Dense two-node score block for a node pair, row-major over the first
// node's choices.
struct PairBlock {
  int node_a = -1;  // node_a < node_b
  int node_b = -1;
  std::vector<double> values;  // size = D_a * D_b
};

// Pairwise-decomposable cost function over per-node discrete choices.
// Choice entries are global seat ids. The same-seat overlap penalty applies
// to every node pair, so it is kept as one implicit scalar instead of being
// materialized into N(N-1)/2 dense blocks; evaluate and delta_evaluate
// honor it alongside the explicit blocks.
struct CfnProblem {
  std::vector<std::vector<int>> choices;
  std::vector<std::vector<double>> one_node;
  std::vector<PairBlock> blocks;  // unique pairs, sorted by (node_a, node_b)
  double constant_offset = 0.0;
  double overlap_penalty = 0.0;  // 0 disables the implicit term

  int node_count() const { return static_cast<int>(choices.size()); }
  int choice_count(int node) const {
    return static_cast<int>(choices[static_cast<std::size_t>(node)].size());
  }

  // Validates block shapes and builds the per-node incidence index used by
  // delta evaluation. Call after filling the fields.
  void finalize();

  // (other node, block index) pairs touching `node`. Requires finalize().
  const std::vector<std::pair<int, int>>& incident(int node) const {
    return incident_[static_cast<std::size_t>(node)];
  }

 private:
  std::vector<std::vector<std::pair<int, int>>> incident_;
};

struct SolutionRecord {
  Assignment assignment;
  double score = 0.0;
  int overlap_count = 0;
  std::string solver_tag;
  std::uint64_t seed = 0;
  long long steps_or_shots = 0;
};

double evaluate(const CfnProblem& p, const Assignment& a);

// Score change from switching `node` to `new_choice`, touching only that
// node's rows. Exact to within float noise of a full re-evaluation.
double delta_evaluate(const CfnProblem& p, const Assignment& a, int node, int new_choice);

// Unordered node pairs whose selected global seats coincide.
int count_overlaps(const CfnProblem& p, const Assignment& a);

// Dense D_a x D_b block combining the explicit pair block (if any) with the
// implicit overlap entries. Used by encoders and brute-force checks.
std::vector<double> effective_pair_block(const CfnProblem& p, int node_a, int node_b);

// True when the pair carries any nonzero explicit or implicit term.
bool pair_interacts(const CfnProblem& p, int node_a, int node_b);

bool valid_assignment(const CfnProblem& p, const Assignment& a);

}  // namespace seatcfn
