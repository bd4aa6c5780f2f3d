#include "seatcfn/cfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seatcfn {

void CfnProblem::finalize() {
  const int n = node_count();
  if (static_cast<int>(one_node.size()) != n)
    throw std::invalid_argument("one_node table count must match node count");
  for (int i = 0; i < n; ++i) {
    if (choices[i].empty())
      throw std::invalid_argument("node " + std::to_string(i) + " has no choices");
    if (one_node[i].size() != choices[i].size())
      throw std::invalid_argument("one_node table size mismatch at node " + std::to_string(i));
    for (double v : one_node[i])
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite one-node score");
  }

  std::sort(blocks.begin(), blocks.end(), [](const PairBlock& x, const PairBlock& y) {
    return std::pair(x.node_a, x.node_b) < std::pair(y.node_a, y.node_b);
  });
  incident_.assign(n, {});
  int prev_a = -1, prev_b = -1;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const PairBlock& blk = blocks[k];
    if (blk.node_a < 0 || blk.node_b >= n || blk.node_a >= blk.node_b)
      throw std::invalid_argument("pair block needs 0 <= a < b < node_count");
    if (blk.node_a == prev_a && blk.node_b == prev_b)
      throw std::invalid_argument("duplicate pair block");
    prev_a = blk.node_a;
    prev_b = blk.node_b;
    if (blk.values.size() !=
        static_cast<std::size_t>(choice_count(blk.node_a)) * choice_count(blk.node_b))
      throw std::invalid_argument("pair block shape mismatch");
    for (double v : blk.values)
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite pair score");
    incident_[blk.node_a].emplace_back(blk.node_b, static_cast<int>(k));
    incident_[blk.node_b].emplace_back(blk.node_a, static_cast<int>(k));
  }
}

bool valid_assignment(const CfnProblem& p, const Assignment& a) {
  if (static_cast<int>(a.size()) != p.node_count()) return false;
  for (int i = 0; i < p.node_count(); ++i)
    if (a[i] < 0 || a[i] >= p.choice_count(i)) return false;
  return true;
}

double evaluate(const CfnProblem& p, const Assignment& a) {
  double total = p.constant_offset;
  const int n = p.node_count();
  for (int i = 0; i < n; ++i) total += p.one_node[i][a[i]];
  for (const PairBlock& blk : p.blocks) {
    const int cols = p.choice_count(blk.node_b);
    total += blk.values[a[blk.node_a] * cols + a[blk.node_b]];
  }
  if (p.overlap_penalty != 0.0) total += p.overlap_penalty * count_overlaps(p, a);
  return total;
}

double delta_evaluate(const CfnProblem& p, const Assignment& a, int node, int new_choice) {
  const int old_choice = a[node];
  if (new_choice == old_choice) return 0.0;

  double delta = p.one_node[node][new_choice] - p.one_node[node][old_choice];

  for (const auto& [other, blk_idx] : p.incident(node)) {
    const PairBlock& blk = p.blocks[blk_idx];
    const int cols = p.choice_count(blk.node_b);
    const int oc = a[other];
    if (blk.node_a == node) {
      delta += blk.values[new_choice * cols + oc] - blk.values[old_choice * cols + oc];
    } else {
      delta += blk.values[oc * cols + new_choice] - blk.values[oc * cols + old_choice];
    }
  }

  if (p.overlap_penalty != 0.0) {
    const int old_seat = p.choices[node][old_choice];
    const int new_seat = p.choices[node][new_choice];
    int collisions = 0;
    for (int j = 0; j < p.node_count(); ++j) {
      if (j == node) continue;
      const int sj = p.choices[j][a[j]];
      if (sj == new_seat) ++collisions;
      if (sj == old_seat) --collisions;
    }
    delta += p.overlap_penalty * collisions;
  }
  return delta;
}

int count_overlaps(const CfnProblem& p, const Assignment& a) {
  const int n = p.node_count();
  int overlaps = 0;
  for (int i = 0; i < n; ++i) {
    const int si = p.choices[i][a[i]];
    for (int j = i + 1; j < n; ++j)
      if (si == p.choices[j][a[j]]) ++overlaps;
  }
  return overlaps;
}

std::vector<double> effective_pair_block(const CfnProblem& p, int node_a, int node_b) {
  const int rows = p.choice_count(node_a);
  const int cols = p.choice_count(node_b);
  std::vector<double> block(static_cast<std::size_t>(rows) * cols, 0.0);
  for (const auto& [other, blk_idx] : p.incident(node_a)) {
    if (other != node_b) continue;
    const PairBlock& blk = p.blocks[blk_idx];
    if (blk.node_a == node_a) {
      block = blk.values;
    } else {
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) block[r * cols + c] = blk.values[c * rows + r];
    }
    break;
  }
  if (p.overlap_penalty != 0.0) {
    const auto& sa = p.choices[node_a];
    const auto& sb = p.choices[node_b];
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (sa[r] == sb[c]) block[r * cols + c] += p.overlap_penalty;
  }
  return block;
}

bool pair_interacts(const CfnProblem& p, int node_a, int node_b) {
  for (const auto& [other, blk_idx] : p.incident(node_a)) {
    (void)blk_idx;
    if (other == node_b) return true;
  }
  if (p.overlap_penalty != 0.0) {
    const auto& sa = p.choices[node_a];
    const auto& sb = p.choices[node_b];
    for (int s : sa)
      if (std::find(sb.begin(), sb.end(), s) != sb.end()) return true;
  }
  return false;
}

}  // namespace seatcfn
