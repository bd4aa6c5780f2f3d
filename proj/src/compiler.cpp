#include "seatcfn/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace seatcfn {

double gaussian_penalty(double distance, double p_prox, double lambda) {
  const double inv = 1.0 / (lambda * lambda);
  return p_prox * std::exp(inv - distance * distance * inv);
}

std::vector<double> build_overlap_block(double p_overlap,
                                        const std::vector<int>& seats_a,
                                        const std::vector<int>& seats_b) {
  std::vector<double> block(seats_a.size() * seats_b.size(), 0.0);
  for (std::size_t r = 0; r < seats_a.size(); ++r)
    for (std::size_t c = 0; c < seats_b.size(); ++c)
      if (seats_a[r] == seats_b[c]) block[r * seats_b.size() + c] = p_overlap;
  return block;
}

std::vector<double> build_pair_block(const std::vector<SeatPair>& sigma, double p,
                                     const std::vector<int>& seats_a,
                                     const std::vector<int>& seats_b) {
  std::vector<double> block(seats_a.size() * seats_b.size(), 0.0);
  for (std::size_t r = 0; r < seats_a.size(); ++r) {
    for (std::size_t c = 0; c < seats_b.size(); ++c) {
      const SeatPair key{std::min(seats_a[r], seats_b[c]), std::max(seats_a[r], seats_b[c])};
      if (std::binary_search(sigma.begin(), sigma.end(), key))
        block[r * seats_b.size() + c] = p;
    }
  }
  return block;
}

std::vector<double> build_proximity_block(double p_prox, double lambda,
                                          const std::vector<Seat>& seats,
                                          const std::vector<int>& seats_a,
                                          const std::vector<int>& seats_b) {
  std::vector<double> block(seats_a.size() * seats_b.size(), 0.0);
  for (std::size_t r = 0; r < seats_a.size(); ++r)
    for (std::size_t c = 0; c < seats_b.size(); ++c)
      block[r * seats_b.size() + c] =
          gaussian_penalty(seat_distance(seats[seats_a[r]], seats[seats_b[c]]), p_prox, lambda);
  return block;
}

namespace {

// Constraint score for one constraint at a concrete seat pair.
double constraint_value(const PairConstraint& c, int seat0, int seat1,
                        const SeatingProblem& p, const std::vector<SeatPair>& adj,
                        const std::vector<SeatPair>& tbl) {
  switch (c.kind) {
    case ConstraintKind::kAdjacent: {
      const SeatPair key{std::min(seat0, seat1), std::max(seat0, seat1)};
      return std::binary_search(adj.begin(), adj.end(), key) ? c.penalty : 0.0;
    }
    case ConstraintKind::kSameTable: {
      const SeatPair key{std::min(seat0, seat1), std::max(seat0, seat1)};
      return std::binary_search(tbl.begin(), tbl.end(), key) ? c.penalty : 0.0;
    }
    case ConstraintKind::kProximity:
      return gaussian_penalty(seat_distance(p.seats[seat0], p.seats[seat1]), c.penalty, c.lambda);
  }
  return 0.0;
}

}  // namespace

CompiledProblem compile_cfn(const SeatingProblem& problem) {
  CompiledProblem out;
  NodeChoiceMap& map = out.map;
  CfnProblem& cfn = out.cfn;

  const int n_guests = problem.guest_count();
  map.guest_to_node.assign(n_guests, -1);
  map.fixed_seat.assign(n_guests, -1);
  for (const auto& [g, s] : problem.fixed_assignments) map.fixed_seat[g] = s;
  for (int g = 0; g < n_guests; ++g) {
    if (map.fixed_seat[g] >= 0) continue;
    map.guest_to_node[g] = static_cast<int>(map.node_to_guest.size());
    map.node_to_guest.push_back(g);
  }

  const int n_nodes = map.node_count();
  cfn.choices.resize(n_nodes);
  cfn.one_node.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    cfn.choices[i] = problem.allowed_seats(map.node_to_guest[i]);
    if (cfn.choices[i].empty())
      throw CompileError("guest '" + problem.guests[map.node_to_guest[i]].id +
                         "' has no allowed seat after restraints");
    cfn.one_node[i].assign(cfn.choices[i].size(), 0.0);
  }
  cfn.overlap_penalty = problem.overlap_penalty;

  const auto adj = problem.adjacent_seat_pairs();
  const auto tbl = problem.same_table_seat_pairs();

  // Overlap terms against fixed guests collapse onto the free guest's
  // one-node table (or the offset when both guests are fixed).
  for (int g0 = 0; g0 < n_guests; ++g0) {
    if (map.fixed_seat[g0] < 0) continue;
    for (int g1 = 0; g1 < n_guests; ++g1) {
      if (g1 == g0) continue;
      if (map.fixed_seat[g1] >= 0) {
        if (g1 > g0 && map.fixed_seat[g0] == map.fixed_seat[g1])
          cfn.constant_offset += problem.overlap_penalty;
        continue;
      }
      const int node = map.guest_to_node[g1];
      for (std::size_t c = 0; c < cfn.choices[node].size(); ++c)
        if (cfn.choices[node][c] == map.fixed_seat[g0])
          cfn.one_node[node][c] += problem.overlap_penalty;
    }
  }

  std::map<std::pair<int, int>, std::vector<double>> acc;
  for (const PairConstraint& c : problem.constraints) {
    const int n0 = map.guest_to_node[c.guest0];
    const int n1 = map.guest_to_node[c.guest1];
    if (n0 < 0 && n1 < 0) {
      cfn.constant_offset +=
          constraint_value(c, map.fixed_seat[c.guest0], map.fixed_seat[c.guest1], problem, adj, tbl);
      continue;
    }
    if (n0 < 0 || n1 < 0) {
      const int fixed_seat = n0 < 0 ? map.fixed_seat[c.guest0] : map.fixed_seat[c.guest1];
      const int node = n0 < 0 ? n1 : n0;
      for (std::size_t ch = 0; ch < cfn.choices[node].size(); ++ch)
        cfn.one_node[node][ch] +=
            constraint_value(c, fixed_seat, cfn.choices[node][ch], problem, adj, tbl);
      continue;
    }
    const int a = std::min(n0, n1);
    const int b = std::max(n0, n1);
    auto& block = acc[{a, b}];
    const auto& sa = cfn.choices[a];
    const auto& sb = cfn.choices[b];
    if (block.empty()) block.assign(sa.size() * sb.size(), 0.0);
    for (std::size_t r = 0; r < sa.size(); ++r)
      for (std::size_t col = 0; col < sb.size(); ++col)
        block[r * sb.size() + col] += constraint_value(c, sa[r], sb[col], problem, adj, tbl);
  }

  for (auto& [key, values] : acc) {
    const bool all_zero = std::all_of(values.begin(), values.end(),
                                      [](double v) { return v == 0.0; });
    if (all_zero) continue;
    cfn.blocks.push_back({key.first, key.second, std::move(values)});
  }

  cfn.finalize();
  return out;
}

}  // namespace seatcfn
